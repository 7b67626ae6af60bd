#include "doctest.h"
#include "fcmono/errors.hpp"
#include "fcmono/structure.hpp"

using namespace fcmono;

namespace {

ParameterSet P(const char* a, const char* b, const char* c) { return ParameterSet::parse(a, b, c); }

void require_all(const std::vector<IdentityCheck>& checks) {
  for (const auto& c : checks) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.passed);
  }
}

}  // namespace

TEST_CASE("irreducibility verdicts") {
  const auto half = check_irr(P("1/2", "1/2", "1,1,1"));
  CHECK(half.mon_irreducible == Tri::holds);
  CHECK(half.ref_irreducible == Tri::holds);
  CHECK(half.minus_one_count() == 0);

  const auto zero = check_irr(P("0", "1/2", "1/3"));
  CHECK(zero.mon_irreducible == Tri::fails);
  REQUIRE_FALSE(zero.failures.empty());
  CHECK(zero.failures.front().which == "alpha");
  CHECK(zero.failures.front().word == IndexWord({0}));
  CHECK(zero.ref_irreducible == Tri::fails);

  const auto two = check_irr(P("1/3", "1/5", "1/2,1/2,1"));
  CHECK(two.mon_irreducible == Tri::holds);
  CHECK(two.ref_irreducible == Tri::fails);
  CHECK(two.minus_one_count() == 2);

  const auto one = check_irr(P("1/3", "1/5", "1/2,1/7"));
  CHECK(one.ref_irreducible == Tri::holds);
  const auto ab = check_irr(P("1/5", "7/10", "1/2,1/7"));
  CHECK(ab.minus_one_members == std::vector<std::string>{"gamma_1", "alpha/beta"});
  CHECK(ab.ref_irreducible == Tri::fails);
}

TEST_CASE("two-gamma witness") {
  for (auto params : {P("1/3", "1/5", "1/2,1/2"), P("1/5", "1/7", "1/2,1/2,1/3"),
                      P("1/5", "1/7", "1/3,1/2,1/2"), P("1/4", "2/3", "1/2,1/6,1/2")}) {
    INFO(params.to_string());
    const auto sys = build_system(params);
    const auto w = build_reducible_witness(sys);
    CHECK(w.kind == WitnessKind::two_gammas);
    CHECK(w.W_plus.size() == sys.size / 2);
    require_all(verify_witness(sys, w));
  }
}

TEST_CASE("gamma and alpha/beta witness") {
  for (auto params : {P("1/3", "5/6", "1/2,1/5"), P("1/5", "7/10", "1/7,1/2"),
                      P("1/3", "5/6", "1/2")}) {
    INFO(params.to_string());
    const auto sys = build_system(params);
    const auto w = build_reducible_witness(sys);
    CHECK(w.kind == WitnessKind::gamma_and_ab);
    require_all(verify_witness(sys, w));
    // e_{1..1} = f+_{12;1..1} / 2
    const Vector top = basis_vector(IndexWord::ones(sys.n));
    CHECK(equal(scale(CycNum(Rational(1, 2)), w.W_plus.back()), top));
  }
}

TEST_CASE("perturbed witness fails") {
  const auto sys = build_system(P("1/5", "1/7", "1/2,1/2,1/3"));
  auto w = build_reducible_witness(sys);
  w.W_plus[0][0] += CycNum(1);
  CHECK_FALSE(all_passed(verify_witness(sys, w)));
}

TEST_CASE("witness precondition") {
  const auto sys = build_system(P("1/3", "1/5", "1/2,1/7"));
  CHECK_THROWS_AS(build_reducible_witness(sys), PreconditionError);
}

TEST_CASE("order probes") {
  CHECK(conjugate_orbit_probe(build_system(P("1/3", "1/5", "1/2")), 1, 10).order == 2);
  CHECK(conjugate_orbit_probe(build_system(P("1/3", "1/5", "1/7,1/5")), 2, 10).order == 5);
  CHECK(conjugate_orbit_probe(build_system(P("1/3", "1/5", "2/3")), 1, 10).order == 3);
  const auto unipotent = conjugate_orbit_probe(build_system(P("1/3", "1/5", "1")), 1, 50);
  CHECK_FALSE(unipotent.finite);
  CHECK(unipotent.powers_tried == 50);
}

TEST_CASE("group enumeration") {
  CHECK(enumerate_group({ExactMatrix::identity(2)}, 10).element_count == 1);
  const auto sys = build_system(P("1/5", "1/7", "1/3"));
  const auto cyclic = enumerate_group({sys.M[1]}, 100);
  CHECK(cyclic.complete);
  CHECK(cyclic.element_count == 3);
  const auto half = build_system(P("1/2", "1/2", "1,1"));
  const auto big = enumerate_group(monodromy_generators(half), 2000);
  CHECK_FALSE(big.complete);
  CHECK(big.element_count == 2000);
}
