#include <random>

#include "doctest.h"
#include "fcmono/errors.hpp"
#include "fcmono/identities.hpp"
#include "fcmono/monodromy.hpp"

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

TEST_CASE("G_k for special gammas") {
  CHECK(build_Gk(CycNum(1)) == ExactMatrix{{1, -1}, {0, 1}});
  const ExactMatrix g = build_Gk(CycNum(-1));
  CHECK(g == ExactMatrix{{1, 1}, {0, -1}});
  CHECK((g * g).is_identity());
  const CycNum z3 = cyclotomic(3, 1);
  const ExactMatrix g3 = build_Gk(z3);
  CHECK(g3(0, 1) == -cyclotomic(3, 2));
  CHECK(g3(1, 1) == cyclotomic(3, 2));
  const CycNum z5 = cyclotomic(5, 1);
  CHECK((inverse(build_Gk(z5)) * build_Gk(z5)).is_identity());
  CHECK((build_Gk_inverse(z5) * build_Gk(z5)).is_identity());
  CHECK(det(build_Gk(z5)) == z5.inverse());
  CHECK_THROWS_AS(build_Gk(CycNum(0)), PreconditionError);
}

TEST_CASE("M_k acts in its own tensor slot") {
  const CycNum z7 = cyclotomic(7, 2);
  CHECK(build_Mk(1, 1, z7) == build_Gk(z7));
  const ExactMatrix m2 = build_Mk(2, 2, CycNum(1));
  const Vector e11 = basis_vector(IndexWord({1, 1}));
  const Vector expected = sub(e11, basis_vector(IndexWord({1, 0})));
  CHECK(equal(m2 * e11, expected));
  const ExactMatrix m1 = build_Mk(2, 1, z7);
  CHECK(equal(m1 * e11, paper_kron(build_Gk(z7) * Vector{0, 1}, Vector{0, 1})));
  CHECK(m1.is_upper_triangular());
  CHECK_THROWS_AS(build_Mk(2, 3, z7), PreconditionError);
  CHECK_THROWS_AS(build_Mk(2, 0, z7), PreconditionError);
}

TEST_CASE("v and M_0 in the half-integral case") {
  for (const char* c : {"1", "1,1", "1,1,1"}) {
    const auto params = P("1/2", "1/2", c);
    const std::size_t n = params.n();
    const Vector v = build_v(params);
    const int sign_n = n % 2 == 0 ? 1 : -1;
    CHECK(v[0] == CycNum(4 * sign_n));
    const ExactMatrix m0 = build_M0(params);
    const std::size_t last = v.size() - 1;
    for (const auto& word : IndexWord::all(n)) {
      const std::size_t r = word.rank();
      const int w = word.weight();
      if (w % 2 == 1 && r != last) CHECK(v[r].is_zero());
      CycNum expected(0);
      if (r == 0)
        expected = CycNum(-sign_n * 4);
      else if (r == last)
        expected = CycNum(-sign_n);
      else if (w % 2 == 0)
        expected = CycNum(-sign_n * 2);
      CHECK(m0(last, r) == expected);
    }
    for (std::size_t r = 0; r < last; ++r)
      for (std::size_t c2 = 0; c2 < v.size(); ++c2)
        CHECK(m0(r, c2) == CycNum(r == c2 ? 1 : 0));
  }
}

TEST_CASE("delta0 agrees with the last entry of v and det(M_0)") {
  const auto params = P("1/3", "1/5", "1/7");
  const auto roots = unit_roots(params);
  const CycNum d = delta0_formula(roots);
  CHECK(d == roots.gamma[0] / (roots.alpha * roots.beta));
  const Vector v = build_v(params);
  CHECK(v[1] == CycNum(1) - d);
  CHECK(det(build_M0(params)) == d);
  const auto sys = build_system(params);
  CHECK(sys.delta0 == d);
}

TEST_CASE("H for n = 1 against the hand-expanded formula") {
  const auto params = P("1/3", "1/5", "1/2");
  const auto r = unit_roots(params);
  const CycNum& a = r.alpha;
  const CycNum& b = r.beta;
  const CycNum& g = r.gamma[0];
  const ExactMatrix H = build_H(params);
  const CycNum base = (a - 1) / (a - g);
  CHECK(H(0, 0) == (CycNum(1) - g) * base);
  CHECK(H(0, 1) == -g * base);
  CHECK(H(1, 0) == base);
  CHECK(H(1, 1) == (a * b - g) / ((a - g) * (b - 1)));
}

TEST_CASE("H undefined exactly on the excluded denominators") {
  CHECK_THROWS_AS(build_H(P("0", "1/3", "1")), UndefinedObject);
  CHECK_THROWS_AS(build_H(P("1/3", "0", "1/5")), UndefinedObject);
  CHECK_THROWS_AS(build_H(P("1/2", "1/3", "1/4,1/4")), UndefinedObject);
  const auto sys = build_system(P("1/3", "1", "1/5"));
  CHECK_FALSE(sys.H.has_value());
  REQUIRE(sys.h_undefined.has_value());
  CHECK(sys.h_undefined->find("beta") != std::string::npos);
  CHECK_THROWS_AS(sys.require_H(), UndefinedObject);
}

TEST_CASE("identity suite on assorted parameters") {
  for (auto params : {P("1/2", "1/2", "1"), P("1/2", "1/2", "1,1"), P("1/2", "1/2", "1,1,1"),
                      P("1/3", "1/5", "1/7,1/11"), P("1/3", "1/5", "1/7"),
                      P("2/3", "1/4", "1/2,3/4,1/6"), P("1/3", "2/3", "1/2,1/2")}) {
    INFO(params.to_string());
    const auto sys = build_system(params);
    require_all(verify_system(sys));
  }
}

TEST_CASE("f_I and reflections") {
  const auto sys1 = build_system(P("1/2", "1/2", "1"));
  CHECK(equal(build_fI(sys1, IndexWord({1})), Vector{-1, 1}));
  const auto sys = build_system(P("1/3", "1/5", "1/7,1/11"));
  CHECK(equal(build_fI(sys, IndexWord::zeros(2)), basis_vector(IndexWord::ones(2))));
  const auto r0 = build_reflection(sys, IndexWord::zeros(2));
  CHECK(r0.R == sys.M[0]);
  CHECK(!det(nu_matrix(sys)).is_zero());
  // nu rows agree with N_I divided by f_I.
  for (const auto& word : IndexWord::all(2)) {
    const auto refl = build_reflection(sys, word);
    const Vector row = nu_row(sys, word);
    for (std::size_t r = 0; r < sys.size; ++r)
      for (std::size_t c = 0; c < sys.size; ++c) CHECK(refl.N(r, c) == refl.f[r] * row[c]);
  }
}

TEST_CASE("rational entries under the real-form hypotheses") {
  const auto sys = build_system(P("1/3", "2/3", "1/2,1/2"));
  CHECK(real_form_hypotheses(sys.params));
  for (const auto& m : sys.M) CHECK(m.is_rational());
  REQUIRE(sys.H.has_value());
  CHECK(sys.H->is_rational());
  CHECK_FALSE(real_form_hypotheses(P("1/3", "1/5", "1/2,1/2")));
}

TEST_CASE("a broken generator is caught") {
  auto sys = build_system(P("1/3", "1/5", "1/7,1/11"));
  sys.M[1](0, 1) += CycNum(1);
  CHECK_FALSE(all_passed(check_isometries(sys)));
  CHECK_FALSE(all_passed(check_relations(sys)));
}
