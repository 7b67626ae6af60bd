#include <random>

#include "doctest.h"
#include "fcmono/classification.hpp"
#include "fcmono/identities.hpp"

using namespace fcmono;

namespace {

ParameterSet P(const char* a, const char* b, const char* c) { return ParameterSet::parse(a, b, c); }

bool has(const std::vector<std::string>& xs, const std::string& x) {
  for (const auto& y : xs)
    if (y == x) return true;
  return false;
}

}  // namespace

TEST_CASE("definite closures of the double-covering models") {
  const auto even = classify(P("1/2", "1/2", "1,1"));
  CHECK(even.verdict == Verdict::definite_O);
  CHECK(even.delta0 == CycNum(-1));
  CHECK(even.delta0_case == Delta0Case::III);
  CHECK(even.assumptions_used.empty());
  CHECK(has(even.citations, "cor-main"));
  CHECK(has(even.citations, "main3-cor"));

  const auto odd = classify(P("1/2", "1/2", "1,1,1"));
  CHECK(odd.verdict == Verdict::definite_Sp);
  CHECK(odd.delta0 == CycNum(1));
  CHECK(odd.delta0_case == Delta0Case::II);
  CHECK(odd.invariant_form == FormParity::alternating);
}

TEST_CASE("a = 0 is reducible") {
  const auto r = classify(P("0", "1/2", "1/3"));
  CHECK(r.verdict == Verdict::reducible);
  REQUIRE_FALSE(r.irreducibility.failures.empty());
  CHECK(r.irreducibility.failures.front().word.to_string() == "0");
}

TEST_CASE("generic parameters land in case I with the Mon0 assumption flagged") {
  const auto r = classify(P("1/3", "1/5", "1/7"));
  CHECK(r.verdict == Verdict::SL_contained);
  CHECK(r.delta0_case == Delta0Case::I);
  CHECK(has(r.assumptions_used, "Mon0 irreducible"));
  CHECK(r.sl_determinant_note);
}

TEST_CASE("delta0 cases") {
  CHECK(delta0_case(P("1/2", "1/2", "1,1")) == Delta0Case::III);
  CHECK(delta0_case(P("1/2", "1/2", "1,1,1")) == Delta0Case::II);
  CHECK(delta0_case(P("1/3", "1/5", "1/7")) == Delta0Case::I);
}

TEST_CASE("a complete enumeration yields finite") {
  GroupEnumeration e;
  e.complete = true;
  e.element_count = 12;
  const auto r = classify(P("1/3", "1/5", "1/7"), FinitenessHint::from_enumeration(e));
  CHECK(r.verdict == Verdict::finite);
  e.complete = false;
  const auto h = classify(P("1/3", "1/5", "1/7"), FinitenessHint::from_enumeration(e));
  CHECK(h.verdict == Verdict::SL_contained);
  CHECK(has(h.assumptions_used, "Mon infinite (enumeration budget exceeded)"));
}

TEST_CASE("classification is monotone in the infiniteness hint") {
  std::mt19937 rng(41);
  auto half = [&] { return Rational(std::uniform_int_distribution<int>(-3, 3)(rng), 2); };
  auto any = [&] {
    const int d = std::uniform_int_distribution<int>(1, 6)(rng);
    return Rational(std::uniform_int_distribution<int>(0, d - 1)(rng), d);
  };
  for (int trial = 0; trial < 40; ++trial) {
    ParameterSet p;
    const std::size_t n = 1 + trial % 3;
    if (trial % 2 == 0) {
      p.a = any();
      p.b = Rational(1) - p.a;
      Rational sum = 0;
      for (std::size_t k = 0; k + 1 < n; ++k) {
        p.c.push_back(half());
        sum += p.c.back();
      }
      // Make the sum integral.
      p.c.push_back(is_integer(sum) ? Rational(1) : Rational(1, 2));
    } else {
      p.a = any();
      p.b = any();
      for (std::size_t k = 0; k < n; ++k) p.c.push_back(any());
    }
    for (auto& c : p.c) c.canonicalize();
    const auto base = classify(p);
    const auto hinted = classify(p, FinitenessHint::infinite_assumed());
    CAPTURE(p.to_string());
    if (base.verdict != Verdict::undetermined) CHECK(hinted.verdict == base.verdict);
    if (hinted.verdict == Verdict::definite_O || hinted.verdict == Verdict::definite_Sp) {
      const MonodromySystem sys = build_system(p);
      const ExactMatrix& H = sys.require_H();
      for (const auto& m : sys.M) CHECK(m.transpose() * H * m == H);
      CHECK(H.transpose() == (n % 2 == 0 ? H : -H));
      CHECK(hinted.delta0 == (n % 2 == 1 ? CycNum(1) : CycNum(-1)));
    }
  }
}

TEST_CASE("generator determinants are roots of unity") {
  for (const auto& p : {P("1/3", "1/5", "1/7"), P("2/7", "1/4", "1/3,5/6")}) {
    const MonodromySystem sys = build_system(p);
    const std::uint64_t N = sys.roots.conductor;
    for (const auto& m : sys.M) CHECK(det(m).pow(static_cast<std::int64_t>(N)) == CycNum(1));
  }
}
