// Acceptance run: prints one PASS/FAIL line per criterion and exits nonzero
// when any criterion fails.

#include <gsl/gsl_sf_hyperg.h>

#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fcmono/classification.hpp"
#include "fcmono/errors.hpp"
#include "fcmono/identities.hpp"
#include "fcmono/monodromy.hpp"
#include "fcmono/numerics.hpp"
#include "fcmono/special_models.hpp"
#include "fcmono/structure.hpp"

using namespace fcmono;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string first_failure(const std::vector<IdentityCheck>& checks) {
  for (const auto& c : checks)
    if (!c.passed) return c.name + (c.detail.empty() ? "" : " (" + c.detail + ")");
  return {};
}

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  Rational fraction() {
    const long d = std::uniform_int_distribution<long>(1, 12)(rng_);
    const long n = std::uniform_int_distribution<long>(0, d - 1)(rng_);
    Rational q(n, d);
    q.canonicalize();
    return q;
  }

  ParameterSet params(std::size_t n) {
    ParameterSet p;
    p.a = fraction();
    p.b = fraction();
    for (std::size_t k = 0; k < n; ++k) p.c.push_back(fraction());
    return p;
  }

  std::size_t index(std::size_t bound) {
    return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng_);
  }

 private:
  std::mt19937_64 rng_;
};

Rational half() { return Rational(1, 2); }

Rational shift_half(const Rational& a) {
  Rational b = a + half();
  if (b >= Rational(1)) b = b - Rational(1);
  b.canonicalize();
  return b;
}

// 50 parameter sets with n cycling through 1, 2, 3 and H defined.
std::vector<MonodromySystem> identity_sample() {
  Sampler s(20240601);
  std::vector<MonodromySystem> out;
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 1 + i % 3;
    while (true) {
      MonodromySystem sys = build_system(s.params(n));
      if (sys.H) {
        out.push_back(std::move(sys));
        break;
      }
    }
  }
  return out;
}

Outcome run_sample(const std::vector<MonodromySystem>& sample,
                   const std::function<std::vector<IdentityCheck>(const MonodromySystem&)>& run,
                   const std::string& what) {
  Outcome o;
  const auto start = Clock::now();
  for (const auto& sys : sample) {
    const auto checks = run(sys);
    if (!all_passed(checks)) o.fail(sys.params.to_string() + ": " + first_failure(checks));
  }
  const double secs = seconds_since(start);
  if (secs >= 60) o.fail(what + " took " + std::to_string(secs) + " s");
  if (o.passed) {
    std::ostringstream d;
    d << sample.size() << " parameter sets, " << what << ", " << secs << " s";
    o.detail = d.str();
  }
  return o;
}

Outcome criterion_4() {
  Sampler s(7);
  Outcome o;
  int tested = 0;
  while (tested < 20) {
    const ParameterSet p = s.params(1 + tested % 3);
    if (check_irr(p).mon_irreducible != Tri::holds) continue;
    const auto checks = check_basis(build_system(p));
    if (!all_passed(checks)) o.fail(p.to_string() + ": " + first_failure(checks));
    ++tested;
  }
  if (o.passed) o.detail = "20 irreducible parameter sets: f_I basis and nu map invertible";
  return o;
}

// Perturbing one entry of a witness basis vector must break invariance under
// some reflection R_I. The entry is chosen so the perturbation leaves the
// subspace; adding a vector of the subspace itself changes nothing.
bool perturbations_detected(const MonodromySystem& sys, const ReducibleWitness& w,
                            std::string& why) {
  auto probe = [&](bool plus, std::size_t j) {
    const auto& span = plus ? w.W_plus : w.W_minus;
    std::size_t entry = 0;
    while (in_span(span, basis_vector(IndexWord::from_rank(sys.n, entry)))) ++entry;
    ReducibleWitness bad = w;
    (plus ? bad.W_plus : bad.W_minus)[j][entry] += CycNum(1);
    for (const auto& c : verify_witness(sys, bad))
      if (!c.passed && c.name.rfind("R_", 0) == 0) return true;
    why = std::string("perturbing W") + (plus ? "+" : "-") + "[" + std::to_string(j) +
          "] kept every R_I invariance";
    return false;
  };
  for (std::size_t j = 0; j < w.W_plus.size(); ++j)
    if (!probe(true, j)) return false;
  for (std::size_t j = 0; j < w.W_minus.size(); ++j)
    if (!probe(false, j)) return false;
  return true;
}

Outcome criterion_5() {
  Sampler s(11);
  Outcome o;
  // Sets with M_0 = E are skipped: every R_I is then E and any subspace is
  // invariant, so the perturbation control has nothing to detect.
  auto check = [&](const ParameterSet& p, WitnessKind expected) {
    const MonodromySystem sys = build_system(p);
    if (sys.M[0].is_identity()) return false;
    const ReducibleWitness w = build_reducible_witness(sys);
    std::string why;
    const auto checks = verify_witness(sys, w);
    if (w.kind != expected)
      o.fail(p.to_string() + ": unexpected witness kind");
    else if (!all_passed(checks))
      o.fail(p.to_string() + ": " + first_failure(checks));
    else if (!perturbations_detected(sys, w, why))
      o.fail(p.to_string() + ": " + why);
    return true;
  };
  for (int i = 0; i < 10;) {
    const std::size_t n = 2 + i % 2;
    ParameterSet p = s.params(n);
    const std::size_t k1 = s.index(n);
    std::size_t k2 = s.index(n - 1);
    if (k2 >= k1) ++k2;
    p.c[k1] = half();
    p.c[k2] = half();
    if (check(p, WitnessKind::two_gammas)) ++i;
  }
  for (int i = 0; i < 10;) {
    const std::size_t n = 1 + i % 3;
    ParameterSet p = s.params(n);
    p.c[0] = half();
    for (std::size_t k = 1; k < n; ++k)
      while (p.c[k] == half()) p.c[k] = s.fraction();
    p.b = shift_half(p.a);
    if (check(p, WitnessKind::gamma_and_ab)) ++i;
  }
  if (o.passed)
    o.detail = "20 witnesses verified, every one-entry perturbation breaks R_I invariance";
  return o;
}

Outcome criterion_6() {
  Outcome o;
  for (int n : {2, 3}) {
    const auto checks = verify_change_of_basis(load_fixture(n));
    if (!all_passed(checks)) o.fail("n=" + std::to_string(n) + ": " + first_failure(checks));
  }
  if (o.passed) o.detail = "n=2 and n=3 fixtures reproduced exactly";
  return o;
}

Outcome criterion_7() {
  Outcome o;
  const IntegerModel model = load_fixture(2);
  if (!segre_quadric_check(model)) o.fail("Segre quadric does not vanish");
  const auto moebius = moebius_action_check(model);
  if (!all_passed(moebius)) o.fail(first_failure(moebius));
  const auto gamma2 = gamma2_generator_check(model);
  if (!all_passed(gamma2)) o.fail(first_failure(gamma2));
  if (o.passed) o.detail = "Segre quadric, 3 Moebius laws, Gamma(2) x Gamma(2) generators";
  return o;
}

Outcome criterion_8() {
  Outcome o;
  auto P = [](const char* a, const char* b, const char* c) { return ParameterSet::parse(a, b, c); };
  const auto o2 = classify(P("1/2", "1/2", "1,1"));
  if (o2.verdict != Verdict::definite_O) o.fail("(1/2,1/2,(1,1)) gave " + to_string(o2.verdict));
  if (o2.delta0 != CycNum(-1)) o.fail("(1/2,1/2,(1,1)) delta0 != -1");
  const auto sp = classify(P("1/2", "1/2", "1,1,1"));
  if (sp.verdict != Verdict::definite_Sp)
    o.fail("(1/2,1/2,(1,1,1)) gave " + to_string(sp.verdict));
  if (sp.delta0 != CycNum(1)) o.fail("(1/2,1/2,(1,1,1)) delta0 != +1");
  for (const char* c : {"1/3", "1/2,1/5", "1/7,1/4,2/3"}) {
    const auto r = classify(P("0", "1/3", c));
    if (r.verdict != Verdict::reducible) o.fail(std::string("a=0, c=") + c + " not reducible");
  }
  const auto gen = classify(P("1/3", "1/5", "1/7"));
  if (gen.delta0_case != Delta0Case::I || gen.verdict != Verdict::SL_contained)
    o.fail("(1/3,1/5,(1/7)) gave " + to_string(gen.verdict));
  bool flagged = false;
  for (const auto& a : gen.assumptions_used) flagged = flagged || a == "Mon0 irreducible";
  if (!flagged) o.fail("(1/3,1/5,(1/7)) does not flag the Mon0 assumption");
  if (o.passed) o.detail = "definite_O, definite_Sp, reducible at a=0, case I with assumption";
  return o;
}

Outcome criterion_9() {
  Outcome o;
  const auto start = Clock::now();
  std::ostringstream d;
  d.precision(2);
  d << std::scientific;

  const double f21 = std::abs(fc_series({0.5, 0.5, {1.0}}, {Complex(0.3)}).value -
                              gsl_sf_hyperg_2F1(0.5, 0.5, 1.0, 0.3));
  if (!(f21 < 1e-10)) o.fail("2F1 error " + std::to_string(f21));
  d << "2F1 " << f21;

  const double a = 0.5, c = 1, cp = 1, x = 0.1, y = 0.15, b = c + cp - a - 1;
  const double f4 =
      std::abs(fc_series({a, b, {c, cp}}, {Complex(x * (1 - y)), Complex(y * (1 - x))}).value -
               gsl_sf_hyperg_2F1(a, b, c, x) * gsl_sf_hyperg_2F1(a, b, cp, y));
  if (!(f4 < 1e-8)) o.fail("F4 product error " + std::to_string(f4));
  d << ", F4 product " << f4;

  const RealParameters p1{0.5, 0.5, {1.0}};
  const double d1 = std::abs(fc_series(p1, {Complex(0.001)}).value -
                             fc_contour(p1, {0.001}, {0.2, 64}).value);
  if (!(d1 < 1e-8)) o.fail("n=1 series vs contour " + std::to_string(d1));
  const RealParameters p2{0.5, 0.5, {1.0, 1.0}};
  const double d2 = std::abs(fc_series(p2, {Complex(0.003), Complex(0.004)}).value -
                             fc_contour(p2, {0.003, 0.004}, {0.2, 64}).value);
  if (!(d2 < 1e-7)) o.fail("n=2 series vs contour " + std::to_string(d2));
  d << ", contour n=1 " << d1 << ", n=2 " << d2;

  double worst = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    const Complex pref = contour_prefactor({0.5, 0.5, std::vector<double>(n, 1.0)});
    const Complex expected = 1.0 / std::pow(Complex(0, 2 * std::numbers::pi), static_cast<int>(n));
    worst = std::max(worst, std::abs(pref - expected) / std::abs(expected));
  }
  if (!(worst < 1e-12)) o.fail("prefactor relative error " + std::to_string(worst));
  d << ", prefactor " << worst;

  const double secs = seconds_since(start);
  if (secs >= 30) o.fail("took " + std::to_string(secs) + " s");
  d.unsetf(std::ios::floatfield);
  d << ", " << secs << " s";
  if (o.passed) o.detail = d.str();
  return o;
}

Outcome criterion_10() {
  Outcome o;
  auto P = [](const char* a, const char* b, const char* c) { return ParameterSet::parse(a, b, c); };
  const struct {
    const char* c;
    std::size_t k;
    std::size_t order;
  } cases[] = {{"1/2", 1, 2}, {"1/3", 1, 3}, {"2/3", 1, 3}, {"1/7,1/5", 2, 5}, {"3/5,1/2", 1, 5}};
  for (const auto& t : cases) {
    const OrderProbe pr = conjugate_orbit_probe(build_system(P("1/3", "1/5", t.c)), t.k, 100);
    if (!pr.finite || pr.order != t.order)
      o.fail(std::string("c=") + t.c + ": order of M_" + std::to_string(t.k) + " not " +
             std::to_string(t.order));
  }
  const OrderProbe unipotent = conjugate_orbit_probe(build_system(P("1/3", "1/5", "1")), 1, 200);
  if (unipotent.finite) o.fail("gamma_1 = 1 reported finite");
  const auto sys = build_system(P("1/3", "1/5", "1/3"));
  const GroupEnumeration g = enumerate_group({sys.M[1]}, 5000);
  if (!g.complete || g.element_count != 3) o.fail("<M_1> with gamma_1 = zeta_3 not of order 3");
  if (o.passed) o.detail = "orders 2, 3, 5 found; gamma=1 exceeds budget; <M_1> has order 3";
  return o;
}

}  // namespace

int main() {
  std::vector<std::function<Outcome()>> criteria;
  const auto start = Clock::now();
  const std::vector<MonodromySystem> sample = identity_sample();
  const double build_secs = seconds_since(start);

  criteria.push_back([&] {
    Outcome o = run_sample(sample, check_isometries, "isometries");
    if (build_secs >= 60) o.fail("building the sample took " + std::to_string(build_secs) + " s");
    return o;
  });
  criteria.push_back([&] { return run_sample(sample, check_relations, "relations"); });
  criteria.push_back(
      [&] { return run_sample(sample, check_reflection_structure, "reflection structure"); });
  criteria.push_back(criterion_4);
  criteria.push_back(criterion_5);
  criteria.push_back(criterion_6);
  criteria.push_back(criterion_7);
  criteria.push_back(criterion_8);
  criteria.push_back(criterion_9);
  criteria.push_back(criterion_10);

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.passed) ++failures;
    std::cout << "criterion " << (i + 1) << ": " << (o.passed ? "PASS" : "FAIL") << " - "
              << o.detail << std::endl;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failures == 0 ? 0 : 1;
}
