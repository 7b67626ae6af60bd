#include <gsl/gsl_sf_gamma.h>
#include <gsl/gsl_sf_hyperg.h>

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "fcmono/errors.hpp"
#include "fcmono/monodromy.hpp"
#include "fcmono/numerics.hpp"

using namespace fcmono;

namespace {

constexpr double kPi = std::numbers::pi;

using CMatrix = std::vector<std::vector<Complex>>;

CMatrix mul(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.size(), std::vector<Complex>(b[0].size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

CMatrix transpose(const CMatrix& a) {
  CMatrix out(a[0].size(), std::vector<Complex>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) out[j][i] = a[i][j];
  return out;
}

CMatrix conj(CMatrix a) {
  for (auto& row : a)
    for (auto& x : row) x = std::conj(x);
  return a;
}

double max_diff(const CMatrix& a, const CMatrix& b) {
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) d = std::max(d, std::abs(a[i][j] - b[i][j]));
  return d;
}

}  // namespace

TEST_CASE("series at the origin is 1") {
  const auto r = fc_series({0.3, 0.7, {1.5, 2.5}}, {Complex(0), Complex(0)});
  CHECK(r.value == Complex(1, 0));
}

TEST_CASE("n = 1 series equals Gauss 2F1 from GSL") {
  const auto r = fc_series({0.5, 0.5, {1.0}}, {Complex(0.3)});
  CHECK(std::abs(r.value - gsl_sf_hyperg_2F1(0.5, 0.5, 1.0, 0.3)) < 1e-10);
  CHECK(std::abs(hyp2f1(0.5, 0.5, 1.0, 0.3) - gsl_sf_hyperg_2F1(0.5, 0.5, 1.0, 0.3)) < 1e-13);
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> par(0.1, 3.0), arg(-0.6, 0.6);
  for (int i = 0; i < 20; ++i) {
    const double a = par(rng), b = par(rng), c = par(rng), x = arg(rng);
    const double ref = gsl_sf_hyperg_2F1(a, b, c, x);
    INFO(a << " " << b << " " << c << " " << x);
    CHECK(std::abs(fc_series({a, b, {c}}, {Complex(x)}).value - ref) < 1e-10 * std::abs(ref));
  }
}

TEST_CASE("F4 product formula") {
  const double a = 0.5, c = 1, cp = 1, x = 0.1, y = 0.15;
  const double b = c + cp - a - 1;
  const auto lhs = fc_series({a, b, {c, cp}}, {Complex(x * (1 - y)), Complex(y * (1 - x))});
  const double rhs = gsl_sf_hyperg_2F1(a, b, c, x) * gsl_sf_hyperg_2F1(a, b, cp, y);
  CHECK(std::abs(lhs.value - rhs) < 1e-8);
  // A second point with unequal c.
  const double c2 = 1.5, cp2 = 2.25, a2 = 0.3, b2 = c2 + cp2 - a2 - 1;
  const auto l2 = fc_series({a2, b2, {c2, cp2}}, {Complex(0.2 * 0.9), Complex(0.1 * 0.8)});
  const double r2 = gsl_sf_hyperg_2F1(a2, b2, c2, 0.2) * gsl_sf_hyperg_2F1(a2, b2, cp2, 0.1);
  CHECK(std::abs(l2.value - r2) < 1e-8 * std::abs(r2));
}

TEST_CASE("series and torus contour agree") {
  const auto s1 = fc_series({0.5, 0.5, {1.0}}, {Complex(0.001)});
  const auto c1 = fc_contour({0.5, 0.5, {1.0}}, {0.001}, {0.2, 64});
  CHECK(std::abs(s1.value - c1.value) < 1e-8);

  const auto s2 = fc_series({0.5, 0.5, {1.0, 1.0}}, {Complex(0.003), Complex(0.004)});
  const auto c2 = fc_contour({0.5, 0.5, {1.0, 1.0}}, {0.003, 0.004}, {0.2, 64});
  CHECK(std::abs(s2.value - c2.value) < 1e-7);

  // Non-symmetric parameters with c_k > 1.
  const RealParameters p{0.3, 0.8, {2.0, 1.0}};
  const auto s3 = fc_series(p, {Complex(0.002), Complex(0.005)});
  const auto c3 = fc_contour(p, {0.002, 0.005}, {0.2, 64});
  CHECK(std::abs(s3.value - c3.value) < 1e-9);
}

TEST_CASE("contour prefactor at a = 1/2, c = 1^n is 1/(2 pi i)^n") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const Complex pref = contour_prefactor({0.5, 0.5, std::vector<double>(n, 1.0)});
    const Complex expected = 1.0 / std::pow(Complex(0, 2 * kPi), static_cast<int>(n));
    CHECK(std::abs(pref - expected) < 1e-12 * std::abs(expected));
  }
}

TEST_CASE("torus quadrature extracts residues") {
  // a = -2, b = 0, c = (2): integrand t^{-2} (1 - t)^3, whose t^1 coefficient is -3.
  const Complex v = torus_integral({-2.0, 0.0, {2.0}}, {0.001}, 0.3, 16);
  CHECK(std::abs(v - Complex(0, 2 * kPi) * -3.0) < 1e-12);
}

TEST_CASE("quadrature converges once the circles carry 32 points") {
  const RealParameters p1{0.5, 0.5, {1.0}};
  CHECK(std::abs(fc_contour(p1, {0.001}, {0.2, 32}).value -
                 fc_contour(p1, {0.001}, {0.2, 64}).value) < 1e-10);
  const RealParameters p2{0.5, 0.5, {1.0, 1.0}};
  CHECK(std::abs(fc_contour(p2, {0.003, 0.004}, {0.2, 32}).value -
                 fc_contour(p2, {0.003, 0.004}, {0.2, 64}).value) < 1e-10);
}

TEST_CASE("domain checks") {
  CHECK_THROWS_AS(fc_series({0.5, 0.5, {1.0, 1.0}}, {Complex(0.3), Complex(0.3)}), DomainError);
  CHECK_THROWS_AS(fc_series({0.5, 0.5, {-2.0}}, {Complex(0.1)}), DomainError);
  CHECK_THROWS_AS(fc_series({0.5, 0.5, {1.0}}, {Complex(0.9)}, {20, 1e-16}), ConvergenceError);
  CHECK_THROWS_WITH_AS(fc_contour({0.5, 0.5, {1.0, 1.0}}, {0.003, 0.004}, {0.4, 64}),
                       "0 < epsilon < 1/(n+1) violated", DomainError);
  CHECK_THROWS_WITH_AS(fc_contour({0.5, 0.5, {1.0, 1.0}}, {0.003, 0.03}, {0.2, 64}),
                       "0 < x_2 < epsilon^2/n violated", DomainError);
  CHECK_THROWS_AS(fc_contour({0.5, 0.5, {1.5}}, {0.001}, {0.2, 64}), DomainError);
  CHECK_THROWS_AS(contour_prefactor({1.0, 0.5, {1.0}}), DomainError);
}

TEST_CASE("Gamma function") {
  CHECK(std::abs(gamma_value(0.5) - std::sqrt(kPi)) < 1e-14);
  CHECK(std::abs(gamma_value(5) - 24) < 1e-12);
  CHECK(std::abs(gamma_value(0.3) * gamma_value(0.7) - kPi / std::sin(0.3 * kPi)) < 1e-12);
  for (double z = 0.5; z <= 20; z += 0.125) {
    const double ref = gsl_sf_gamma(z);
    INFO(z);
    CHECK(std::abs(gamma_value(z) - ref) <= 1e-12 * ref);
  }
  CHECK_THROWS_AS(gamma_value(0), DomainError);
  CHECK_THROWS_AS(gamma_value(-3), DomainError);
  CHECK(std::abs(gamma_value(-0.5) - (-2 * std::sqrt(kPi))) < 1e-13);
}

TEST_CASE("numeric embedding is a ring homomorphism") {
  CHECK(numeric_embed(CycNum(1)) == Complex(1, 0));
  CHECK(std::abs(numeric_embed(cyclotomic(4, 1)) - Complex(0, 1)) < 1e-15);
  for (std::uint64_t n : {5u, 7u, 12u, 30u})
    CHECK(std::abs(numeric_embed(cyclotomic(n, 1)) - std::polar(1.0, 2 * kPi / n)) < 1e-12);
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coeff(-4, 4), exp(0, 59);
  for (int i = 0; i < 30; ++i) {
    CycNum x(0), y(0);
    for (int t = 0; t < 3; ++t) {
      x += CycNum(coeff(rng)) * CycNum::root_of_unity(60, exp(rng));
      y += CycNum(coeff(rng)) * CycNum::root_of_unity(60, exp(rng));
    }
    CHECK(std::abs(numeric_embed(x + y) - numeric_embed(x) - numeric_embed(y)) < 1e-12);
    CHECK(std::abs(numeric_embed(x * y) - numeric_embed(x) * numeric_embed(y)) < 1e-11);
    CHECK(std::abs(numeric_embed(x.involution()) - std::conj(numeric_embed(x))) < 1e-12);
  }
}

TEST_CASE("embedded generators preserve the embedded intersection form") {
  for (const auto& p : {ParameterSet::parse("1/3", "1/5", "1/7,1/11"),
                        ParameterSet::parse("1/2", "1/2", "1,1,1"),
                        ParameterSet::parse("2/7", "3/4", "1/6")}) {
    const MonodromySystem sys = build_system(p);
    const CMatrix H = numeric_embed(sys.require_H());
    CMatrix signed_conj = conj(H);
    if (sys.n % 2 == 1)
      for (auto& row : signed_conj)
        for (auto& x : row) x = -x;
    CHECK(max_diff(transpose(H), signed_conj) < 1e-10);
    for (const auto& M : sys.M) {
      const CMatrix m = numeric_embed(M);
      CHECK(max_diff(mul(mul(transpose(m), H), conj(m)), H) < 1e-10);
    }
  }
}

TEST_CASE("numerics stay fast") {
  const auto start = std::chrono::steady_clock::now();
  fc_contour({0.5, 0.5, {1.0, 1.0, 1.0}}, {0.001, 0.002, 0.0015}, {0.2, 64});
  fc_series({0.5, 0.5, {1.0, 1.0, 1.0}}, {Complex(0.01), Complex(0.02), Complex(0.03)});
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(secs < 10);
}
