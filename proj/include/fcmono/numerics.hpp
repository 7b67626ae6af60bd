#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "fcmono/cyclotomic.hpp"
#include "fcmono/matrix.hpp"

namespace fcmono {

using Complex = std::complex<double>;

/// Real exponents (a, b, c_1..c_n); irrational values are allowed here.
struct RealParameters {
  double a = 0;
  double b = 0;
  std::vector<double> c;

  static RealParameters from(const ParameterSet& p);
  std::size_t n() const { return c.size(); }
};

struct SeriesConfig {
  int max_total_degree = 2000;
  double rel_tol = 1e-16;
};

struct SeriesResult {
  Complex value;
  double error_estimate = 0;  // modulus of the last included degree layer
  int degree = 0;             // highest total degree summed
  std::size_t terms = 0;      // monomials summed
};

/// Partial sums of F_C over total degree <= D, increasing D until the
/// latest degree layer is below rel_tol relative to the sum twice in a row.
/// Throws DomainError when some c_k is a nonpositive integer or
/// sum sqrt|x_k| >= 1, and ConvergenceError when max_total_degree is reached.
SeriesResult fc_series(const RealParameters& p, const std::vector<Complex>& x,
                       const SeriesConfig& cfg = {});

/// Gauss 2F1(a, b; c; x) for |x| < 1 by its power series.
double hyp2f1(double a, double b, double c, double x);

struct TorusQuadrature {
  double epsilon = 0.2;
  int points_per_circle = 64;
};

struct ContourResult {
  Complex value;
  Complex prefactor;
  double error_estimate = 0;  // change against half the points per circle
  std::size_t points = 0;     // integrand evaluations at full resolution
};

/// (-1)^{n + sum c_k} / (2 pi i)^n * Gamma(1 - a) prod Gamma(c_k) /
/// Gamma(1 - a - n + sum c_k). Throws DomainError at a Gamma pole.
Complex contour_prefactor(const RealParameters& p);

/// F_C for positive integers c_k from the integral over the torus
/// |t_1| = ... = |t_n| = epsilon, by the product trapezoidal rule.
/// Requires 0 < epsilon < 1/(n+1) and 0 < x_k < epsilon^2 / n; a violated
/// inequality throws DomainError naming it.
ContourResult fc_contour(const RealParameters& p, const std::vector<double>& x,
                         const TorusQuadrature& quad = {});

/// Trapezoidal value of the torus integral of the F_C integrand, without
/// the prefactor. Exposed for quadrature tests.
Complex torus_integral(const RealParameters& p, const std::vector<double>& x, double epsilon,
                       int points_per_circle);

/// The embedding zeta_N -> exp(2 pi i / N).
Complex numeric_embed(const CycNum& x);
/// Entrywise embedding, row-major.
std::vector<std::vector<Complex>> numeric_embed(const ExactMatrix& m);

/// Gamma(z) by the Lanczos approximation, with the reflection formula for
/// z < 1/2. Throws DomainError at nonpositive integers.
double gamma_value(double z);

}  // namespace fcmono
