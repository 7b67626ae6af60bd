#include "fcmono/numerics.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "fcmono/errors.hpp"

namespace fcmono {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_nonpositive_integer(double z) { return z <= 0 && z == std::floor(z); }

// log of prod_{j<m} f(j), built up one factor at a time. A vanishing factor
// makes every later value exactly zero.
struct LogProduct {
  std::vector<Complex> logs{Complex(0, 0)};
  std::size_t zero_from = std::numeric_limits<std::size_t>::max();

  void extend(Complex factor) {
    const std::size_t j = logs.size() - 1;
    if (factor == Complex(0, 0)) {
      if (zero_from > j + 1) zero_from = j + 1;
      logs.push_back(logs.back());
      return;
    }
    logs.push_back(logs.back() + std::log(factor));
  }
  bool zero(std::size_t m) const { return m >= zero_from; }
};

// Adds exp(partial + sum_k u[k].logs[m_k]) over the compositions m of
// `remaining` into parts k, k+1, ...; `count` is the number of terms visited.
void sum_layer(const std::vector<LogProduct>& u, std::size_t k, std::size_t remaining,
               Complex partial, Complex& acc, std::size_t& count) {
  if (k + 1 == u.size()) {
    ++count;
    if (!u[k].zero(remaining)) acc += std::exp(partial + u[k].logs[remaining]);
    return;
  }
  for (std::size_t m = 0; m <= remaining; ++m) {
    if (u[k].zero(m)) break;
    sum_layer(u, k + 1, remaining - m, partial + u[k].logs[m], acc, count);
  }
}

void require_integer_c(const RealParameters& p) {
  for (std::size_t k = 0; k < p.n(); ++k)
    if (p.c[k] < 1 || p.c[k] != std::floor(p.c[k]))
      throw DomainError("c_" + std::to_string(k + 1) + " must be a positive integer");
}

}  // namespace

RealParameters RealParameters::from(const ParameterSet& p) {
  RealParameters r{p.a.get_d(), p.b.get_d(), {}};
  for (const auto& c : p.c) r.c.push_back(c.get_d());
  return r;
}

SeriesResult fc_series(const RealParameters& p, const std::vector<Complex>& x,
                       const SeriesConfig& cfg) {
  const std::size_t n = p.n();
  if (n == 0) throw PreconditionError("F_C needs at least one variable");
  if (x.size() != n) throw DimensionMismatch("x must have one entry per c_k");
  for (std::size_t k = 0; k < n; ++k)
    if (is_nonpositive_integer(p.c[k]))
      throw DomainError("c_" + std::to_string(k + 1) + " is a nonpositive integer");
  double radius = 0;
  for (const auto& xk : x) radius += std::sqrt(std::abs(xk));
  if (!(radius < 1)) throw DomainError("sum sqrt|x_k| < 1 violated: the series diverges");

  // u_k(m) = x_k^m / ((c_k)_m m!), P(D) = (a)_D (b)_D, all as logs.
  std::vector<LogProduct> u(n);
  LogProduct pref;
  SeriesResult out;
  out.value = Complex(1, 0);
  out.terms = 1;
  int small_layers = 0;
  for (int degree = 1; degree <= cfg.max_total_degree; ++degree) {
    const double j = degree - 1;
    for (std::size_t k = 0; k < n; ++k) {
      if (x[k] == Complex(0, 0)) {
        u[k].extend(Complex(0, 0));
      } else {
        u[k].extend(x[k] / ((p.c[k] + j) * (j + 1)));
      }
    }
    pref.extend(Complex((p.a + j) * (p.b + j), 0));
    Complex layer(0, 0);
    std::size_t count = 0;
    if (!pref.zero(degree))
      sum_layer(u, 0, static_cast<std::size_t>(degree), pref.logs[degree], layer, count);
    out.value += layer;
    out.terms += count;
    out.degree = degree;
    out.error_estimate = std::abs(layer);
    small_layers = std::abs(layer) <= cfg.rel_tol * std::abs(out.value) ? small_layers + 1 : 0;
    if (small_layers == 2) return out;
  }
  throw ConvergenceError("F_C series did not converge within total degree " +
                         std::to_string(cfg.max_total_degree));
}

double hyp2f1(double a, double b, double c, double x) {
  if (is_nonpositive_integer(c)) throw DomainError("c is a nonpositive integer");
  if (!(std::abs(x) < 1)) throw DomainError("|x| < 1 violated");
  double term = 1, sum = 1;
  for (int m = 0; m < 100000; ++m) {
    term *= (a + m) * (b + m) / ((c + m) * (m + 1)) * x;
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) return sum;
  }
  throw ConvergenceError("2F1 series did not converge");
}

Complex contour_prefactor(const RealParameters& p) {
  require_integer_c(p);
  const std::size_t n = p.n();
  double sum_c = 0;
  for (double c : p.c) sum_c += c;
  const double tail = 1 - p.a - static_cast<double>(n) + sum_c;
  if (is_nonpositive_integer(1 - p.a)) throw DomainError("Gamma(1 - a) has a pole");
  if (is_nonpositive_integer(tail)) throw DomainError("Gamma(1 - a - n + sum c_k) has a pole");
  double g = gamma_value(1 - p.a) / gamma_value(tail);
  for (double c : p.c) g *= gamma_value(c);
  const long parity = static_cast<long>(n) + std::lround(sum_c);
  Complex two_pi_i_n(1, 0);
  for (std::size_t k = 0; k < n; ++k) two_pi_i_n *= Complex(0, 2 * kPi);
  return (parity % 2 == 0 ? 1.0 : -1.0) * g / two_pi_i_n;
}

Complex torus_integral(const RealParameters& p, const std::vector<double>& x, double epsilon,
                       int points_per_circle) {
  const std::size_t n = p.n();
  if (x.size() != n) throw DimensionMismatch("x must have one entry per c_k");
  if (points_per_circle < 1) throw PreconditionError("points_per_circle must be positive");
  double sum_c = 0;
  for (double c : p.c) sum_c += c;
  const double power = sum_c - p.a - static_cast<double>(n);
  const std::size_t m = static_cast<std::size_t>(points_per_circle);
  std::vector<Complex> circle(m);
  for (std::size_t j = 0; j < m; ++j)
    circle[j] = std::polar(epsilon, 2 * kPi * static_cast<double>(j) / static_cast<double>(m));

  std::size_t total = 1;
  for (std::size_t k = 0; k < n; ++k) total *= m;
  std::vector<std::size_t> digit(n, 0);
  Complex acc(0, 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    Complex sum_t(0, 0), sum_xt(0, 0), prod(1, 0);
    for (std::size_t k = 0; k < n; ++k) {
      const Complex t = circle[digit[k]];
      sum_t += t;
      sum_xt += x[k] / t;
      // t^{-c_k} times dt_k = i t dtheta.
      prod *= std::pow(t, 1 - static_cast<int>(std::lround(p.c[k]))) * Complex(0, 1);
    }
    acc += prod * std::pow(Complex(1, 0) - sum_t, power) *
           std::pow(Complex(1, 0) - sum_xt, -p.b);
    for (std::size_t k = 0; k < n && ++digit[k] == m; ++k) digit[k] = 0;
  }
  const double h = 2 * kPi / static_cast<double>(m);
  return acc * std::pow(h, static_cast<double>(n));
}

ContourResult fc_contour(const RealParameters& p, const std::vector<double>& x,
                         const TorusQuadrature& quad) {
  const std::size_t n = p.n();
  if (n == 0) throw PreconditionError("F_C needs at least one variable");
  if (x.size() != n) throw DimensionMismatch("x must have one entry per c_k");
  require_integer_c(p);
  const double eps = quad.epsilon;
  if (!(eps > 0 && eps < 1.0 / static_cast<double>(n + 1)))
    throw DomainError("0 < epsilon < 1/(n+1) violated");
  for (std::size_t k = 0; k < n; ++k)
    if (!(x[k] > 0 && x[k] < eps * eps / static_cast<double>(n)))
      throw DomainError("0 < x_" + std::to_string(k + 1) + " < epsilon^2/n violated");
  if (quad.points_per_circle < 8) throw PreconditionError("points_per_circle must be >= 8");

  ContourResult out;
  out.prefactor = contour_prefactor(p);
  out.value = out.prefactor * torus_integral(p, x, eps, quad.points_per_circle);
  const Complex coarse = out.prefactor * torus_integral(p, x, eps, quad.points_per_circle / 2);
  out.error_estimate = std::abs(out.value - coarse);
  out.points = 1;
  for (std::size_t k = 0; k < n; ++k) out.points *= static_cast<std::size_t>(quad.points_per_circle);
  return out;
}

Complex numeric_embed(const CycNum& x) {
  const double n = static_cast<double>(x.conductor());
  Complex acc(0, 0);
  for (const auto& t : x.terms())
    acc += t.coeff.to_rational().get_d() *
           std::polar(1.0, 2 * kPi * static_cast<double>(t.exponent) / n);
  return acc;
}

std::vector<std::vector<Complex>> numeric_embed(const ExactMatrix& m) {
  std::vector<std::vector<Complex>> out(m.rows(), std::vector<Complex>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = numeric_embed(m(r, c));
  return out;
}

double gamma_value(double z) {
  if (is_nonpositive_integer(z)) throw DomainError("Gamma has a pole at nonpositive integers");
  if (z < 0.5) return kPi / (std::sin(kPi * z) * gamma_value(1 - z));
  static constexpr double kG = 7;
  static constexpr std::array<double, 9> kCoeff{
      0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
      771.32342877765313,      -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
  const double w = z - 1;
  double sum = kCoeff[0];
  for (std::size_t i = 1; i < kCoeff.size(); ++i) sum += kCoeff[i] / (w + static_cast<double>(i));
  const double t = w + kG + 0.5;
  return std::sqrt(2 * kPi) * std::pow(t, w + 0.5) * std::exp(-t) * sum;
}

}  // namespace fcmono
