#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "fcmono/rational.hpp"

namespace fcmono {

/// Polynomial over Q in a fixed number of variables, stored as a map from
/// exponent vectors to nonzero coefficients.
class Polynomial {
 public:
  using Monomial = std::vector<unsigned>;

  explicit Polynomial(std::size_t variables = 0) : vars_(variables) {}
  static Polynomial constant(std::size_t variables, const Rational& c);
  /// The variable x_index.
  static Polynomial variable(std::size_t variables, std::size_t index);

  std::size_t variables() const { return vars_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of the monomial, zero when absent.
  Rational coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  /// Terms in decreasing lexicographic exponent order, e.g. "s0^2*t0^2 + -2*s1*t1".
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void add_term(const Monomial& m, const Rational& c);

  std::size_t vars_;
  std::map<Monomial, Rational> terms_;
};

}  // namespace fcmono
