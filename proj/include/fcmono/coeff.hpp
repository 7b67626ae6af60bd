#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "fcmono/rational.hpp"

namespace fcmono {

/// A rational number stored inline as a reduced int64 fraction while it
/// fits, and as a heap-allocated mpq otherwise. Results that fit again are
/// moved back inline, so every value has exactly one representation.
class Coeff {
 public:
  Coeff() = default;
  Coeff(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Coeff(const Rational& value);  // NOLINT(google-explicit-constructor)
  /// num / den in lowest terms; den must be nonzero.
  static Coeff fraction(std::int64_t num, std::int64_t den);
  static Coeff fraction(__int128 num, __int128 den);

  Coeff(const Coeff& other);
  Coeff(Coeff&&) noexcept = default;
  Coeff& operator=(const Coeff& other);
  Coeff& operator=(Coeff&&) noexcept = default;
  ~Coeff() = default;

  bool is_small() const { return !big_; }
  /// Numerator and (positive) denominator; valid when is_small().
  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  /// The mpq value; valid when !is_small().
  const Rational& big() const { return *big_; }

  Rational to_rational() const;
  int sign() const;
  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_integer() const;
  std::string get_str() const;
  std::size_t hash() const;

  Coeff operator-() const;
  Coeff& operator+=(const Coeff& other);
  Coeff& operator-=(const Coeff& other);
  Coeff& operator*=(const Coeff& other);
  Coeff& operator/=(const Coeff& other);

  friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
  friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
  friend Coeff operator*(Coeff a, const Coeff& b) { return a *= b; }
  friend Coeff operator/(Coeff a, const Coeff& b) { return a /= b; }
  friend bool operator==(const Coeff& a, const Coeff& b);
  friend bool operator!=(const Coeff& a, const Coeff& b) { return !(a == b); }

 private:
  void assign(const Rational& value);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<Rational> big_;
};

}  // namespace fcmono
