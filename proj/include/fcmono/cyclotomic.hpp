#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fcmono/coeff.hpp"
#include "fcmono/rational.hpp"

namespace fcmono {

/// An element of the cyclotomic field Q(zeta_N).
///
/// Values are stored as sparse elements of the group ring Q[Z/N]: a list of
/// (exponent, coefficient) pairs meaning sum c * zeta_N^exponent. Several
/// group-ring elements map to the same field element, so comparisons go
/// through canonical(), which rewrites the value in a fixed Q-basis of the
/// field and shrinks the conductor to the smallest one containing the value.
///
/// The canonical basis is the tensor product, over the prime powers q = p^e
/// exactly dividing N, of the power bases {zeta_q^j : j < phi(q)}. Each such
/// product is itself a power zeta_N^m, and that m is the stored exponent.
///
/// Binary operations on values with different conductors lift both operands
/// to the lcm of the conductors.
class CycNum {
 public:
  struct Term {
    std::uint64_t exponent;
    Coeff coeff;
  };

  CycNum() = default;
  CycNum(long value);  // NOLINT(google-explicit-constructor)
  CycNum(const Rational& value);  // NOLINT(google-explicit-constructor)

  /// zeta_N^power.
  static CycNum root_of_unity(std::uint64_t conductor, std::int64_t power);

  /// Builds sum coeffs[j] * zeta_N^j. The list may be shorter than N.
  static CycNum from_power_basis(std::uint64_t conductor,
                                 const std::vector<Rational>& coeffs);

  std::uint64_t conductor() const { return conductor_; }
  const std::vector<Term>& terms() const { return terms_; }

  CycNum canonical() const;
  /// The canonical form when it has no more terms than the stored one,
  /// otherwise the value unchanged.
  CycNum compact() const;
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const;
  bool is_one() const;
  /// True when the value lies in Q.
  bool is_rational() const;
  /// The rational value; throws PreconditionError if the value is not in Q.
  Rational to_rational() const;

  /// Coordinates of the canonical value in the power basis
  /// 1, zeta, ..., zeta^{phi(N)-1} of Q(zeta_N), N the canonical conductor.
  std::vector<Rational> power_basis_coeffs() const;

  /// Rewrites the value over a multiple of its conductor.
  CycNum lift(std::uint64_t conductor) const;

  /// The automorphism zeta_N -> zeta_N^a; requires gcd(a, N) = 1.
  CycNum galois(std::int64_t a) const;
  /// zeta -> zeta^{-1} for every root of unity; complex conjugation under
  /// the standard embedding.
  CycNum involution() const;

  CycNum inverse() const;
  CycNum pow(std::int64_t exponent) const;

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& other);
  CycNum& operator-=(const CycNum& other);
  CycNum& operator*=(const CycNum& other);
  CycNum& operator/=(const CycNum& other);

  friend CycNum operator+(CycNum lhs, const CycNum& rhs) { return lhs += rhs; }
  friend CycNum operator-(CycNum lhs, const CycNum& rhs) { return lhs -= rhs; }
  friend CycNum operator*(const CycNum& lhs, const CycNum& rhs);
  friend CycNum operator/(const CycNum& lhs, const CycNum& rhs) {
    return lhs * rhs.inverse();
  }

  /// Field equality (decided on canonical forms).
  friend bool operator==(const CycNum& lhs, const CycNum& rhs);
  friend bool operator!=(const CycNum& lhs, const CycNum& rhs) {
    return !(lhs == rhs);
  }

  /// Hash of the canonical form; equal field elements hash equally.
  std::size_t hash() const;

  /// Human readable form of the canonical value, e.g. "1/2 + -1*z12^5".
  std::string to_string() const;

 private:
  CycNum(std::uint64_t conductor, std::vector<Term> terms)
      : conductor_(conductor), terms_(std::move(terms)) {}

  friend CycNum inverse_one_minus_root(std::uint64_t, std::int64_t);
  static CycNum from_unsorted(std::uint64_t conductor, std::vector<Term> terms);
  CycNum inverse_small() const;
  CycNum inverse_tower() const;

  std::uint64_t conductor_ = 1;
  std::vector<Term> terms_;  // sorted by exponent, nonzero coefficients
};

/// zeta_N^power reduced to canonical form.
CycNum cyclotomic(std::uint64_t conductor, std::int64_t power);
inline CycNum involution(const CycNum& x) { return x.involution(); }

std::uint64_t euler_phi(std::uint64_t n);
/// Coefficients (constant term first) of the N-th cyclotomic polynomial.
const std::vector<Integer>& cyclotomic_polynomial(std::uint64_t n);

struct CycNumHash {
  std::size_t operator()(const CycNum& x) const { return x.hash(); }
};

/// Exponents (a, b, c_1..c_n) of Lauricella's system E_C(a, b, c).
struct ParameterSet {
  Rational a;
  Rational b;
  std::vector<Rational> c;

  std::size_t n() const { return c.size(); }
  /// Throws PreconditionError unless n >= 1.
  void validate() const;
  std::string to_string() const;

  /// Parses a, b and a comma-separated list c_1,...,c_n of "p/q" values.
  static ParameterSet parse(std::string_view a, std::string_view b, std::string_view c_list);
};

/// alpha = exp(2 pi i a), beta = exp(2 pi i b), gamma_k = exp(2 pi i c_k).
struct UnitRoots {
  CycNum alpha;
  CycNum beta;
  std::vector<CycNum> gamma;
  /// lcm of the denominators of a, b and all c_k.
  std::uint64_t conductor = 1;
};

UnitRoots unit_roots(const ParameterSet& params);

/// exp(2 pi i q) for rational q.
CycNum root_of_unity(const Rational& q);

/// 1 / (1 - z) for a root of unity z = zeta_N^k != 1, via
/// -(1/m) sum_{j<m} j z^j where m is the order of z.
CycNum inverse_one_minus_root(std::uint64_t conductor, std::int64_t power);

}  // namespace fcmono
