#include "fcmono/coeff.hpp"

#include <numeric>

#include "fcmono/errors.hpp"

namespace fcmono {

namespace {

using i128 = __int128;

bool fits(i128 v) { return v >= INT64_MIN + 1 && v <= INT64_MAX; }

// Reduces an i128 fraction; false when the reduced form does not fit.
bool reduce(i128 num, i128 den, std::int64_t& n, std::int64_t& d) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) {
    n = 0;
    d = 1;
    return true;
  }
  unsigned __int128 a = num < 0 ? -static_cast<unsigned __int128>(num)
                                : static_cast<unsigned __int128>(num);
  unsigned __int128 b = static_cast<unsigned __int128>(den);
  while (b != 0) {
    const unsigned __int128 t = a % b;
    a = b;
    b = t;
  }
  const i128 g = static_cast<i128>(a);
  num /= g;
  den /= g;
  if (!fits(num) || !fits(den)) return false;
  n = static_cast<std::int64_t>(num);
  d = static_cast<std::int64_t>(den);
  return true;
}

Rational small_to_rational(std::int64_t n, std::int64_t d) {
  Rational q;
  mpz_set_si(q.get_num_mpz_t(), n);
  mpz_set_si(q.get_den_mpz_t(), d);
  return q;
}

}  // namespace

Coeff::Coeff(const Rational& value) { assign(value); }

Coeff Coeff::fraction(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DivisionByZero();
  Coeff c;
  if (!reduce(num, den, c.num_, c.den_)) {
    Rational q = small_to_rational(num, 1) / small_to_rational(den, 1);
    c.assign(q);
  }
  return c;
}

Coeff Coeff::fraction(i128 num, i128 den) {
  if (den == 0) throw DivisionByZero();
  Coeff c;
  if (den == 1 && fits(num)) {
    c.num_ = static_cast<std::int64_t>(num);
    return c;
  }
  if (fits(num) && fits(den) && den > 0) {
    const auto n = static_cast<std::int64_t>(num);
    const auto d = static_cast<std::int64_t>(den);
    const std::int64_t g = std::gcd(n, d);
    c.num_ = n / g;
    c.den_ = d / g;
    return c;
  }
  if (!reduce(num, den, c.num_, c.den_)) {
    auto to_mpz = [](mpz_ptr z, i128 v) {
      const bool negative = v < 0;
      const unsigned __int128 u = negative ? -static_cast<unsigned __int128>(v)
                                           : static_cast<unsigned __int128>(v);
      mpz_set_ui(z, static_cast<unsigned long>(u >> 64));
      mpz_mul_2exp(z, z, 64);
      mpz_add_ui(z, z, static_cast<unsigned long>(u));
      if (negative) mpz_neg(z, z);
    };
    Rational q;
    to_mpz(q.get_num_mpz_t(), num);
    to_mpz(q.get_den_mpz_t(), den);
    c.assign(q);
  }
  return c;
}

Coeff::Coeff(const Coeff& other) : num_(other.num_), den_(other.den_) {
  if (other.big_) big_ = std::make_unique<Rational>(*other.big_);
}

Coeff& Coeff::operator=(const Coeff& other) {
  if (this == &other) return *this;
  num_ = other.num_;
  den_ = other.den_;
  big_ = other.big_ ? std::make_unique<Rational>(*other.big_) : nullptr;
  return *this;
}

void Coeff::assign(const Rational& value) {
  Rational copy = value;
  copy.canonicalize();
  const mpz_srcptr n = copy.get_num_mpz_t();
  const mpz_srcptr d = copy.get_den_mpz_t();
  if (mpz_fits_slong_p(n) && mpz_fits_slong_p(d) && mpz_cmp_si(n, INT64_MIN) != 0) {
    num_ = mpz_get_si(n);
    den_ = mpz_get_si(d);
    big_.reset();
    return;
  }
  big_ = std::make_unique<Rational>(std::move(copy));
  num_ = 0;
  den_ = 1;
}

Rational Coeff::to_rational() const {
  return big_ ? *big_ : small_to_rational(num_, den_);
}

int Coeff::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

bool Coeff::is_integer() const {
  return big_ ? mpz_cmp_ui(big_->get_den_mpz_t(), 1) == 0 : den_ == 1;
}

std::string Coeff::get_str() const {
  if (big_) return big_->get_str();
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

std::size_t Coeff::hash() const {
  if (!big_) {
    return std::hash<std::int64_t>{}(num_) * 0x9e3779b97f4a7c15ULL ^
           std::hash<std::int64_t>{}(den_);
  }
  return std::hash<std::string>{}(big_->get_str());
}

Coeff Coeff::operator-() const {
  Coeff out = *this;
  if (out.big_) {
    mpq_neg(out.big_->get_mpq_t(), out.big_->get_mpq_t());
  } else {
    out.num_ = -out.num_;
  }
  return out;
}

Coeff& Coeff::operator+=(const Coeff& other) {
  if (!big_ && !other.big_) {
    if (den_ == 1 && other.den_ == 1) {
      std::int64_t s;
      if (!__builtin_add_overflow(num_, other.num_, &s) && s != INT64_MIN) {
        num_ = s;
        return *this;
      }
    }
    const i128 n = static_cast<i128>(num_) * other.den_ + static_cast<i128>(other.num_) * den_;
    const i128 d = static_cast<i128>(den_) * other.den_;
    if (reduce(n, d, num_, den_)) return *this;
  }
  assign(to_rational() + other.to_rational());
  return *this;
}

Coeff& Coeff::operator-=(const Coeff& other) { return *this += -other; }

Coeff& Coeff::operator*=(const Coeff& other) {
  if (!big_ && !other.big_) {
    const i128 n = static_cast<i128>(num_) * other.num_;
    const i128 d = static_cast<i128>(den_) * other.den_;
    if (d == 1 && fits(n)) {
      num_ = static_cast<std::int64_t>(n);
      return *this;
    }
    if (reduce(n, d, num_, den_)) return *this;
  }
  assign(to_rational() * other.to_rational());
  return *this;
}

Coeff& Coeff::operator/=(const Coeff& other) {
  if (other.is_zero()) throw DivisionByZero();
  if (!big_ && !other.big_) {
    const i128 n = static_cast<i128>(num_) * other.den_;
    const i128 d = static_cast<i128>(den_) * other.num_;
    if (reduce(n, d, num_, den_)) return *this;
  }
  assign(to_rational() / other.to_rational());
  return *this;
}

bool operator==(const Coeff& a, const Coeff& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // representations are unique
}

}  // namespace fcmono
