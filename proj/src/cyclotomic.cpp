#include "fcmono/cyclotomic.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "fcmono/errors.hpp"

namespace fcmono {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) {
  if ((a | b) < (u64{1} << 32)) return a * b % m;
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 mod_inverse(u64 a, u64 m) {
  if (m == 1) return 0;
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(m);
  std::int64_t new_r = static_cast<std::int64_t>(a % m);
  while (new_r != 0) {
    const auto q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<u64>(t);
}

u64 reduce_exponent(std::int64_t power, u64 n) {
  const auto m = static_cast<std::int64_t>(n);
  auto r = power % m;
  if (r < 0) r += m;
  return static_cast<u64>(r);
}

std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

// Per-conductor data for the tensor basis.
struct PrimePowerPart {
  u64 p;
  u64 q;         // p^e
  u64 phi;       // phi(q)
  u64 step;      // q / p
  u64 cofactor;  // N / q
  u64 unit;      // cofactor^{-1} mod q
};

struct Context {
  u64 n;
  u64 phi;
  std::vector<PrimePowerPart> parts;
  // Bit i of top_digits[m] is set when the digit of m for parts[i] is at
  // least phi(q). Filled for moderate n only.
  std::vector<std::uint16_t> top_digits;
};

constexpr u64 kDigitTableLimit = u64{1} << 22;

std::shared_ptr<const Context> context(u64 n) {
  static std::mutex mutex;
  static std::unordered_map<u64, std::shared_ptr<const Context>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto ctx = std::make_shared<Context>();
  ctx->n = n;
  ctx->phi = 1;
  for (auto [p, e] : factorize(n)) {
    PrimePowerPart part{};
    part.p = p;
    part.q = 1;
    for (unsigned i = 0; i < e; ++i) part.q *= p;
    part.step = part.q / p;
    part.phi = part.q - part.step;
    part.cofactor = n / part.q;
    part.unit = mod_inverse(part.cofactor % part.q, part.q);
    ctx->phi *= part.phi;
    ctx->parts.push_back(part);
  }
  if (n <= kDigitTableLimit && ctx->parts.size() <= 16) {
    ctx->top_digits.assign(n, 0);
    for (std::size_t i = 0; i < ctx->parts.size(); ++i) {
      const auto& part = ctx->parts[i];
      for (u64 m = 0; m < n; ++m)
        if ((m % part.q) * part.unit % part.q >= part.phi)
          ctx->top_digits[m] |= static_cast<std::uint16_t>(1u << i);
    }
  }
  cache.emplace(n, ctx);
  return ctx;
}

// Writes zeta_N^m in the tensor basis and calls emit(key, sign) per term.
template <class Emit>
void expand_monomial(const Context& ctx, u64 m, Emit&& emit) {
  // Each prime-power part contributes either one digit (sign +1) or p-1
  // digits (sign -1). Enumerate the cartesian product.
  struct Choice {
    u64 first;
    u64 count;
    u64 stride;
    u64 cofactor;
    u64 q;
  };
  Choice choices[16];
  std::size_t nparts = 0;
  int sign = 1;
  for (const auto& part : ctx.parts) {
    const u64 digit = mul_mod(m % part.q, part.unit, part.q);
    Choice c{digit, 1, part.step, part.cofactor, part.q};
    if (digit >= part.phi) {
      c.first = digit - (part.p - 1) * part.step;
      c.count = part.p - 1;
      sign = -sign;
    }
    choices[nparts++] = c;
  }
  u64 idx[16] = {};
  while (true) {
    u64 key = 0;
    for (std::size_t i = 0; i < nparts; ++i) {
      const auto& c = choices[i];
      const u64 digit = c.first + idx[i] * c.stride;
      key = (key + mul_mod(digit, c.cofactor, ctx.n)) % ctx.n;
    }
    emit(key, sign);
    std::size_t i = 0;
    for (; i < nparts; ++i) {
      if (++idx[i] < choices[i].count) break;
      idx[i] = 0;
    }
    if (i == nparts) break;
  }
}

std::vector<CycNum::Term> collect(std::map<u64, Coeff>& acc) {
  std::vector<CycNum::Term> out;
  out.reserve(acc.size());
  for (auto& [key, coeff] : acc)
    if (!coeff.is_zero()) out.push_back({key, std::move(coeff)});
  return out;
}

std::uint64_t lcm_u64(u64 a, u64 b) { return std::lcm(a, b); }

using i128 = __int128;

// Integer numerators over one common denominator, available when every
// scaled numerator fits in `bits` bits. Arithmetic on these avoids mpq.
struct SmallView {
  i128 den = 1;
  std::vector<std::int64_t> num;
};

bool small_view(const std::vector<CycNum::Term>& terms, std::size_t bits, SmallView& out) {
  std::int64_t den = 1;
  for (const auto& t : terms) {
    if (!t.coeff.is_small()) return false;
    const std::int64_t d = t.coeff.den();
    if (d == 1 || den % d == 0) continue;
    const i128 l = static_cast<i128>(den / std::gcd(den, d)) * d;
    if (l > (i128{1} << 62)) return false;
    den = static_cast<std::int64_t>(l);
  }
  out.den = den;
  out.num.resize(terms.size());
  const i128 limit = i128{1} << bits;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& c = terms[i].coeff;
    const i128 scaled = static_cast<i128>(c.num()) * (den / c.den());
    if (scaled >= limit || scaled <= -limit) return false;
    out.num[i] = static_cast<std::int64_t>(scaled);
  }
  return true;
}

struct I128Scratch {
  std::vector<i128> acc;
  std::vector<char> used;
  std::vector<u64> touched;
  void prepare(u64 n) {
    if (acc.size() < n) {
      acc.resize(n, 0);
      used.resize(n, 0);
    }
    touched.clear();
  }
  void touch(u64 m) {
    if (!used[m]) {
      used[m] = 1;
      touched.push_back(m);
    }
  }
};

// Sorts the touched exponents, scanning the flags when they are dense.
void sort_touched(std::vector<u64>& touched, const std::vector<char>& used, u64 n) {
  if (touched.size() * 16 < n) {
    std::sort(touched.begin(), touched.end());
    return;
  }
  touched.clear();
  for (u64 m = 0; m < n; ++m)
    if (used[m]) touched.push_back(m);
}

I128Scratch& i128_scratch() {
  thread_local I128Scratch s;
  return s;
}

}  // namespace

std::uint64_t euler_phi(std::uint64_t n) { return context(n)->phi; }

const std::vector<Integer>& cyclotomic_polynomial(std::uint64_t n) {
  static std::mutex mutex;
  static std::unordered_map<u64, std::unique_ptr<std::vector<Integer>>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;

  // Phi_n = prod_{d | n} (x^d - 1)^{mu(n/d)}: multiply by the mu = +1
  // factors, then divide exactly by the mu = -1 factors.
  auto mobius = [](u64 m) {
    int mu = 1;
    for (auto [p, e] : factorize(m)) {
      if (e > 1) return 0;
      mu = -mu;
    }
    return mu;
  };
  std::vector<Integer> poly{1};
  std::vector<u64> divide_by;
  for (u64 d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const int mu = mobius(n / d);
    if (mu == 1) {
      std::vector<Integer> next(poly.size() + d, 0);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i + d] += poly[i];
        next[i] -= poly[i];
      }
      poly = std::move(next);
    } else if (mu == -1) {
      divide_by.push_back(d);
    }
  }
  for (u64 d : divide_by) {
    // poly = quot * (x^d - 1)  =>  quot[i] = quot[i - d] - poly[i].
    std::vector<Integer> quot(poly.size() - d, 0);
    for (std::size_t i = 0; i < quot.size(); ++i) {
      quot[i] = -poly[i];
      if (i >= d) quot[i] += quot[i - d];
    }
    poly = std::move(quot);
  }
  auto [pos, _] = cache.emplace(n, std::make_unique<std::vector<Integer>>(poly));
  return *pos->second;
}

CycNum::CycNum(long value) : CycNum(Rational(value)) {}

CycNum::CycNum(const Rational& value) {
  if (value != 0) {
    terms_.push_back({0, Coeff(value)});
  }
}

CycNum CycNum::root_of_unity(std::uint64_t conductor, std::int64_t power) {
  if (conductor == 0) throw PreconditionError("conductor must be positive");
  return CycNum(conductor, {Term{reduce_exponent(power, conductor), Rational(1)}});
}

CycNum CycNum::from_power_basis(std::uint64_t conductor,
                                const std::vector<Rational>& coeffs) {
  if (conductor == 0) throw PreconditionError("conductor must be positive");
  std::map<u64, Coeff> acc;
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    if (coeffs[j] != 0) acc[j % conductor] += Coeff(coeffs[j]);
  return CycNum(conductor, collect(acc));
}

CycNum CycNum::from_unsorted(std::uint64_t conductor, std::vector<Term> terms) {
  std::map<u64, Coeff> acc;
  for (auto& t : terms) acc[t.exponent % conductor] += t.coeff;
  return CycNum(conductor, collect(acc));
}

namespace {

// Moves exponents with a top digit into the tensor basis, one prime-power
// digit at a time: for digit d >= phi(q), zeta_q^d = -sum_{j=1}^{p-1}
// zeta_q^{d - j q/p}. The new digits are below phi(q) and the other digits
// are unchanged. `is_zero(m)`, `take(m)` and `subtract(target)` act on the
// caller's scratch.
template <class Touched, class IsZero, class Move>
void reduce_digits(const Context& ctx, Touched& touched, IsZero is_zero, Move move) {
  const u64 n = ctx.n;
  const bool table = !ctx.top_digits.empty();
  for (std::size_t i = 0; i < ctx.parts.size(); ++i) {
    const auto& part = ctx.parts[i];
    const u64 shift = mul_mod(part.step, part.cofactor, n);
    const std::size_t count = touched.size();
    for (std::size_t idx = 0; idx < count; ++idx) {
      const u64 m = touched[idx];
      if (table) {
        if (!((ctx.top_digits[m] >> i) & 1u)) continue;
      } else if (mul_mod(m % part.q, part.unit, part.q) < part.phi) {
        continue;
      }
      if (is_zero(m)) continue;
      move(m, shift, part.p);
    }
  }
}

}  // namespace

CycNum CycNum::canonical() const {
  if (terms_.empty()) return CycNum();
  const auto ctx = context(conductor_);
  const u64 n = conductor_;
  SmallView view;
  if (small_view(terms_, 62, view)) {
    auto& sc = i128_scratch();
    sc.prepare(n);
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      sc.touch(terms_[i].exponent);
      sc.acc[terms_[i].exponent] += view.num[i];
    }
    reduce_digits(
        *ctx, sc.touched, [&](u64 m) { return sc.acc[m] == 0; },
        [&](u64 m, u64 shift, u64 p) {
          const i128 c = sc.acc[m];
          sc.acc[m] = 0;
          u64 target = m;
          for (u64 j = 1; j < p; ++j) {
            target = target >= shift ? target - shift : target + n - shift;
            sc.touch(target);
            sc.acc[target] -= c;
          }
        });
    sort_touched(sc.touched, sc.used, n);
    std::vector<Term> terms;
    u64 g = n;
    for (u64 m : sc.touched) {
      sc.used[m] = 0;
      if (sc.acc[m] != 0) {
        g = std::gcd(g, m);
        terms.push_back({m, Coeff::fraction(sc.acc[m], view.den)});
      }
      sc.acc[m] = 0;
    }
    if (terms.empty()) return CycNum();
    u64 reduced = n;
    if (g > 1) {
      reduced /= g;
      for (auto& t : terms) t.exponent /= g;
    }
    return CycNum(reduced, std::move(terms));
  }
  thread_local std::vector<Rational> buf;
  thread_local std::vector<char> used;
  thread_local std::vector<u64> touched;
  if (buf.size() < n) {
    buf.resize(n);
    used.resize(n, 0);
  }
  touched.clear();
  auto touch = [&](u64 m) {
    if (!used[m]) {
      used[m] = 1;
      touched.push_back(m);
    }
  };
  for (const auto& t : terms_) {
    touch(t.exponent);
    buf[t.exponent] += t.coeff.to_rational();
  }
  Rational c;
  reduce_digits(
      *ctx, touched, [&](u64 m) { return sgn(buf[m]) == 0; },
      [&](u64 m, u64 shift, u64 p) {
        mpq_swap(c.get_mpq_t(), buf[m].get_mpq_t());
        buf[m] = 0;
        u64 target = m;
        for (u64 j = 1; j < p; ++j) {
          target = target >= shift ? target - shift : target + n - shift;
          touch(target);
          mpq_sub(buf[target].get_mpq_t(), buf[target].get_mpq_t(), c.get_mpq_t());
        }
      });
  sort_touched(touched, used, n);
  std::vector<Term> terms;
  u64 g = n;
  for (u64 m : touched) {
    used[m] = 0;
    if (sgn(buf[m]) != 0) {
      g = std::gcd(g, m);
      terms.push_back({m, Coeff(buf[m])});
    }
    buf[m] = 0;
  }
  if (terms.empty()) return CycNum();
  u64 reduced = n;
  if (g > 1) {
    reduced /= g;
    for (auto& t : terms) t.exponent /= g;
  }
  return CycNum(reduced, std::move(terms));
}

bool CycNum::is_zero() const {
  if (terms_.empty()) return true;
  return canonical().terms_.empty();
}

bool CycNum::is_one() const { return (*this - CycNum(1)).is_zero(); }

bool CycNum::is_rational() const { return canonical().conductor_ == 1; }

Rational CycNum::to_rational() const {
  const auto c = canonical();
  if (c.conductor_ != 1)
    throw PreconditionError("value is not rational: " + to_string());
  return c.terms_.empty() ? Rational(0) : c.terms_.front().coeff.to_rational();
}

std::vector<Rational> CycNum::power_basis_coeffs() const {
  const auto c = canonical();
  const u64 n = c.conductor_;
  const auto& phi_poly = cyclotomic_polynomial(n);
  const std::size_t deg = phi_poly.size() - 1;
  std::vector<Rational> dense(std::max<std::size_t>(n, deg), Rational(0));
  for (const auto& t : c.terms_) dense[t.exponent] += t.coeff.to_rational();
  for (std::size_t k = dense.size(); k-- > deg;) {
    if (dense[k] == 0) continue;
    const Rational lead = dense[k];
    const std::size_t shift = k - deg;
    for (std::size_t i = 0; i <= deg; ++i)
      if (phi_poly[i] != 0) dense[shift + i] -= lead * Rational(phi_poly[i]);
  }
  dense.resize(deg);
  return dense;
}

CycNum CycNum::lift(std::uint64_t conductor) const {
  if (conductor % conductor_ != 0)
    throw PreconditionError("lift target must be a multiple of the conductor");
  if (conductor == conductor_) return *this;
  const u64 factor = conductor / conductor_;
  auto terms = terms_;
  for (auto& t : terms) t.exponent *= factor;
  return CycNum(conductor, std::move(terms));
}

CycNum CycNum::galois(std::int64_t a) const {
  const u64 ua = reduce_exponent(a, conductor_);
  if (std::gcd(ua, conductor_) != 1 && conductor_ > 1)
    throw PreconditionError("Galois exponent must be coprime to the conductor");
  // Multiplication by a unit permutes exponents, so sorting suffices.
  std::vector<Term> terms = terms_;
  for (auto& t : terms) t.exponent = mul_mod(t.exponent, ua, conductor_);
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return x.exponent < y.exponent; });
  return CycNum(conductor_, std::move(terms));
}

CycNum CycNum::involution() const { return galois(-1); }

CycNum CycNum::operator-() const {
  auto out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

CycNum& CycNum::operator+=(const CycNum& other) {
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) return *this = other;
  const u64 n = lcm_u64(conductor_, other.conductor_);
  const u64 fx = n / conductor_;
  const u64 fy = n / other.conductor_;
  // Scaling by a constant keeps the exponents sorted.
  const auto& a = terms_;
  const auto& b = other.terms_;
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    const u64 ea = i < a.size() ? a[i].exponent * fx : 0;
    const u64 eb = j < b.size() ? b[j].exponent * fy : 0;
    if (j == b.size() || (i < a.size() && ea < eb)) {
      out.push_back({ea, std::move(terms_[i++].coeff)});
    } else if (i == a.size() || eb < ea) {
      out.push_back({eb, b[j++].coeff});
    } else {
      Coeff sum = a[i].coeff + b[j].coeff;
      if (!sum.is_zero()) out.push_back({ea, std::move(sum)});
      ++i;
      ++j;
    }
  }
  if (out.empty()) return *this = CycNum();
  conductor_ = n;
  terms_ = std::move(out);
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& other) { return *this += -other; }

CycNum operator*(const CycNum& lhs, const CycNum& rhs) {
  if (lhs.terms_.empty() || rhs.terms_.empty()) return CycNum();
  if (lhs.terms_.size() == 1 && lhs.terms_[0].exponent == 0) {
    CycNum out = rhs;
    for (auto& t : out.terms_) t.coeff *= lhs.terms_[0].coeff;
    return out;
  }
  if (rhs.terms_.size() == 1 && rhs.terms_[0].exponent == 0) return rhs * lhs;
  const u64 n = std::lcm(lhs.conductor_, rhs.conductor_);
  const u64 fx = n / lhs.conductor_;
  const u64 fy = n / rhs.conductor_;
  SmallView vx, vy;
  if (small_view(lhs.terms_, 40, vx) && small_view(rhs.terms_, 40, vy)) {
    auto& sc = i128_scratch();
    sc.prepare(n);
    for (std::size_t i = 0; i < lhs.terms_.size(); ++i) {
      const u64 ea = lhs.terms_[i].exponent * fx;
      const i128 na = vx.num[i];
      for (std::size_t j = 0; j < rhs.terms_.size(); ++j) {
        u64 e = ea + rhs.terms_[j].exponent * fy;
        if (e >= n) e -= n;
        sc.touch(e);
        sc.acc[e] += na * vy.num[j];
      }
    }
    sort_touched(sc.touched, sc.used, n);
    const i128 den = vx.den * vy.den;
    std::vector<CycNum::Term> terms;
    terms.reserve(sc.touched.size());
    for (u64 e : sc.touched) {
      sc.used[e] = 0;
      if (sc.acc[e] != 0) terms.push_back({e, Coeff::fraction(sc.acc[e], den)});
      sc.acc[e] = 0;
    }
    CycNum out(n, std::move(terms));
    if (out.terms_.empty()) return CycNum();
    if (out.terms_.size() > 16) return out.compact();
    return out;
  }
  const CycNum x = lhs.lift(n);
  const CycNum y = rhs.lift(n);
  // Accumulate into a per-thread dense scratch indexed by exponent.
  thread_local std::vector<Rational> scratch;
  thread_local std::vector<char> used;
  thread_local std::vector<u64> touched;
  if (scratch.size() < n) {
    scratch.resize(n);
    used.resize(n, 0);
  }
  touched.clear();
  Rational prod;
  for (const auto& a : x.terms_) {
    for (const auto& b : y.terms_) {
      u64 e = a.exponent + b.exponent;
      if (e >= n) e -= n;
      prod = a.coeff.to_rational() * b.coeff.to_rational();
      if (!used[e]) {
        used[e] = 1;
        touched.push_back(e);
        mpq_swap(scratch[e].get_mpq_t(), prod.get_mpq_t());
      } else {
        mpq_add(scratch[e].get_mpq_t(), scratch[e].get_mpq_t(), prod.get_mpq_t());
      }
    }
  }
  sort_touched(touched, used, n);
  std::vector<CycNum::Term> terms;
  terms.reserve(touched.size());
  for (u64 e : touched) {
    used[e] = 0;
    if (sgn(scratch[e]) != 0) terms.push_back({e, Coeff(scratch[e])});
    scratch[e] = 0;
  }
  CycNum out(n, std::move(terms));
  if (out.terms_.empty()) return CycNum();
  // Sparse products stay in group-ring form; larger ones take whichever
  // form is smaller.
  if (out.terms_.size() > 16) return out.compact();
  return out;
}

CycNum CycNum::compact() const {
  CycNum c = canonical();
  return c.terms_.size() <= terms_.size() ? c : *this;
}

CycNum& CycNum::operator*=(const CycNum& other) { return *this = *this * other; }

CycNum& CycNum::operator/=(const CycNum& other) {
  return *this = *this * other.inverse();
}

CycNum inverse_one_minus_root(std::uint64_t conductor, std::int64_t power) {
  const u64 k = reduce_exponent(power, conductor);
  const u64 order = conductor / std::gcd(conductor, k);
  if (order == 1) throw DivisionByZero();
  // z = zeta_N^k has order m; 1/(1 - z) = -(1/m) sum_{j<m} j z^j.
  std::vector<CycNum::Term> terms;
  terms.reserve(order);
  for (u64 j = 1; j < order; ++j) {
    terms.push_back({mul_mod(j, k, conductor),
                     Coeff::fraction(-static_cast<std::int64_t>(j), static_cast<std::int64_t>(order))});
  }
  return CycNum::from_unsorted(conductor, std::move(terms));
}

CycNum CycNum::inverse_small() const {
  // One or two group-ring terms; the caller has checked the value is nonzero.
  const u64 n = conductor_;
  if (terms_.size() == 1) {
    const auto& t = terms_.front();
    Coeff c = Coeff(1) / t.coeff;
    return CycNum(n, {Term{(n - t.exponent) % n, c}});
  }
  const auto& t1 = terms_[0];
  const auto& t2 = terms_[1];
  // c1 z^m1 (1 + r w), w = z^d.
  const Coeff r = t2.coeff / t1.coeff;
  const u64 d = (t2.exponent + n - t1.exponent) % n;
  const u64 order = n / std::gcd(n, d);
  const CycNum prefactor(n, {Term{(n - t1.exponent) % n, Coeff(1) / t1.coeff}});
  // (-r)^order == 1 happens only for r = -1, or r = 1 with even order.
  if (r == Coeff(-1)) return prefactor * inverse_one_minus_root(n, static_cast<std::int64_t>(d));
  if (r == Coeff(1) && order % 2 == 0) {
    // 1 + w = 1 - (-w), and -1 = zeta_n^{n/2} since n is even here.
    return prefactor * inverse_one_minus_root(n, static_cast<std::int64_t>((d + n / 2) % n));
  }
  // 1/(1 + r w) = sum_{j<m} (-r w)^j / (1 - (-r)^m).
  const Coeff neg_r = -r;
  Coeff power(1);
  std::vector<Term> series;
  series.reserve(order);
  for (u64 j = 0; j < order; ++j) {
    series.push_back({mul_mod(j, d, n), power});
    power *= neg_r;
  }
  const Coeff denom = Coeff(1) - power;
  for (auto& t : series) t.coeff /= denom;
  return prefactor * from_unsorted(n, std::move(series));
}

CycNum CycNum::inverse_tower() const {
  // Canonical input with minimal conductor n. Split off one prime power q
  // and multiply by the conjugates over Q(zeta_{n/q}); the product is the
  // relative norm, which lives in the smaller field.
  const u64 n = conductor_;
  if (n <= 2) return CycNum(1 / to_rational());
  const auto ctx = context(n);
  const auto& part = ctx->parts.back();
  const u64 sub = n / part.q;
  CycNum conjugates(1L);
  for (u64 k = 1; k < part.q; ++k) {
    const u64 a = 1 + k * sub;
    if (std::gcd(a, n) != 1) continue;
    conjugates = (conjugates * galois(static_cast<std::int64_t>(a))).canonical();
  }
  const CycNum norm = (*this * conjugates).canonical();
  if (norm.conductor_ == n)
    throw Error("internal error: relative norm did not descend");
  return (conjugates * norm.inverse()).canonical();
}

CycNum CycNum::inverse() const {
  const CycNum c = canonical();
  if (c.terms_.empty()) throw DivisionByZero();
  if (terms_.size() <= 2) return inverse_small();
  if (c.terms_.size() <= 2) return c.inverse_small();
  return c.inverse_tower();
}

CycNum CycNum::pow(std::int64_t exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  CycNum result(1L), base = *this;
  auto e = static_cast<u64>(exponent);
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

bool operator==(const CycNum& lhs, const CycNum& rhs) {
  return (lhs - rhs).is_zero();
}

std::size_t CycNum::hash() const {
  const auto c = canonical();
  std::size_t h = std::hash<u64>{}(c.conductor_);
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (const auto& t : c.terms_) {
    mix(std::hash<u64>{}(t.exponent));
    mix(t.coeff.hash());
  }
  return h;
}

std::string CycNum::to_string() const {
  const auto c = canonical();
  if (c.terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : c.terms_) {
    if (!first) out << " + ";
    first = false;
    out << t.coeff.get_str();
    if (t.exponent != 0) out << "*z" << c.conductor_ << "^" << t.exponent;
  }
  return out.str();
}

CycNum cyclotomic(std::uint64_t conductor, std::int64_t power) {
  return CycNum::root_of_unity(conductor, power).canonical();
}

void ParameterSet::validate() const {
  if (c.empty()) throw PreconditionError("parameter set needs n >= 1 values c_k");
}

std::string ParameterSet::to_string() const {
  std::string out = "a=" + fcmono::to_string(a) + " b=" + fcmono::to_string(b) + " c=(";
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k) out += ",";
    out += fcmono::to_string(c[k]);
  }
  return out + ")";
}

ParameterSet ParameterSet::parse(std::string_view a, std::string_view b,
                                 std::string_view c_list) {
  ParameterSet p;
  p.a = parse_rational(a);
  p.b = parse_rational(b);
  while (true) {
    const auto comma = c_list.find(',');
    p.c.push_back(parse_rational(c_list.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    c_list.remove_prefix(comma + 1);
  }
  return p;
}

CycNum root_of_unity(const Rational& q) {
  const Integer& den = q.get_den();
  if (!den.fits_ulong_p()) throw PreconditionError("denominator too large");
  const u64 n = den.get_ui();
  Integer num = q.get_num() % den;
  if (num < 0) num += den;
  return CycNum::root_of_unity(n, static_cast<std::int64_t>(num.get_ui()));
}

UnitRoots unit_roots(const ParameterSet& params) {
  params.validate();
  UnitRoots roots;
  u64 n = 1;
  auto den = [](const Rational& q) {
    if (!q.get_den().fits_ulong_p()) throw PreconditionError("denominator too large");
    return static_cast<u64>(q.get_den().get_ui());
  };
  n = std::lcm(n, den(params.a));
  n = std::lcm(n, den(params.b));
  for (const auto& ck : params.c) n = std::lcm(n, den(ck));
  roots.conductor = n;
  roots.alpha = root_of_unity(params.a).lift(n);
  roots.beta = root_of_unity(params.b).lift(n);
  for (const auto& ck : params.c) roots.gamma.push_back(root_of_unity(ck).lift(n));
  return roots;
}

}  // namespace fcmono
