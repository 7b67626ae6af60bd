#include "fcmono/modular.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "fcmono/errors.hpp"

namespace fcmono {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kPowerTableLimit = u64{1} << 22;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are deterministic for all 64-bit inputs.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<u64> prime_divisors(u64 n) {
  std::vector<u64> out;
  for (u64 p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

u64 reduce_rational(const Rational& q, u64 p, bool& ok) {
  const u64 den = mpz_fdiv_ui(q.get_den_mpz_t(), p);
  if (den == 0) {
    ok = false;
    return 0;
  }
  const u64 num = mpz_fdiv_ui(q.get_num_mpz_t(), p);
  return mul_mod(num, inv_mod(den, p), p);
}

u64 reduce_coeff(const Coeff& q, u64 p, bool& ok) {
  if (!q.is_small()) return reduce_rational(q.big(), p, ok);
  const u64 den = static_cast<u64>(q.den()) % p;
  if (den == 0) {
    ok = false;
    return 0;
  }
  const std::int64_t n = q.num();
  u64 num = (n < 0 ? static_cast<u64>(-(n + 1)) + 1 : static_cast<u64>(n)) % p;
  if (n < 0 && num != 0) num = p - num;
  return mul_mod(num, inv_mod(den, p), p);
}

std::optional<std::vector<std::vector<u64>>> reduce_matrix(const ExactMatrix& m,
                                                           const PrimeEmbedding& emb) {
  std::vector<std::vector<u64>> a(m.rows(), std::vector<u64>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto x = emb.reduce(m(r, c));
      if (!x) return std::nullopt;
      a[r][c] = *x;
    }
  return a;
}

// Row-reduces in place; returns the rank and the determinant when square.
std::size_t eliminate(std::vector<std::vector<u64>>& a, u64 p, u64* det) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  u64 d = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) {
      d = 0;
      continue;
    }
    if (pivot != row) {
      std::swap(a[pivot], a[row]);
      d = d == 0 ? 0 : p - d;
    }
    d = mul_mod(d, a[row][col], p);
    const u64 inv = inv_mod(a[row][col], p);
    for (std::size_t r = row + 1; r < rows; ++r) {
      if (a[r][col] == 0) continue;
      const u64 f = mul_mod(a[r][col], inv, p);
      for (std::size_t c = col; c < cols; ++c) {
        const u64 t = mul_mod(f, a[row][c], p);
        a[r][c] = a[r][c] >= t ? a[r][c] - t : a[r][c] + p - t;
      }
    }
    ++row;
  }
  if (det) *det = row == rows && rows == cols ? d % p : 0;
  return row;
}

}  // namespace

PrimeEmbedding::PrimeEmbedding(u64 level, unsigned index) : level_(level) {
  if (level == 0) throw PreconditionError("embedding level must be positive");
  u64 k = ((u64{1} << 61) / level) + 1;
  unsigned found = 0;
  for (;; ++k) {
    const u64 candidate = k * level + 1;
    if (!is_prime(candidate)) continue;
    if (found++ == index) {
      prime_ = candidate;
      break;
    }
  }
  const auto qs = prime_divisors(level);
  for (u64 g = 2;; ++g) {
    const u64 w = pow_mod(g, (prime_ - 1) / level, prime_);
    bool primitive = true;
    for (u64 q : qs)
      if (pow_mod(w, level / q, prime_) == 1) primitive = false;
    if (primitive) {
      root_ = w;
      break;
    }
  }
  if (level <= kPowerTableLimit) {
    powers_.resize(level);
    u64 x = 1;
    for (u64 j = 0; j < level; ++j) {
      powers_[j] = x;
      x = mul_mod(x, root_, prime_);
    }
  }
}

const PrimeEmbedding& PrimeEmbedding::get(u64 level, unsigned index) {
  static std::mutex mutex;
  static std::map<std::pair<u64, unsigned>, std::unique_ptr<PrimeEmbedding>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{level, index}];
  if (!slot) slot.reset(new PrimeEmbedding(level, index));
  return *slot;
}

std::optional<u64> PrimeEmbedding::reduce(const CycNum& x) const {
  const u64 n = x.conductor();
  if (level_ % n != 0) throw PreconditionError("conductor does not divide the embedding level");
  const u64 stride = level_ / n;
  u64 acc = 0;
  bool ok = true;
  for (const auto& t : x.terms()) {
    const u64 c = reduce_coeff(t.coeff, prime_, ok);
    if (!ok) return std::nullopt;
    const u64 e = t.exponent * stride;
    const u64 w = powers_.empty() ? pow_mod(root_, e, prime_) : powers_[e];
    acc += mul_mod(c, w, prime_);
    if (acc >= prime_) acc -= prime_;
  }
  return acc;
}

u64 matrix_level(const ExactMatrix& m) {
  u64 level = 1;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) level = std::lcm(level, m(r, c).conductor());
  return level;
}

std::optional<std::size_t> modular_rank(const ExactMatrix& m, const PrimeEmbedding& emb) {
  auto a = reduce_matrix(m, emb);
  if (!a) return std::nullopt;
  return eliminate(*a, emb.prime(), nullptr);
}

std::optional<u64> modular_det(const ExactMatrix& m, const PrimeEmbedding& emb) {
  if (m.rows() != m.cols()) throw DimensionMismatch("det needs a square matrix");
  auto a = reduce_matrix(m, emb);
  if (!a) return std::nullopt;
  u64 d = 0;
  eliminate(*a, emb.prime(), &d);
  return d;
}

std::size_t rank_lower_bound(const ExactMatrix& m, unsigned primes) {
  const u64 level = matrix_level(m);
  std::size_t best = 0;
  const std::size_t full = std::min(m.rows(), m.cols());
  for (unsigned i = 0; i < primes && best < full; ++i) {
    const auto r = modular_rank(m, PrimeEmbedding::get(level, i));
    if (r && *r > best) best = *r;
  }
  return best;
}

}  // namespace fcmono
