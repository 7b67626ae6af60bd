#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "fcmono/matrix.hpp"

namespace fcmono {

/// Ring map Q(zeta_L) -> F_p for a prime p = 1 mod L, sending zeta_L to a
/// fixed primitive L-th root of unity. Values whose denominators vanish mod p
/// have no image.
class PrimeEmbedding {
 public:
  /// The index-th prime p = 1 mod level above 2^61, with its chosen root.
  static const PrimeEmbedding& get(std::uint64_t level, unsigned index);

  std::uint64_t prime() const { return prime_; }
  std::uint64_t level() const { return level_; }
  /// Requires conductor(x) to divide level().
  std::optional<std::uint64_t> reduce(const CycNum& x) const;

 private:
  PrimeEmbedding(std::uint64_t level, unsigned index);
  std::uint64_t level_;
  std::uint64_t prime_;
  std::uint64_t root_;
  std::vector<std::uint64_t> powers_;  // root^j for j < level, when level is small
};

/// lcm of the conductors of all entries.
std::uint64_t matrix_level(const ExactMatrix& m);

/// Rank of the reduction of m modulo p. Never exceeds the exact rank, so a
/// full value certifies full rank. nullopt when an entry has no image.
std::optional<std::size_t> modular_rank(const ExactMatrix& m, const PrimeEmbedding& emb);
/// Determinant of the reduction, or nullopt when an entry has no image.
std::optional<std::uint64_t> modular_det(const ExactMatrix& m, const PrimeEmbedding& emb);

/// Largest modular rank over the first `primes` embeddings (0 when none apply).
std::size_t rank_lower_bound(const ExactMatrix& m, unsigned primes = 2);

}  // namespace fcmono
