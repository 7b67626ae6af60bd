#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "fcmono/cyclotomic.hpp"

namespace fcmono {

using Vector = std::vector<CycNum>;

/// Dense row-major matrix over the cyclotomic numbers.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);
  ExactMatrix(std::size_t rows, std::size_t cols, std::vector<CycNum> entries);
  /// Rational entries, one initializer list per row.
  ExactMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static ExactMatrix identity(std::size_t n);
  /// The matrix whose columns are the given vectors.
  static ExactMatrix from_columns(const std::vector<Vector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  CycNum& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const CycNum& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  const std::vector<CycNum>& entries() const { return entries_; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;

  ExactMatrix transpose() const;
  /// Applies the involution entrywise.
  ExactMatrix involution() const;
  /// Every entry rewritten in canonical form.
  ExactMatrix canonical() const;

  ExactMatrix operator-() const;
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const CycNum& s, const ExactMatrix& a);
  friend Vector operator*(const ExactMatrix& a, const Vector& v);

  /// Exact entrywise field equality.
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

  bool is_identity() const;
  bool is_zero() const;
  bool is_upper_triangular() const;
  bool is_lower_triangular() const;
  /// True when every entry is rational (resp. an integer).
  bool is_rational() const;
  bool is_integral() const;

  std::size_t hash() const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<CycNum> entries_;
};

struct ExactMatrixHash {
  std::size_t operator()(const ExactMatrix& m) const { return m.hash(); }
};

/// Tensor product with the block layout
///
///   A (x) B = [ A b_11  A b_12 ... ]
///             [ A b_21  A b_22 ... ]
///
/// i.e. block (i, j) is A scaled by b_ij. This is the reverse of the usual
/// Kronecker convention: the index of the LEFT factor varies fastest, so
/// (A (x) B)(u (x) w) = (Au) (x) (Bw) with u's index fastest.
ExactMatrix paper_kron(const ExactMatrix& a, const ExactMatrix& b);
/// Vector counterpart of paper_kron: entry p + dim(u) * i is u_p * w_i.
Vector paper_kron(const Vector& u, const Vector& w);

/// Result of reducing a matrix to row echelon form.
struct Echelon {
  ExactMatrix reduced;                // reduced row echelon form
  std::vector<std::size_t> pivots;    // pivot column of each nonzero row
  std::size_t swaps = 0;
};

/// Gauss-Jordan elimination; the pivot of each column is its first nonzero
/// entry at or below the current row.
Echelon row_reduce(const ExactMatrix& m);
std::size_t rank(const ExactMatrix& m);
CycNum det(const ExactMatrix& m);
/// Linearly independent vectors spanning the kernel.
std::vector<Vector> kernel_basis(const ExactMatrix& m);
/// Throws SingularMatrix for singular input.
ExactMatrix inverse(const ExactMatrix& m);
/// Solves A x = b for nonsingular square A; throws SingularMatrix otherwise.
Vector solve(const ExactMatrix& a, const Vector& b);

/// True when v lies in the span of the given vectors.
bool in_span(const std::vector<Vector>& basis, const Vector& v);
/// Rank of the matrix whose columns are the vectors.
std::size_t rank_of(const std::vector<Vector>& vectors);

Vector zero_vector(std::size_t n);
bool is_zero(const Vector& v);
bool equal(const Vector& a, const Vector& b);
Vector involution(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const CycNum& s, const Vector& v);
/// Bilinear pairing sum_i a_i b_i.
CycNum dot(const Vector& a, const Vector& b);

/// Multi-index I = (i_1, ..., i_n) with i_k in {0, 1}.
class IndexWord {
 public:
  IndexWord() = default;
  explicit IndexWord(std::vector<int> bits);
  /// The word whose linear rank is r: i_k is bit k-1 of r.
  static IndexWord from_rank(std::size_t n, std::size_t rank);
  static IndexWord zeros(std::size_t n) { return IndexWord(std::vector<int>(n, 0)); }
  static IndexWord ones(std::size_t n) { return IndexWord(std::vector<int>(n, 1)); }
  /// All 2^n words in linear-rank order.
  static std::vector<IndexWord> all(std::size_t n);

  std::size_t size() const { return bits_.size(); }
  int operator[](std::size_t k) const { return bits_[k]; }
  const std::vector<int>& bits() const { return bits_; }

  /// sum_k i_k 2^{k-1}; i_1 varies fastest.
  std::size_t rank() const;
  /// |I| = i_1 + ... + i_n.
  int weight() const;
  /// Entrywise product I . I'.
  IndexWord operator*(const IndexWord& other) const;

  std::string to_string() const;

  friend bool operator==(const IndexWord&, const IndexWord&) = default;

 private:
  std::vector<int> bits_;
};

/// Standard unit vector e_I = e_{i_1} (x) ... (x) e_{i_n} of length 2^n.
Vector basis_vector(const IndexWord& word);

}  // namespace fcmono
