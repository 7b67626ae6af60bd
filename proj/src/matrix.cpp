#include "fcmono/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "fcmono/errors.hpp"
#include "fcmono/modular.hpp"

namespace fcmono {

namespace {

void require_same_shape(const ExactMatrix& a, const ExactMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    std::ostringstream msg;
    msg << op << ": shapes " << a.rows() << "x" << a.cols() << " and " << b.rows()
        << "x" << b.cols() << " differ";
    throw DimensionMismatch(msg.str());
  }
}

void require_length(std::size_t a, std::size_t b, const char* op) {
  if (a != b) {
    std::ostringstream msg;
    msg << op << ": lengths " << a << " and " << b << " differ";
    throw DimensionMismatch(msg.str());
  }
}

void require_square(const ExactMatrix& m, const char* op) {
  if (!m.is_square()) {
    std::ostringstream msg;
    msg << op << ": matrix is " << m.rows() << "x" << m.cols() << ", not square";
    throw DimensionMismatch(msg.str());
  }
}

}  // namespace

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, CycNum(0)) {}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<CycNum> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw DimensionMismatch("matrix entry count does not match its shape");
  }
}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    for (long v : row) entries_.emplace_back(v);
  }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = CycNum(1);
  return m;
}

ExactMatrix ExactMatrix::from_columns(const std::vector<Vector>& columns) {
  const std::size_t cols = columns.size();
  const std::size_t rows = cols == 0 ? 0 : columns.front().size();
  ExactMatrix m(rows, cols);
  for (std::size_t c = 0; c < cols; ++c) {
    require_length(columns[c].size(), rows, "from_columns");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Vector ExactMatrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector ExactMatrix::row(std::size_t r) const {
  return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

ExactMatrix ExactMatrix::involution() const {
  ExactMatrix out = *this;
  for (auto& x : out.entries_) x = x.involution();
  return out;
}

ExactMatrix ExactMatrix::canonical() const {
  ExactMatrix out = *this;
  for (auto& x : out.entries_) x = x.canonical();
  return out;
}

ExactMatrix ExactMatrix::operator-() const {
  ExactMatrix out = *this;
  for (auto& x : out.entries_) x = -x;
  return out;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_shape(a, b, "matrix sum");
  ExactMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
  return out;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_shape(a, b, "matrix difference");
  ExactMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] -= b.entries_[i];
  return out;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) {
    std::ostringstream msg;
    msg << "matrix product: " << a.rows_ << "x" << a.cols_ << " times " << b.rows_ << "x"
        << b.cols_;
    throw DimensionMismatch(msg.str());
  }
  ExactMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const CycNum& aik = a(i, k);
      if (aik.terms().empty()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const CycNum& bkj = b(k, j);
        if (bkj.terms().empty()) continue;
        out(i, j) += aik * bkj;
      }
    }
  }
  for (auto& x : out.entries_) x = x.compact();
  return out;
}

ExactMatrix operator*(const CycNum& s, const ExactMatrix& a) {
  ExactMatrix out = a;
  for (auto& x : out.entries_) x = (s * x).compact();
  return out;
}

Vector operator*(const ExactMatrix& a, const Vector& v) {
  require_length(a.cols_, v.size(), "matrix-vector product");
  Vector out(a.rows_, CycNum(0));
  for (std::size_t i = 0; i < a.rows_; ++i) {
    CycNum acc(0);
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).terms().empty() || v[k].terms().empty()) continue;
      acc += a(i, k) * v[k];
    }
    out[i] = acc.compact();
  }
  return out;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i)
    if (a.entries_[i] != b.entries_[i]) return false;
  return true;
}

bool ExactMatrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const CycNum& x = (*this)(r, c);
      if (r == c ? !x.is_one() : !x.is_zero()) return false;
    }
  return true;
}

bool ExactMatrix::is_zero() const {
  for (const auto& x : entries_)
    if (!x.is_zero()) return false;
  return true;
}

bool ExactMatrix::is_upper_triangular() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < r && c < cols_; ++c)
      if (!(*this)(r, c).is_zero()) return false;
  return true;
}

bool ExactMatrix::is_lower_triangular() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if (!(*this)(r, c).is_zero()) return false;
  return true;
}

bool ExactMatrix::is_rational() const {
  for (const auto& x : entries_)
    if (!x.is_rational()) return false;
  return true;
}

bool ExactMatrix::is_integral() const {
  for (const auto& x : entries_)
    if (!x.is_rational() || !is_integer(x.to_rational())) return false;
  return true;
}

std::size_t ExactMatrix::hash() const {
  std::size_t h = rows_ * 1000003u ^ cols_;
  for (const auto& x : entries_) h = h * 0x9e3779b97f4a7c15ull ^ x.hash();
  return h;
}

std::string ExactMatrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    out << (r == 0 ? "[" : " [");
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c > 0) out << ", ";
      out << (*this)(r, c).to_string();
    }
    out << "]" << (r + 1 < rows_ ? "\n" : "");
  }
  out << "]";
  return out.str();
}

ExactMatrix paper_kron(const ExactMatrix& a, const ExactMatrix& b) {
  const std::size_t p = a.rows(), q = a.cols();
  ExactMatrix out(p * b.rows(), q * b.cols());
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      const CycNum& bij = b(i, j);
      if (bij.is_zero()) continue;
      for (std::size_t r = 0; r < p; ++r)
        for (std::size_t c = 0; c < q; ++c)
          out(i * p + r, j * q + c) = (a(r, c) * bij).compact();
    }
  return out;
}

Vector paper_kron(const Vector& u, const Vector& w) {
  Vector out(u.size() * w.size(), CycNum(0));
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t p = 0; p < u.size(); ++p)
      out[p + u.size() * i] = (u[p] * w[i]).compact();
  return out;
}

Echelon row_reduce(const ExactMatrix& m) {
  Echelon e;
  e.reduced = m;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) e.reduced(r, c) = m(r, c).compact();
  ExactMatrix& a = e.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(pivot, c), a(row, c));
      ++e.swaps;
    }
    const CycNum inv = a(row, col).inverse();
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) = (a(row, c) * inv).compact();
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      const CycNum factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) {
        if (a(row, c).terms().empty()) continue;
        a(r, c) = (a(r, c) - factor * a(row, c)).compact();
      }
    }
    e.pivots.push_back(col);
    ++row;
  }
  return e;
}

namespace {

// Division-free Gauss-Jordan: row_r <- p * row_r - a_rc * row_p. Only zero
// tests are needed, so no inverse is ever formed.
struct FreeEchelon {
  ExactMatrix a;
  std::vector<std::size_t> pivots;  // pivot column of row i
};

FreeEchelon fraction_free_reduce(const ExactMatrix& m, bool jordan) {
  FreeEchelon e{m, {}};
  ExactMatrix& a = e.a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) = a(r, c).compact();
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(pivot, c), a(row, c));
    for (std::size_t c = 0; c < col; ++c) a(row, c) = CycNum(0);
    const CycNum p = a(row, col);
    for (std::size_t r = jordan ? 0 : row + 1; r < a.rows(); ++r) {
      if (r == row) continue;
      if (a(r, col).is_zero()) {
        a(r, col) = CycNum(0);
        continue;
      }
      const CycNum f = a(r, col);
      // Rows above the pivot carry earlier pivots that must scale as well.
      for (std::size_t c = r < row ? 0 : col; c < a.cols(); ++c) {
        CycNum scaled = a(r, c).terms().empty() ? CycNum(0) : p * a(r, c);
        if (!a(row, c).terms().empty()) scaled -= f * a(row, c);
        a(r, c) = scaled.compact();
      }
      a(r, col) = CycNum(0);
    }
    e.pivots.push_back(col);
    ++row;
  }
  return e;
}

}  // namespace

std::size_t rank(const ExactMatrix& m) {
  const std::size_t full = std::min(m.rows(), m.cols());
  if (full == 0) return 0;
  if (rank_lower_bound(m) == full) return full;
  return fraction_free_reduce(m, false).pivots.size();
}

CycNum det(const ExactMatrix& m) {
  require_square(m, "det");
  const std::size_t n = m.rows();
  if (m.is_upper_triangular() || m.is_lower_triangular()) {
    CycNum result(1);
    for (std::size_t i = 0; i < n; ++i) result = (result * m(i, i)).compact();
    return result.canonical();
  }
  ExactMatrix a = m.canonical();
  CycNum result(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return CycNum(0);
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
      result = -result;
    }
    const CycNum& p = a(col, col);
    result = (result * p).compact();
    const CycNum inv = p.inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      const CycNum factor = (a(r, col) * inv).compact();
      for (std::size_t c = col; c < n; ++c) {
        if (a(col, c).terms().empty()) continue;
        a(r, c) = (a(r, c) - factor * a(col, c)).compact();
      }
    }
  }
  return result.canonical();
}

std::vector<Vector> kernel_basis(const ExactMatrix& m) {
  const FreeEchelon e = fraction_free_reduce(m, true);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  const std::size_t k = e.pivots.size();
  // Row i reads d_i x_{c_i} + sum_free a_ij x_j = 0 with d_i its pivot entry.
  std::vector<CycNum> others(k, CycNum(1));  // prod_{l != i} d_l
  CycNum all(1);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t l = 0; l < k; ++l)
      if (l != i) others[i] = (others[i] * e.a(l, e.pivots[l])).compact();
    all = (all * e.a(i, e.pivots[i])).compact();
  }
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(m.cols());
    v[free] = all.canonical();
    for (std::size_t i = 0; i < k; ++i)
      v[e.pivots[i]] = (-(e.a(i, free) * others[i])).canonical();
    basis.push_back(std::move(v));
  }
  return basis;
}

ExactMatrix inverse(const ExactMatrix& m) {
  require_square(m, "inverse");
  const std::size_t n = m.rows();
  ExactMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = CycNum(1);
  }
  const Echelon e = row_reduce(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) {
    throw SingularMatrix("matrix is singular");
  }
  ExactMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = e.reduced(r, n + c);
  return out;
}

Vector solve(const ExactMatrix& a, const Vector& b) {
  require_square(a, "solve");
  require_length(a.rows(), b.size(), "solve");
  const std::size_t n = a.rows();
  ExactMatrix aug(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  const Echelon e = row_reduce(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) {
    throw SingularMatrix("system matrix is singular");
  }
  Vector x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = e.reduced(r, n);
  return x;
}

std::size_t rank_of(const std::vector<Vector>& vectors) {
  if (vectors.empty()) return 0;
  return rank(ExactMatrix::from_columns(vectors));
}

bool in_span(const std::vector<Vector>& basis, const Vector& v) {
  std::vector<Vector> extended = basis;
  extended.push_back(v);
  return rank_of(extended) == rank_of(basis);
}

Vector zero_vector(std::size_t n) { return Vector(n, CycNum(0)); }

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

bool equal(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

Vector involution(const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].involution();
  return out;
}

Vector add(const Vector& a, const Vector& b) {
  require_length(a.size(), b.size(), "vector sum");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = (a[i] + b[i]).compact();
  return out;
}

Vector sub(const Vector& a, const Vector& b) {
  require_length(a.size(), b.size(), "vector difference");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = (a[i] - b[i]).compact();
  return out;
}

Vector scale(const CycNum& s, const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = (s * v[i]).compact();
  return out;
}

CycNum dot(const Vector& a, const Vector& b) {
  require_length(a.size(), b.size(), "dot");
  CycNum acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc.compact();
}

IndexWord::IndexWord(std::vector<int> bits) : bits_(std::move(bits)) {
  for (int b : bits_)
    if (b != 0 && b != 1) throw PreconditionError("index word entries must be 0 or 1");
}

IndexWord IndexWord::from_rank(std::size_t n, std::size_t rank) {
  std::vector<int> bits(n);
  for (std::size_t k = 0; k < n; ++k) bits[k] = static_cast<int>((rank >> k) & 1u);
  return IndexWord(std::move(bits));
}

std::vector<IndexWord> IndexWord::all(std::size_t n) {
  std::vector<IndexWord> out;
  out.reserve(std::size_t{1} << n);
  for (std::size_t r = 0; r < (std::size_t{1} << n); ++r) out.push_back(from_rank(n, r));
  return out;
}

std::size_t IndexWord::rank() const {
  std::size_t r = 0;
  for (std::size_t k = 0; k < bits_.size(); ++k)
    if (bits_[k]) r |= std::size_t{1} << k;
  return r;
}

int IndexWord::weight() const {
  int w = 0;
  for (int b : bits_) w += b;
  return w;
}

IndexWord IndexWord::operator*(const IndexWord& other) const {
  if (size() != other.size()) throw DimensionMismatch("index words of different length");
  std::vector<int> bits(size());
  for (std::size_t k = 0; k < size(); ++k) bits[k] = bits_[k] * other.bits_[k];
  return IndexWord(std::move(bits));
}

std::string IndexWord::to_string() const {
  std::string s;
  for (int b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

Vector basis_vector(const IndexWord& word) {
  Vector v = zero_vector(std::size_t{1} << word.size());
  v[word.rank()] = CycNum(1);
  return v;
}

}  // namespace fcmono
