#include <random>

#include "doctest.h"
#include "fcmono/errors.hpp"
#include "fcmono/matrix.hpp"
#include "fcmono/modular.hpp"

#include <numeric>

using namespace fcmono;

namespace {

ExactMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> exp(0, 5);
  ExactMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m(i, j) = CycNum(coeff(rng)) * cyclotomic(6, exp(rng)) + CycNum(coeff(rng));
  return m;
}

Vector random_vector(std::mt19937& rng, std::size_t n) {
  return random_matrix(rng, n, 1).column(0);
}

}  // namespace

TEST_CASE("block layout of the tensor product") {
  const ExactMatrix a{{1, 2}, {3, 4}};
  const ExactMatrix b{{0, 5}, {6, 7}};
  const ExactMatrix k = paper_kron(a, b);
  // Block (0,1) is A * 5; block (1,0) is A * 6.
  CHECK(k(0, 2) == CycNum(5));
  CHECK(k(1, 3) == CycNum(20));
  CHECK(k(2, 0) == CycNum(6));
  CHECK(k(0, 0) == CycNum(0));
  CHECK(k(3, 3) == CycNum(28));
}

TEST_CASE("tensor product acts factorwise") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    const ExactMatrix a = random_matrix(rng, 2, 2);
    const ExactMatrix b = random_matrix(rng, 2, 2);
    const Vector u = random_vector(rng, 2);
    const Vector w = random_vector(rng, 2);
    CHECK(equal(paper_kron(a, b) * paper_kron(u, w), paper_kron(a * u, b * w)));
    const ExactMatrix c = random_matrix(rng, 2, 2);
    CHECK(paper_kron(paper_kron(a, b), c) == paper_kron(a, paper_kron(b, c)));
    const ExactMatrix a2 = random_matrix(rng, 2, 2);
    const ExactMatrix b2 = random_matrix(rng, 2, 2);
    CHECK(paper_kron(a, b) * paper_kron(a2, b2) == paper_kron(a * a2, b * b2));
  }
}

TEST_CASE("inverse, determinant and solve") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    const ExactMatrix m = random_matrix(rng, 4, 4);
    const CycNum d = det(m);
    if (d.is_zero()) {
      CHECK_THROWS_AS(inverse(m), SingularMatrix);
      continue;
    }
    const ExactMatrix inv = inverse(m);
    CHECK((m * inv).is_identity());
    CHECK((inv * m).is_identity());
    CHECK((det(inv) * d).is_one());
    const Vector b = random_vector(rng, 4);
    CHECK(equal(m * solve(m, b), b));
    const ExactMatrix n = random_matrix(rng, 4, 4);
    CHECK(det(m * n) == d * det(n));
  }
  const ExactMatrix singular{{1, 2}, {2, 4}};
  CHECK(det(singular).is_zero());
  CHECK_THROWS_AS(inverse(singular), SingularMatrix);
  CHECK(rank(singular) == 1);
  CHECK(det(ExactMatrix{{0, 1}, {1, 0}}) == CycNum(-1));
}

TEST_CASE("kernel and span") {
  const ExactMatrix m{{1, 2, 3}, {2, 4, 6}};
  const auto ker = kernel_basis(m);
  REQUIRE(ker.size() == 2);
  for (const auto& v : ker) CHECK(is_zero(m * v));
  CHECK(in_span(ker, add(ker[0], scale(CycNum(3), ker[1]))));
  CHECK_FALSE(in_span(ker, Vector{1, 0, 0}));
  CHECK(rank_of(ker) == 2);
}

TEST_CASE("shape errors") {
  const ExactMatrix a(2, 3);
  CHECK_THROWS_AS(a * a, DimensionMismatch);
  CHECK_THROWS_AS(a + ExactMatrix(3, 2), DimensionMismatch);
  CHECK_THROWS_AS(inverse(a), DimensionMismatch);
}

TEST_CASE("index words") {
  const IndexWord w = IndexWord::from_rank(3, 5);
  CHECK(w.bits() == std::vector<int>{1, 0, 1});
  CHECK(w.rank() == 5);
  CHECK(w.weight() == 2);
  CHECK((w * IndexWord::from_rank(3, 6)).rank() == 4);
  CHECK(IndexWord::all(3).size() == 8);
  const Vector e = basis_vector(w);
  const Vector e0{1, 0};
  const Vector e1{0, 1};
  CHECK(equal(e, paper_kron(paper_kron(e1, e0), e1)));
}

TEST_CASE("involution and transpose") {
  ExactMatrix m(2, 2);
  m(0, 1) = cyclotomic(5, 1);
  CHECK(m.involution()(0, 1) == cyclotomic(5, 4));
  CHECK(m.transpose()(1, 0) == cyclotomic(5, 1));
  CHECK(m.transpose().transpose() == m);
}

TEST_CASE("rank and kernel of low-rank products match Gauss-Jordan") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const std::size_t r = trial % n;
    const ExactMatrix m = r == 0 ? ExactMatrix(n, n)
                                 : random_matrix(rng, n, r) * random_matrix(rng, r, n);
    const std::size_t exact = row_reduce(m).pivots.size();
    CHECK(rank(m) == exact);
    CHECK(rank_lower_bound(m) <= exact);
    const auto ker = kernel_basis(m);
    CHECK(ker.size() == n - exact);
    for (const auto& v : ker) CHECK(is_zero(m * v));
    if (!ker.empty()) CHECK(rank_of(ker) == ker.size());
  }
}

TEST_CASE("modular determinant is the reduction of the exact one") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const ExactMatrix m = random_matrix(rng, 3, 3);
    const CycNum d = det(m);
    const auto& emb = PrimeEmbedding::get(std::lcm(matrix_level(m), d.conductor()), 0);
    const auto md = modular_det(m, emb);
    REQUIRE(md.has_value());
    CHECK(*md == *emb.reduce(d));
  }
}

TEST_CASE("determinant of triangular matrices is the diagonal product") {
  ExactMatrix m{{2, 5, 7}, {0, 3, 1}, {0, 0, -1}};
  m(0, 1) = cyclotomic(7, 2);
  CHECK(det(m) == CycNum(-6));
  CHECK(det(m.transpose()) == CycNum(-6));
}
