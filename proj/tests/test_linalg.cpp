#include "liecoh/matrix.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace liecoh;

namespace {

// Plain Gauss-Jordan over Q; independent of the fraction-free code.
std::size_t naive_rank(Matrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(p, j));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Rational f = m(i, c) / m(r, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int sparsity) {
  std::uniform_int_distribution<int> val(-4, 4), den(1, 3), keep(0, sparsity);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (keep(rng) == 0) m(i, j) = Rational(val(rng), den(rng));
  return m;
}

}  // namespace

TEST(Rational, ReducedForm) {
  Rational a(6, -4);
  EXPECT_EQ(a.str(), "-3/2");
  EXPECT_EQ(a.den(), 2);
  EXPECT_EQ(Rational(0, 5).str(), "0");
  EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
  EXPECT_EQ(Rational::parse("-7"), Rational(-7));
  EXPECT_THROW(Rational::parse("1.5"), ParseError);
  EXPECT_THROW(Rational::parse("1/0"), ParseError);
  EXPECT_THROW(Rational::parse("1/-2"), ParseError);
  EXPECT_TRUE(Rational(9, 4).is_square());
  EXPECT_EQ(Rational(9, 4).sqrt(), Rational(3, 2));
  EXPECT_FALSE(Rational(2).is_square());
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(Matrix::identity(3)), 3u);
  EXPECT_EQ(rank(Matrix(2, 2)), 0u);
  EXPECT_EQ(rank(Matrix{{1, 2}, {2, 4}}), 1u);
}

TEST(Kernel, Examples) {
  EXPECT_TRUE(kernel_basis(Matrix::identity(2)).empty());
  auto k = kernel_basis(Matrix{{1, 1}});
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0], (Vector{-1, 1}));
  k = kernel_basis(Matrix{{1, 2}, {2, 4}});
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0], (Vector{-2, 1}));
}

TEST(Kernel, CanonicalFreeColumns) {
  // x0 + x2 = 0, x1 - x3 = 0: free columns 2 and 3
  auto k = kernel_basis(Matrix{{1, 0, 1, 0}, {0, 1, 0, -1}});
  ASSERT_EQ(k.size(), 2u);
  EXPECT_EQ(k[0], (Vector{-1, 0, 1, 0}));
  EXPECT_EQ(k[1], (Vector{0, 1, 0, 1}));
}

TEST(MinimalPolynomial, Examples) {
  EXPECT_EQ(minimal_polynomial(Matrix::identity(4)), Polynomial({-1, 1}));
  EXPECT_EQ(minimal_polynomial(Matrix{{0, -1}, {1, 0}}), Polynomial({1, 0, 1}));
  EXPECT_EQ(minimal_polynomial(Matrix{{0, 1}, {0, 0}}), Polynomial({0, 0, 1}));
}

TEST(Polynomial, RootsAndSturm) {
  Polynomial p({-2, 0, 1});  // x^2 - 2
  EXPECT_EQ(p.count_real_roots(), 2u);
  EXPECT_TRUE(p.rational_roots().empty());
  Polynomial q({1, 0, 1});
  EXPECT_EQ(q.count_real_roots(), 0u);
  EXPECT_TRUE(q.has_negative_discriminant());
  Polynomial r({-6, 11, -6, 1});  // (x-1)(x-2)(x-3)
  EXPECT_EQ(r.count_real_roots(), 3u);
  EXPECT_EQ(r.rational_roots(), (std::vector<Rational>{1, 2, 3}));
  auto [quo, rem] = r.divmod(Polynomial({-1, 1}));
  EXPECT_TRUE(rem.is_zero());
  EXPECT_EQ(quo, Polynomial({6, -5, 1}));
}

TEST(Inverse, RoundTrip) {
  Matrix m{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  EXPECT_EQ(m * inverse(m), Matrix::identity(3));
  EXPECT_THROW(inverse(Matrix{{1, 2}, {2, 4}}), std::domain_error);
}

TEST(Subspace, CoordinatesFromEchelonColumns) {
  Subspace s = span_of(3, {{1, 1, 0}, {0, 1, 1}});
  ASSERT_EQ(s.dim(), 2u);
  auto c = s.coordinates(Vector{2, 5, 3});
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(s.combine(*c), (Vector{2, 5, 3}));
  EXPECT_FALSE(s.contains(Vector{1, 0, 0}));
}

TEST(LinalgProperty, RankTransposeAndNullity) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 120; ++trial) {
    std::size_t r = 1 + trial % 7, c = 1 + (trial * 5) % 9;
    Matrix m = random_matrix(rng, r, c, trial % 3);
    std::size_t rk = rank(m);
    EXPECT_EQ(rk, naive_rank(m));
    EXPECT_EQ(rk, rank(m.transpose()));
    auto k = kernel_basis(m);
    EXPECT_EQ(c, rk + k.size());
    for (auto& v : k) EXPECT_TRUE(is_zero(m.apply(v)));
  }
}

TEST(LinalgProperty, MinimalPolynomialAnnihilates) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + trial % 5;
    Matrix t = random_matrix(rng, n, n, trial % 2);
    if (trial % 4 == 0) t = t * t;  // force repeated structure
    Polynomial p = minimal_polynomial(t);
    EXPECT_EQ(p.leading(), Rational(1));
    EXPECT_TRUE(p(t).is_zero());
    EXPECT_LE(p.degree(), static_cast<int>(n));
  }
}
