#include "liecoh/sparse.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace liecoh;

namespace {

SparseMatrix random_sparse(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> val(-5, 5), den(1, 4), pick(0, 3);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (pick(rng) == 0) m(i, j) = Rational(val(rng), den(rng));
  return SparseMatrix::from_dense(m);
}

}  // namespace

TEST(SparseEliminator, AgreesWithDenseKernel) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t r = 1 + trial % 8, c = 1 + (trial * 7) % 11;
    SparseMatrix s = random_sparse(rng, r, c);
    Matrix d = s.to_dense();
    Subspace sk = sparse_kernel(s);
    auto dk = kernel_basis(d);
    ASSERT_EQ(sk.basis, dk) << d.str();
    SparseEliminator e(c);
    e.add_rows(s);
    EXPECT_EQ(e.rank(), rank(d));
  }
}

TEST(SparseEliminator, ReportsIndependence) {
  SparseEliminator e(3);
  EXPECT_TRUE(e.add_row({{0, Rational(2)}, {1, Rational(4)}}));
  EXPECT_FALSE(e.add_row({{0, Rational(1, 3)}, {1, Rational(2, 3)}}));
  EXPECT_TRUE(e.add_row({{2, Rational(1)}}));
  EXPECT_EQ(e.rank(), 2u);
  auto k = e.kernel();
  ASSERT_EQ(k.dim(), 1u);
  EXPECT_EQ(k.basis[0], (Vector{-2, 1, 0}));
}

TEST(SparseMatrix, ApplyMatchesDense) {
  std::mt19937 rng(8);
  SparseMatrix s = random_sparse(rng, 6, 5);
  Vector v{1, Rational(-1, 2), 3, 0, 2};
  EXPECT_EQ(s.apply(v), s.to_dense().apply(v));
}
