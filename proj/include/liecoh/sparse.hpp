#pragma once

// Sparse exact matrices and an incremental fraction-free row eliminator for
// the large, very sparse systems produced by exterior-algebra operators.

#include "liecoh/matrix.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace liecoh {

using SparseRow = std::vector<std::pair<std::uint32_t, Rational>>;

/// Row-major sparse matrix; each row sorted by column, no explicit zeros.
class SparseMatrix {
public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const SparseRow& row(std::size_t i) const { return rows_[i]; }

  /// Accumulates duplicate columns; drops zeros.
  void set_row(std::size_t i, std::map<std::uint32_t, Rational> entries) {
    SparseRow r;
    for (auto& [c, v] : entries)
      if (!v.is_zero()) r.emplace_back(c, std::move(v));
    rows_[i] = std::move(r);
  }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (auto& r : rows_) n += r.size();
    return n;
  }

  Vector apply(std::span<const Rational> v) const {
    if (v.size() != cols_) throw DimensionMismatch("SparseMatrix::apply: length mismatch");
    Vector out(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      Rational s;
      for (auto& [c, a] : rows_[i])
        if (!v[c].is_zero()) s += a * v[c];
      out[i] = std::move(s);
    }
    return out;
  }

  Matrix to_dense() const {
    Matrix m(rows_.size(), cols_);
    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (auto& [c, a] : rows_[i]) m(i, c) = a;
    return m;
  }

  static SparseMatrix from_dense(const Matrix& m) {
    SparseMatrix s(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (!m(i, j).is_zero()) s.rows_[i].emplace_back(static_cast<std::uint32_t>(j), m(i, j));
    return s;
  }

private:
  std::size_t cols_ = 0;
  std::vector<SparseRow> rows_;
};

/// Incremental row echelon form over the integers. Each stored row is
/// primitive (content 1) with a positive leading entry; rows are combined
/// fraction-free (a*r - b*p, then divided by the content).
class SparseEliminator {
public:
  using IntRow = std::vector<std::pair<std::uint32_t, mpz_class>>;

  explicit SparseEliminator(std::size_t cols) : cols_(cols), pivot_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rank_; }
  bool full_rank() const { return rank_ == cols_; }

  /// Returns true if the row was independent of the rows seen so far.
  bool add_row(const SparseRow& row) {
    if (full_rank() || row.empty()) return false;
    IntRow r;
    r.reserve(row.size());
    mpz_class l = 1;
    for (auto& [c, v] : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.value().get_den_mpz_t());
    for (auto& [c, v] : row) r.emplace_back(c, v.num() * (l / v.den()));
    return reduce_and_insert(std::move(r));
  }

  void add_rows(const SparseMatrix& m) {
    for (std::size_t i = 0; i < m.rows() && !full_rank(); ++i) add_row(m.row(i));
  }

  /// Canonical null-space basis (free columns ascending).
  Subspace kernel() const {
    std::vector<std::vector<std::pair<std::size_t, Rational>>> rows;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (pivot_[c].empty()) continue;
      pivots.push_back(c);
      auto& out = rows.emplace_back();
      for (auto& [j, v] : pivot_[c]) out.emplace_back(j, Rational(v));
    }
    Subspace s;
    s.ambient = cols_;
    s.basis = detail::kernel_from_echelon(rows, pivots, cols_, &s.coord_cols);
    return s;
  }

private:
  static void make_primitive(IntRow& r) {
    mpz_class g = 0;
    for (auto& [c, v] : r) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      if (g == 1) break;
    }
    if (r.front().second < 0) g = -g;
    if (g != 1)
      for (auto& [c, v] : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }

  bool reduce_and_insert(IntRow r) {
    IntRow tmp;
    mpz_class g, fa, fb;
    while (!r.empty()) {
      std::uint32_t lead = r.front().first;
      const IntRow& p = pivot_[lead];
      if (p.empty()) {
        make_primitive(r);
        pivot_[lead] = std::move(r);
        ++rank_;
        return true;
      }
      // r <- fa*r - fb*p with fa = p_lead/g, fb = r_lead/g
      mpz_gcd(g.get_mpz_t(), p.front().second.get_mpz_t(), r.front().second.get_mpz_t());
      mpz_divexact(fa.get_mpz_t(), p.front().second.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(fb.get_mpz_t(), r.front().second.get_mpz_t(), g.get_mpz_t());
      tmp.clear();
      tmp.reserve(r.size() + p.size());
      std::size_t i = 1, j = 1;
      while (i < r.size() || j < p.size()) {
        if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
          tmp.emplace_back(r[i].first, fa * r[i].second);
          ++i;
        } else if (i == r.size() || p[j].first < r[i].first) {
          tmp.emplace_back(p[j].first, -fb * p[j].second);
          ++j;
        } else {
          mpz_class v = fa * r[i].second - fb * p[j].second;
          if (v != 0) tmp.emplace_back(r[i].first, std::move(v));
          ++i;
          ++j;
        }
      }
      std::swap(r, tmp);
      if (!r.empty()) make_primitive(r);
    }
    return false;
  }

  std::size_t cols_;
  std::size_t rank_ = 0;
  std::vector<IntRow> pivot_;
};

/// Null space of a sparse matrix.
inline Subspace sparse_kernel(const SparseMatrix& m) {
  SparseEliminator e(m.cols());
  e.add_rows(m);
  return e.kernel();
}

}  // namespace liecoh
