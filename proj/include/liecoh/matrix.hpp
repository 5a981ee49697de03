#pragma once

// Dense exact matrices, Bareiss elimination and subspace bookkeeping.

#include "liecoh/rational.hpp"

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace liecoh {

using Vector = std::vector<Rational>;

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline Vector zero_vector(std::size_t n) { return Vector(n); }

inline Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

inline bool is_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

inline Vector& axpy(Vector& y, const Rational& a, std::span<const Rational> x) {
  if (y.size() != x.size()) throw DimensionMismatch("axpy: length mismatch");
  if (a.is_zero()) return y;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) y[i] += a * x[i];
  return y;
}

inline Vector scaled(std::span<const Rational> x, const Rational& a) {
  Vector y(x.begin(), x.end());
  for (auto& v : y) v *= a;
  return y;
}

inline Vector operator+(Vector a, const Vector& b) { return axpy(a, 1, b); }
inline Vector operator-(Vector a, const Vector& b) { return axpy(a, -1, b); }

inline Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: length mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) throw DimensionMismatch("Matrix: entries length != rows*cols");
  }
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (auto& r : rows) {
      if (r.size() != cols_) throw DimensionMismatch("Matrix: ragged initializer");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& cols) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw DimensionMismatch("from_columns: column length");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }
  static Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DimensionMismatch("from_rows: row length");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const std::vector<Rational>& entries() const { return data_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Rational> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  Vector column(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  bool is_zero() const { return liecoh::is_zero(data_); }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Vector apply(std::span<const Rational> v) const {
    if (v.size() != cols_) throw DimensionMismatch("Matrix::apply: length mismatch");
    Vector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = dot(row(i), v);
    return out;
  }

  Rational trace() const {
    Rational t;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(const Rational& a) {
    for (auto& x : data_) x *= a;
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
  friend Matrix operator-(Matrix a) { return a *= Rational(-1); }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("Matrix product: inner dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
      os << "]";
    }
    os << "]";
    return os.str();
  }

private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("Matrix: shape mismatch");
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

/// Stack matrices with equal column counts on top of each other.
inline Matrix vstack(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) return {};
  std::size_t cols = blocks.front().cols(), rows = 0;
  for (auto& b : blocks) {
    if (b.cols() != cols) throw DimensionMismatch("vstack: column mismatch");
    rows += b.rows();
  }
  std::vector<Rational> e;
  e.reserve(rows * cols);
  for (auto& b : blocks) e.insert(e.end(), b.entries().begin(), b.entries().end());
  return Matrix(rows, cols, std::move(e));
}

/// A subspace with a basis in echelon-coordinatized form:
/// basis[a][coord_cols[b]] == (a == b). Coordinates are read off directly.
struct Subspace {
  std::size_t ambient = 0;
  std::vector<Vector> basis;
  std::vector<std::size_t> coord_cols;

  std::size_t dim() const { return basis.size(); }

  Vector combine(std::span<const Rational> coords) const {
    Vector v(ambient);
    for (std::size_t a = 0; a < basis.size(); ++a) axpy(v, coords[a], basis[a]);
    return v;
  }

  std::optional<Vector> coordinates(std::span<const Rational> v) const {
    if (v.size() != ambient) throw DimensionMismatch("Subspace::coordinates: length mismatch");
    Vector c(coord_cols.size());
    for (std::size_t a = 0; a < coord_cols.size(); ++a) c[a] = v[coord_cols[a]];
    if (combine(c) != Vector(v.begin(), v.end())) return std::nullopt;
    return c;
  }

  bool contains(std::span<const Rational> v) const { return coordinates(v).has_value(); }

  Matrix basis_matrix() const { return Matrix::from_columns(ambient, basis); }
};

namespace detail {

/// Integer rows obtained by clearing denominators row by row.
inline std::vector<std::vector<mpz_class>> integer_rows(const Matrix& m) {
  std::vector<std::vector<mpz_class>> a(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).value().get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j).num() * (l / m(i, j).den());
  }
  return a;
}

struct Echelon {
  std::vector<std::vector<mpz_class>> rows;  // the first rank rows are the pivot rows
  std::vector<std::size_t> pivots;
};

/// Fraction-free (Bareiss) row echelon form. Pivot: first nonzero entry in
/// the lowest-index remaining row.
inline Echelon bareiss(const Matrix& m) {
  Echelon e;
  e.rows = integer_rows(m);
  auto& a = e.rows;
  const std::size_t nr = m.rows(), nc = m.cols();
  std::size_t r = 0;
  mpz_class prev = 1, t;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t p = r;
    while (p < nr && a[p][c] == 0) ++p;
    if (p == nr) continue;
    std::swap(a[p], a[r]);
    const mpz_class& piv = a[r][c];
    for (std::size_t i = r + 1; i < nr; ++i) {
      for (std::size_t j = c + 1; j < nc; ++j) {
        t = piv * a[i][j];
        t -= a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    e.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  return e;
}

/// Canonical kernel vectors from an echelon form: one per free column, in
/// increasing order, with that free variable 1 and the other free variables 0.
inline std::vector<Vector> kernel_from_echelon(const std::vector<std::vector<std::pair<std::size_t, Rational>>>& rows,
                                               const std::vector<std::size_t>& pivots, std::size_t ncols,
                                               std::vector<std::size_t>* free_out = nullptr) {
  std::vector<char> is_pivot(ncols, 0);
  for (auto p : pivots) is_pivot[p] = 1;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < ncols; ++c)
    if (!is_pivot[c]) free.push_back(c);
  if (free_out) *free_out = free;

  // Express every pivot variable as a combination of the free variables.
  const std::size_t nf = free.size();
  std::vector<std::size_t> free_index(ncols, nf);
  for (std::size_t a = 0; a < nf; ++a) free_index[free[a]] = a;
  std::vector<Vector> dep(ncols);
  for (std::size_t i = rows.size(); i-- > 0;) {
    const auto& row = rows[i];
    std::size_t p = pivots[i];
    Vector acc(nf);
    Rational lead;
    for (auto& [c, v] : row) {
      if (c == p) { lead = v; continue; }
      if (c < p) throw std::logic_error("kernel_from_echelon: row not in echelon form");
      if (!is_pivot[c]) {
        acc[free_index[c]] += v;
      } else {
        axpy(acc, v, dep[c]);
      }
    }
    Rational s = Rational(-1) / lead;
    for (auto& x : acc) x *= s;
    dep[p] = std::move(acc);
  }
  std::vector<Vector> basis(nf, Vector(ncols));
  for (std::size_t a = 0; a < nf; ++a) basis[a][free[a]] = 1;
  for (std::size_t c = 0; c < ncols; ++c)
    if (is_pivot[c])
      for (std::size_t a = 0; a < nf; ++a) basis[a][c] = dep[c][a];
  return basis;
}

inline std::vector<std::vector<std::pair<std::size_t, Rational>>> sparse_rows(const Echelon& e) {
  std::vector<std::vector<std::pair<std::size_t, Rational>>> out(e.rows.size());
  for (std::size_t i = 0; i < e.rows.size(); ++i)
    for (std::size_t j = 0; j < e.rows[i].size(); ++j)
      if (e.rows[i][j] != 0) out[i].emplace_back(j, Rational(e.rows[i][j]));
  return out;
}

}  // namespace detail

/// Rank over the rationals by Bareiss elimination.
inline std::size_t rank(const Matrix& m) { return detail::bareiss(m).pivots.size(); }

/// Canonical basis of the right null space (see kernel_subspace).
inline std::vector<Vector> kernel_basis(const Matrix& m) {
  auto e = detail::bareiss(m);
  return detail::kernel_from_echelon(detail::sparse_rows(e), e.pivots, m.cols());
}

/// Null space as a Subspace whose coordinates are the free columns.
inline Subspace kernel_subspace(const Matrix& m) {
  auto e = detail::bareiss(m);
  Subspace s;
  s.ambient = m.cols();
  s.basis = detail::kernel_from_echelon(detail::sparse_rows(e), e.pivots, m.cols(), &s.coord_cols);
  return s;
}

/// Reduced row echelon form over the rationals (zero rows dropped).
inline Subspace row_space(const Matrix& m) {
  auto e = detail::bareiss(m);
  const std::size_t r = e.pivots.size(), n = m.cols();
  std::vector<Vector> rows(r, Vector(n));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = Rational(e.rows[i][j]);
  for (std::size_t i = r; i-- > 0;) {
    Rational inv = Rational(1) / rows[i][e.pivots[i]];
    for (auto& x : rows[i]) x *= inv;
    for (std::size_t k = 0; k < i; ++k) {
      Rational f = rows[k][e.pivots[i]];
      if (!f.is_zero()) axpy(rows[k], -f, rows[i]);
    }
  }
  Subspace s;
  s.ambient = n;
  s.basis = std::move(rows);
  s.coord_cols = e.pivots;
  return s;
}

/// Canonical basis of the span of the given vectors.
inline Subspace span_of(std::size_t ambient, const std::vector<Vector>& vectors) {
  if (vectors.empty()) return Subspace{ambient, {}, {}};
  return row_space(Matrix::from_rows(ambient, vectors));
}

inline Subspace full_space(std::size_t n) {
  Subspace s;
  s.ambient = n;
  for (std::size_t i = 0; i < n; ++i) {
    s.basis.push_back(unit_vector(n, i));
    s.coord_cols.push_back(i);
  }
  return s;
}

/// Exact inverse; throws std::domain_error when singular.
inline Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse: matrix not square");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto rs = row_space(aug);
  if (rs.dim() != n || rs.coord_cols.back() != n - 1) throw std::domain_error("inverse: singular matrix");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = rs.basis[i][n + j];
  return inv;
}

/// Coordinates of vectors in a fixed, linearly independent family.
class CoordinateSolver {
public:
  CoordinateSolver() = default;
  CoordinateSolver(std::size_t ambient, const std::vector<Vector>& family) : ambient_(ambient), family_(family) {
    Matrix b = Matrix::from_columns(ambient, family);
    // Rows of b that carry the rank: the pivots of the transpose.
    auto e = detail::bareiss(b.transpose());
    if (e.pivots.size() != family.size()) throw std::domain_error("CoordinateSolver: family is dependent");
    rows_ = e.pivots;
    Matrix sq(family.size(), family.size());
    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (std::size_t j = 0; j < family.size(); ++j) sq(i, j) = b(rows_[i], j);
    inv_ = inverse(sq);
  }

  std::size_t dim() const { return family_.size(); }

  /// nullopt if v is outside the span.
  std::optional<Vector> solve(std::span<const Rational> v) const {
    Vector sel(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) sel[i] = v[rows_[i]];
    Vector c = inv_.apply(sel);
    Vector back(ambient_);
    for (std::size_t a = 0; a < family_.size(); ++a) axpy(back, c[a], family_[a]);
    if (back != Vector(v.begin(), v.end())) return std::nullopt;
    return c;
  }

private:
  std::size_t ambient_ = 0;
  std::vector<Vector> family_;
  std::vector<std::size_t> rows_;
  Matrix inv_;
};

/// Polynomial with rational coefficients, lowest degree first.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Polynomial monomial(std::size_t deg, Rational a = 1) {
    std::vector<Rational> c(deg + 1);
    c[deg] = std::move(a);
    return Polynomial(std::move(c));
  }

  const std::vector<Rational>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& leading() const { return c_.back(); }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(); }

  Rational operator()(const Rational& x) const {
    Rational acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Matrix operator()(const Matrix& t) const {
    if (!t.is_square()) throw DimensionMismatch("Polynomial: evaluating at non-square matrix");
    Matrix acc(t.rows(), t.cols());
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + Matrix::identity(t.rows()) * c_[i];
    return acc;
  }

  Polynomial derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rational(static_cast<long>(i)));
    return Polynomial(std::move(d));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a) {
    std::vector<Rational> c(a.c_);
    for (auto& x : c) x = -x;
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Euclidean division: returns (quotient, remainder).
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
    if (d.is_zero()) throw std::domain_error("Polynomial: division by zero polynomial");
    std::vector<Rational> r(c_), q;
    if (degree() >= d.degree()) q.resize(c_.size() - d.c_.size() + 1);
    for (int k = degree() - d.degree(); k >= 0; --k) {
      Rational f = r[k + d.degree()] / d.leading();
      q[k] = f;
      for (int j = 0; j <= d.degree(); ++j) r[k + j] -= f * d.c_[j];
    }
    return {Polynomial(std::move(q)), Polynomial(std::move(r))};
  }

  Polynomial monic() const {
    if (is_zero()) return {};
    std::vector<Rational> c(c_);
    Rational l = leading();
    for (auto& x : c) x /= l;
    return Polynomial(std::move(c));
  }

  friend Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
      auto r = a.divmod(b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  /// Negative discriminant of a quadratic.
  bool has_negative_discriminant() const {
    if (degree() != 2) return false;
    return (c_[1] * c_[1] - Rational(4) * c_[2] * c_[0]).sign() < 0;
  }

  /// Number of distinct real roots (Sturm sequence).
  std::size_t count_real_roots() const {
    if (degree() <= 0) return 0;
    std::vector<Polynomial> seq{*this, derivative()};
    while (!seq.back().is_zero()) {
      auto r = seq[seq.size() - 2].divmod(seq.back()).second;
      seq.push_back(-r);
    }
    seq.pop_back();
    auto changes = [&](bool at_plus_inf) {
      int last = 0, n = 0;
      for (auto& p : seq) {
        int s = p.leading().sign();
        if (!at_plus_inf && p.degree() % 2 == 1) s = -s;
        if (s != 0 && last != 0 && s != last) ++n;
        if (s != 0) last = s;
      }
      return n;
    };
    return static_cast<std::size_t>(changes(false) - changes(true));
  }

  /// Distinct rational roots, ascending.
  std::vector<Rational> rational_roots() const;

  std::string str(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
      const Rational& a = c_[i];
      if (a.is_zero()) continue;
      Rational mag = a.sign() < 0 ? -a : a;
      if (s.empty()) s += a.sign() < 0 ? "-" : "";
      else s += a.sign() < 0 ? " - " : " + ";
      bool unit = mag == Rational(1);
      if (i == 0 || !unit) s += mag.str();
      if (i >= 1) s += var;
      if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
  }

private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

namespace detail {

inline std::vector<mpz_class> divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace detail

inline std::vector<Rational> Polynomial::rational_roots() const {
  std::vector<Rational> roots;
  if (degree() <= 0) return roots;
  // Clear denominators and strip the factor x^k.
  mpz_class l = 1;
  for (auto& a : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.value().get_den_mpz_t());
  std::vector<mpz_class> z;
  for (auto& a : c_) z.push_back(a.num() * (l / a.den()));
  std::size_t k = 0;
  while (z[k] == 0) ++k;
  if (k > 0) roots.emplace_back(0);
  if (z.size() - k == 1) return roots;
  for (auto& p : detail::divisors(z[k]))
    for (auto& q : detail::divisors(z.back()))
      for (int s : {1, -1}) {
        Rational cand(mpz_class(s * p), q);
        if ((*this)(cand).is_zero() && std::find(roots.begin(), roots.end(), cand) == roots.end())
          roots.push_back(cand);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// Monic minimal polynomial via the first linear dependency among I, T, T^2, ...
inline Polynomial minimal_polynomial(const Matrix& t) {
  if (!t.is_square()) throw DimensionMismatch("minimal_polynomial: matrix not square");
  const std::size_t n = t.rows();
  if (n == 0) return Polynomial({Rational(1)});
  std::vector<Vector> powers;
  Matrix p = Matrix::identity(n);
  for (std::size_t k = 0; k <= n; ++k) {
    powers.push_back(p.entries());
    auto ker = kernel_basis(Matrix::from_columns(n * n, powers));
    if (!ker.empty()) return Polynomial(ker.front());
    p = p * t;
  }
  throw std::logic_error("minimal_polynomial: no dependency found (Cayley-Hamilton violated)");
}

}  // namespace liecoh
