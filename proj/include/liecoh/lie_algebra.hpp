#pragma once

// Finite-dimensional real Lie algebras given by exact structure constants.

#include "liecoh/matrix.hpp"
#include "liecoh/sparse.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace liecoh {

struct JacobiViolation : std::invalid_argument {
  JacobiViolation(std::size_t i_, std::size_t j_, std::size_t k_)
      : std::invalid_argument("Jacobi identity fails on basis triple (" + std::to_string(i_) + "," +
                              std::to_string(j_) + "," + std::to_string(k_) + ")"),
        i(i_), j(j_), k(k_) {}
  std::size_t i, j, k;
};

struct AntisymmetryViolation : std::invalid_argument {
  AntisymmetryViolation(std::size_t i_, std::size_t j_)
      : std::invalid_argument("structure constants not antisymmetric in (" + std::to_string(i_) + "," +
                              std::to_string(j_) + ")"),
        i(i_), j(j_) {}
  std::size_t i, j;
};

struct NotSimple : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ModuleNotClosed : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

using Endomorphism = Matrix;

/// One nonzero structure constant [e_i, e_j] has coefficient value on e_k.
struct BracketEntry {
  std::size_t i, j, k;
  Rational value;
};

class LieAlgebra {
public:
  LieAlgebra() = default;

  /// Validating constructor from a dense tensor c[(i*dim + j)*dim + k].
  static LieAlgebra from_tensor(std::string name, std::vector<std::string> labels, const std::vector<Rational>& c) {
    const std::size_t n = labels.size();
    if (c.size() != n * n * n) throw DimensionMismatch("structure tensor size != dim^3");
    LieAlgebra g(std::move(name), std::move(labels));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (c[(i * n + j) * n + k] != -c[(j * n + i) * n + k]) throw AntisymmetryViolation(i, j);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::map<std::uint32_t, Rational> row;
        for (std::size_t k = 0; k < n; ++k)
          if (!c[(i * n + j) * n + k].is_zero()) row[static_cast<std::uint32_t>(k)] = c[(i * n + j) * n + k];
        g.set_bracket(i, j, row);
      }
    g.check_jacobi();
    return g;
  }

  /// Validating constructor from entries with i < j (the i > j half is implied).
  static LieAlgebra from_brackets(std::string name, std::vector<std::string> labels,
                                  const std::vector<BracketEntry>& entries) {
    const std::size_t n = labels.size();
    std::vector<Rational> c(n * n * n);
    for (auto& e : entries) {
      if (e.i >= n || e.j >= n || e.k >= n) throw DimensionMismatch("bracket entry index out of range");
      if (e.i >= e.j) throw AntisymmetryViolation(e.i, e.j);
      c[(e.i * n + e.j) * n + e.k] += e.value;
      c[(e.j * n + e.i) * n + e.k] -= e.value;
    }
    return from_tensor(std::move(name), std::move(labels), c);
  }

  const std::string& name() const { return name_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

  /// [e_i, e_j] as a sparse coordinate list.
  const SparseRow& bracket_basis(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

  Rational c(std::size_t i, std::size_t j, std::size_t k) const {
    for (auto& [kk, v] : bracket_basis(i, j))
      if (kk == k) return v;
    return {};
  }

  Vector bracket(std::span<const Rational> x, std::span<const Rational> y) const {
    const std::size_t n = dim();
    if (x.size() != n || y.size() != n) throw DimensionMismatch("bracket: vector length != dim");
    Vector out(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (y[j].is_zero() || i == j) continue;
        Rational f = x[i] * y[j];
        for (auto& [k, v] : bracket_basis(i, j)) out[k] += f * v;
      }
    }
    return out;
  }

  /// Matrix of ad(e_i): column j holds [e_i, e_j].
  Matrix ad(std::size_t i) const {
    Matrix m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j)
      for (auto& [k, v] : bracket_basis(i, j)) m(k, j) = v;
    return m;
  }

  Matrix ad(std::span<const Rational> x) const {
    Matrix m(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
      if (!x[i].is_zero()) m += ad(i) * x[i];
    return m;
  }

  bool is_abelian() const {
    for (auto& r : table_)
      if (!r.empty()) return false;
    return true;
  }

  /// Dense tensor c[(i*dim + j)*dim + k].
  std::vector<Rational> tensor() const {
    const std::size_t n = dim();
    std::vector<Rational> c(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (auto& [k, v] : bracket_basis(i, j)) c[(i * n + j) * n + k] = v;
    return c;
  }

  /// True when the linear map m (columns are images of source basis vectors)
  /// intertwines the brackets of source and *this.
  bool is_homomorphism_from(const LieAlgebra& source, const Matrix& m) const {
    if (m.rows() != dim() || m.cols() != source.dim()) return false;
    std::vector<Vector> img;
    for (std::size_t a = 0; a < source.dim(); ++a) img.push_back(m.column(a));
    for (std::size_t a = 0; a < source.dim(); ++a)
      for (std::size_t b = a + 1; b < source.dim(); ++b) {
        Vector lhs(dim());
        for (auto& [k, v] : source.bracket_basis(a, b)) axpy(lhs, v, img[k]);
        if (lhs != bracket(img[a], img[b])) return false;
      }
    return true;
  }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.labels_ == b.labels_ && a.table_ == b.table_;
  }

private:
  LieAlgebra(std::string name, std::vector<std::string> labels)
      : name_(std::move(name)), labels_(std::move(labels)), table_(labels_.size() * labels_.size()) {}

  void set_bracket(std::size_t i, std::size_t j, const std::map<std::uint32_t, Rational>& row) {
    SparseRow r(row.begin(), row.end());
    table_[i * dim() + j] = std::move(r);
  }

  void check_jacobi() const {
    const std::size_t n = dim();
    auto bracket_with_basis = [&](const SparseRow& x, std::size_t k, Vector& out, const Rational& sign) {
      for (auto& [a, va] : x)
        for (auto& [b, vb] : bracket_basis(a, k)) out[b] += sign * va * vb;
    };
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
          Vector s(n);
          bracket_with_basis(bracket_basis(i, j), k, s, 1);
          bracket_with_basis(bracket_basis(j, k), i, s, 1);
          bracket_with_basis(bracket_basis(k, i), j, s, 1);
          if (!is_zero(s)) throw JacobiViolation(i, j, k);
        }
  }

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<SparseRow> table_;
};

/// Symmetric bilinear form on an algebra, by its Gram matrix.
struct BilinearForm {
  Matrix gram;

  Rational operator()(std::span<const Rational> x, std::span<const Rational> y) const {
    return dot(x, gram.apply(y));
  }
  bool is_symmetric() const { return gram == gram.transpose(); }
};

struct Inertia {
  std::size_t positive = 0, negative = 0, zero = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Sylvester inertia of a symmetric matrix by exact congruence pivoting.
/// Diagonal pivots first; otherwise a hyperbolic 2x2 pivot. Lowest index wins ties.
inline Inertia inertia(const Matrix& sym) {
  if (!sym.is_square() || !(sym == sym.transpose())) throw std::invalid_argument("inertia: matrix not symmetric");
  Matrix a = sym;
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < a.rows(); ++i) active.push_back(i);
  Inertia in;
  auto erase = [&](std::size_t idx) { active.erase(std::find(active.begin(), active.end(), idx)); };
  while (!active.empty()) {
    std::optional<std::size_t> diag;
    for (auto i : active)
      if (!a(i, i).is_zero()) { diag = i; break; }
    if (diag) {
      std::size_t i = *diag;
      (a(i, i).sign() > 0 ? in.positive : in.negative)++;
      erase(i);
      Rational inv = Rational(1) / a(i, i);
      for (auto r : active) {
        if (a(r, i).is_zero()) continue;
        Rational f = a(r, i) * inv;
        for (auto s : active) a(r, s) -= f * a(i, s);
      }
      continue;
    }
    std::optional<std::pair<std::size_t, std::size_t>> off;
    for (std::size_t x = 0; x < active.size() && !off; ++x)
      for (std::size_t y = x + 1; y < active.size(); ++y)
        if (!a(active[x], active[y]).is_zero()) { off = {active[x], active[y]}; break; }
    if (!off) {
      in.zero += active.size();
      break;
    }
    auto [i, j] = *off;
    ++in.positive;
    ++in.negative;
    erase(i);
    erase(j);
    Rational inv = Rational(1) / a(i, j);
    Matrix upd = a;
    for (auto r : active)
      for (auto s : active) upd(r, s) -= (a(r, i) * a(j, s) + a(r, j) * a(i, s)) * inv;
    a = std::move(upd);
  }
  return in;
}

inline BilinearForm killing_form(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(g.ad(i));
  Matrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      // trace(ad_i ad_j) = sum_{k,l} ad_i(k,l) ad_j(l,k)
      Rational t;
      for (std::size_t l = 0; l < n; ++l)
        for (auto& [k, v] : g.bracket_basis(i, l)) {
          const Rational& w = ads[j](l, k);
          if (!w.is_zero()) t += v * w;
        }
      gram(i, j) = t;
      gram(j, i) = t;
    }
  return {gram};
}

inline Inertia killing_signature(const LieAlgebra& g) { return inertia(killing_form(g).gram); }

/// {x : [e_i, x] = 0 for all i}.
inline Subspace center(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  SparseMatrix m(n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::map<std::uint32_t, Rational>> rows(n);
    for (std::size_t j = 0; j < n; ++j)
      for (auto& [k, v] : g.bracket_basis(i, j)) rows[k][static_cast<std::uint32_t>(j)] += v;
    for (std::size_t k = 0; k < n; ++k) m.set_row(i * n + k, std::move(rows[k]));
  }
  return sparse_kernel(m);
}

/// Span of all brackets [e_i, e_j].
inline Subspace derived_subalgebra(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  SparseEliminator e(n);
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& r = g.bracket_basis(i, j);
      if (r.empty()) continue;
      if (e.add_row(r)) {
        Vector v(n);
        for (auto& [k, x] : r) v[k] = x;
        gens.push_back(std::move(v));
      }
    }
  return span_of(n, gens);
}

/// Smallest ideal containing the given vectors.
inline Subspace generated_ideal(const LieAlgebra& g, const std::vector<Vector>& seeds) {
  const std::size_t n = g.dim();
  SparseEliminator e(n);
  std::vector<Vector> basis, frontier;
  auto push = [&](const Vector& v) {
    SparseRow r;
    for (std::size_t k = 0; k < n; ++k)
      if (!v[k].is_zero()) r.emplace_back(static_cast<std::uint32_t>(k), v[k]);
    if (e.add_row(r)) {
      basis.push_back(v);
      frontier.push_back(v);
    }
  };
  for (auto& s : seeds) push(s);
  while (!frontier.empty()) {
    Vector v = std::move(frontier.back());
    frontier.pop_back();
    for (std::size_t i = 0; i < n && !e.full_rank(); ++i) push(g.bracket(unit_vector(n, i), v));
  }
  return span_of(n, basis);
}

/// The algebra structure induced on a subspace closed under the bracket.
/// Labels are taken from the ambient algebra when a basis vector is a unit vector.
inline LieAlgebra subalgebra(const LieAlgebra& g, const Subspace& s, std::string name,
                             std::vector<std::string> labels = {}) {
  const std::size_t d = s.dim();
  if (labels.empty()) {
    for (std::size_t a = 0; a < d; ++a) {
      const Vector& v = s.basis[a];
      std::size_t nz = 0, last = 0;
      for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) { ++nz; last = k; }
      labels.push_back(nz == 1 && v[last] == Rational(1) ? g.labels()[last] : name + "_" + std::to_string(a));
    }
  }
  std::vector<BracketEntry> entries;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      auto coords = s.coordinates(g.bracket(s.basis[a], s.basis[b]));
      if (!coords) throw ModuleNotClosed("subspace is not closed under the bracket");
      for (std::size_t c = 0; c < d; ++c)
        if (!(*coords)[c].is_zero()) entries.push_back({a, b, c, (*coords)[c]});
    }
  return LieAlgebra::from_brackets(std::move(name), std::move(labels), entries);
}

/// g ⊕ h with basis (g basis, h basis).
inline LieAlgebra direct_sum(const LieAlgebra& g, const LieAlgebra& h, std::string name = {}) {
  std::vector<std::string> labels;
  for (auto& l : g.labels()) labels.push_back(l + "_1");
  for (auto& l : h.labels()) labels.push_back(l + "_2");
  std::vector<BracketEntry> e;
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (auto& [k, v] : g.bracket_basis(i, j)) e.push_back({i, j, k, v});
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = i + 1; j < h.dim(); ++j)
      for (auto& [k, v] : h.bracket_basis(i, j)) e.push_back({n + i, n + j, n + k, v});
  if (name.empty()) name = g.name() + "+" + h.name();
  return LieAlgebra::from_brackets(std::move(name), std::move(labels), e);
}

/// Associative algebra of endomorphisms, given by a basis and its structure table.
struct EndomorphismAlgebra {
  std::vector<Endomorphism> basis;
  /// product[a][b] = coordinates of basis[a] * basis[b].
  std::vector<std::vector<Vector>> product;

  std::size_t dim() const { return basis.size(); }
};

namespace detail {

/// All T (d x d) with T A = A T for every A in the family; basis in vec(T) order.
inline Subspace commuting_endomorphisms(std::size_t d, const std::vector<SparseMatrix>& family) {
  SparseEliminator e(d * d);
  for (auto& a : family) {
    // (T A - A T)(r, c) = sum_s T(r,s) A(s,c) - sum_s A(r,s) T(s,c)
    std::vector<std::map<std::uint32_t, Rational>> cols_of_a(d);  // column c of A as s -> A(s,c)
    for (std::size_t s = 0; s < d; ++s)
      for (auto& [c, v] : a.row(s)) cols_of_a[c][static_cast<std::uint32_t>(s)] = v;
    for (std::size_t r = 0; r < d && !e.full_rank(); ++r)
      for (std::size_t c = 0; c < d; ++c) {
        std::map<std::uint32_t, Rational> row;
        for (auto& [s, v] : cols_of_a[c]) row[static_cast<std::uint32_t>(r * d + s)] += v;
        for (auto& [s, v] : a.row(r)) row[static_cast<std::uint32_t>(s * d + c)] -= v;
        SparseRow sr;
        for (auto& [k, v] : row)
          if (!v.is_zero()) sr.emplace_back(k, v);
        e.add_row(sr);
      }
  }
  return e.kernel();
}

inline EndomorphismAlgebra endomorphism_algebra(std::size_t d, const Subspace& vecs) {
  EndomorphismAlgebra alg;
  for (auto& v : vecs.basis) alg.basis.push_back(Matrix(d, d, v));
  alg.product.assign(alg.dim(), std::vector<Vector>(alg.dim()));
  for (std::size_t a = 0; a < alg.dim(); ++a)
    for (std::size_t b = 0; b < alg.dim(); ++b) {
      auto c = vecs.coordinates((alg.basis[a] * alg.basis[b]).entries());
      if (!c) throw std::logic_error("endomorphism algebra not closed under composition");
      alg.product[a][b] = std::move(*c);
    }
  return alg;
}

/// Elements worth probing for a real eigenvalue splitting: basis elements,
/// pairwise sums and differences, pairwise products.
inline std::vector<Matrix> probe_elements(const std::vector<Matrix>& basis) {
  std::vector<Matrix> out(basis.begin(), basis.end());
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b) {
      out.push_back(basis[a] + basis[b]);
      out.push_back(basis[a] - basis[b]);
      out.push_back(basis[a] * basis[b]);
      out.push_back(basis[b] * basis[a]);
    }
  return out;
}

/// A probe whose minimal polynomial has degree >= 2 and a real root gives a
/// proper invariant eigenspace. Returns that element and its polynomial.
inline std::optional<std::pair<Matrix, Polynomial>> find_real_splitting(const std::vector<Matrix>& basis) {
  for (auto& t : probe_elements(basis)) {
    Polynomial m = minimal_polynomial(t);
    if (m.degree() >= 2 && m.count_real_roots() > 0) return std::make_pair(t, m);
  }
  return std::nullopt;
}

}  // namespace detail

/// Centroid: endomorphisms commuting with every ad e_i.
inline EndomorphismAlgebra centroid(const LieAlgebra& g) {
  std::vector<SparseMatrix> ads;
  for (std::size_t i = 0; i < g.dim(); ++i) ads.push_back(SparseMatrix::from_dense(g.ad(i)));
  return detail::endomorphism_algebra(g.dim(), detail::commuting_endomorphisms(g.dim(), ads));
}

enum class StructureKind { abelian, not_semisimple, simple_real, simple_complex, semisimple_split };

inline const char* to_string(StructureKind k) {
  switch (k) {
    case StructureKind::abelian: return "abelian";
    case StructureKind::not_semisimple: return "not_semisimple";
    case StructureKind::simple_real: return "simple_real";
    case StructureKind::simple_complex: return "simple_complex";
    case StructureKind::semisimple_split: return "semisimple_split";
  }
  return "?";
}

struct SimpleIdeal {
  Subspace span;  // in coordinates of the analyzed algebra
  StructureKind kind;
};

struct StructureReport {
  StructureKind kind;
  std::size_t centroid_dim = 0;
  EndomorphismAlgebra centroid;
  /// For semisimple_split: the simple ideals, in a deterministic order.
  std::vector<SimpleIdeal> ideals;
};

namespace detail {

inline bool is_identity_multiple(const Matrix& t) {
  if (!t.is_square()) return false;
  return t == Matrix::identity(t.rows()) * t(0, 0);
}

/// Nontrivial rational idempotent of a commutative centroid, if one is visible
/// through a rational eigenvalue of a probe element.
inline std::optional<Matrix> rational_idempotent(const std::vector<Matrix>& basis) {
  for (auto& t : probe_elements(basis)) {
    Polynomial m = minimal_polynomial(t);
    if (m.degree() < 2) continue;
    for (auto& r : m.rational_roots()) {
      // m = (x - r)^e h with h(r) != 0; idempotent from the CRT on (x - r)^e, h.
      Polynomial lin({-r, Rational(1)});
      Polynomial h = m, fe({Rational(1)});
      while (h(r).is_zero()) {
        h = h.divmod(lin).first;
        fe = fe * lin;
      }
      if (h.degree() < 1) continue;
      // Solve u*fe + v*h = 1 by the extended Euclidean algorithm.
      Polynomial r0 = fe, r1 = h, s0({Rational(1)}), s1;
      while (!r1.is_zero()) {
        auto [q, rem] = r0.divmod(r1);
        Polynomial s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
      }
      // r0 is a nonzero constant; u = s0 / r0.
      Polynomial u = s0 * Polynomial({Rational(1) / r0.coeff(0)});
      Matrix e = (u * fe)(t);
      if (e * e == e && !e.is_zero() && !(e == Matrix::identity(t.rows()))) return e;
    }
  }
  return std::nullopt;
}

inline Subspace image(const Matrix& e) {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < e.cols(); ++j) cols.push_back(e.column(j));
  return span_of(e.rows(), cols);
}

inline void split_ideals(const LieAlgebra& g, const Subspace& span_in_root, const LieAlgebra& root_alg,
                         std::vector<SimpleIdeal>& out, int depth);

}  // namespace detail

struct IrrationalSplitting : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline StructureReport structure_analysis(const LieAlgebra& g) {
  StructureReport rep;
  if (g.is_abelian()) {
    rep.kind = StructureKind::abelian;
    return rep;
  }
  if (rank(killing_form(g).gram) != g.dim()) {
    rep.kind = StructureKind::not_semisimple;
    return rep;
  }
  rep.centroid = centroid(g);
  rep.centroid_dim = rep.centroid.dim();
  if (rep.centroid_dim == 1) {
    rep.kind = StructureKind::simple_real;
    return rep;
  }
  if (rep.centroid_dim == 2) {
    const Matrix* t = detail::is_identity_multiple(rep.centroid.basis[0]) ? &rep.centroid.basis[1]
                                                                          : &rep.centroid.basis[0];
    if (minimal_polynomial(*t).has_negative_discriminant()) {
      rep.kind = StructureKind::simple_complex;
      return rep;
    }
  }
  rep.kind = StructureKind::semisimple_split;
  detail::split_ideals(g, full_space(g.dim()), g, rep.ideals, 0);
  return rep;
}

namespace detail {

inline void split_ideals(const LieAlgebra& h, const Subspace& span_in_root, const LieAlgebra& root,
                         std::vector<SimpleIdeal>& out, int depth) {
  if (depth > 64) throw std::logic_error("split_ideals: recursion too deep");
  auto cen = centroid(h);
  if (cen.dim() == 1) {
    out.push_back({span_in_root, StructureKind::simple_real});
    return;
  }
  if (cen.dim() == 2) {
    const Matrix& t = is_identity_multiple(cen.basis[0]) ? cen.basis[1] : cen.basis[0];
    if (minimal_polynomial(t).has_negative_discriminant()) {
      out.push_back({span_in_root, StructureKind::simple_complex});
      return;
    }
  }
  auto e = rational_idempotent(cen.basis);
  if (!e) throw IrrationalSplitting("semisimple algebra '" + h.name() + "' splits only over an extension of Q");
  Matrix f = Matrix::identity(h.dim()) - *e;
  for (const Matrix* proj : {&*e, &f}) {
    Subspace local = image(*proj);
    // Express the local ideal in root coordinates.
    std::vector<Vector> root_vecs;
    for (auto& v : local.basis) root_vecs.push_back(span_in_root.combine(v));
    Subspace in_root = span_of(root.dim(), root_vecs);
    LieAlgebra sub = subalgebra(root, in_root, h.name() + "'");
    split_ideals(sub, in_root, root, out, depth + 1);
  }
}

}  // namespace detail

/// Result of complex-structure detection on a simple algebra.
struct ComplexStructure {
  /// The generator T of the centroid (not a multiple of the identity).
  Endomorphism generator;
  Polynomial minimal_polynomial;
  /// J with J^2 = -id, present when it has rational entries.
  std::optional<Endomorphism> J;
};

/// Complex structure from the centroid. nullopt when the centroid is R.
/// Throws NotSimple unless g is simple.
inline std::optional<ComplexStructure> complex_structure(const LieAlgebra& g, const StructureReport& rep) {
  if (rep.kind != StructureKind::simple_real && rep.kind != StructureKind::simple_complex)
    throw NotSimple("complex_structure: algebra '" + g.name() + "' is not simple");
  if (rep.kind == StructureKind::simple_real) return std::nullopt;
  const auto& cb = rep.centroid.basis;
  Matrix t = detail::is_identity_multiple(cb[0]) ? cb[1] : cb[0];
  ComplexStructure cs{t, minimal_polynomial(t), std::nullopt};
  // m = x^2 + b x + c ;  J = (T + b/2) / sqrt(c - b^2/4)
  Rational b = cs.minimal_polynomial.coeff(1), c = cs.minimal_polynomial.coeff(0);
  Rational r = c - b * b / Rational(4);
  if (r.is_square()) {
    Matrix j = (t + Matrix::identity(g.dim()) * (b / Rational(2))) * (Rational(1) / r.sqrt());
    if (!(j * j == -Matrix::identity(g.dim()))) throw std::logic_error("complex_structure: J^2 != -id");
    cs.J = std::move(j);
  }
  return cs;
}

inline std::optional<ComplexStructure> complex_structure(const LieAlgebra& g) {
  return complex_structure(g, structure_analysis(g));
}

/// Matrices of the action of `acting` (vectors of g) on the invariant subspace `module`.
inline std::vector<Matrix> restricted_action(const LieAlgebra& g, const std::vector<Vector>& acting,
                                             const Subspace& module) {
  std::vector<Matrix> out;
  for (auto& x : acting) {
    Matrix m(module.dim(), module.dim());
    for (std::size_t a = 0; a < module.dim(); ++a) {
      auto c = module.coordinates(g.bracket(x, module.basis[a]));
      if (!c) throw ModuleNotClosed("module is not invariant under the acting subalgebra");
      for (std::size_t b = 0; b < module.dim(); ++b) m(b, a) = (*c)[b];
    }
    out.push_back(std::move(m));
  }
  return out;
}

/// Action of `acting` on the quotient g / sub, using `complement` as representatives.
inline std::vector<Matrix> quotient_action(const LieAlgebra& g, const std::vector<Vector>& acting, const Subspace& sub,
                                           const std::vector<Vector>& complement) {
  std::vector<Vector> family = sub.basis;
  family.insert(family.end(), complement.begin(), complement.end());
  CoordinateSolver solver(g.dim(), family);
  for (auto& x : acting)
    for (auto& s : sub.basis)
      if (!sub.contains(g.bracket(x, s))) throw ModuleNotClosed("submodule not invariant under the action");
  std::vector<Matrix> out;
  const std::size_t d = complement.size(), off = sub.dim();
  for (auto& x : acting) {
    Matrix m(d, d);
    for (std::size_t a = 0; a < d; ++a) {
      auto c = solver.solve(g.bracket(x, complement[a]));
      for (std::size_t b = 0; b < d; ++b) m(b, a) = (*c)[off + b];
    }
    out.push_back(std::move(m));
  }
  return out;
}

struct Commutant {
  EndomorphismAlgebra algebra;
  bool irreducible = false;
  std::size_t dim() const { return algebra.dim(); }
};

/// Intertwiners of a module given by action matrices (all d x d).
/// Irreducible means no element of the commutant splits the module along a
/// real eigenvalue.
inline Commutant commutant(std::size_t module_dim, const std::vector<Matrix>& action) {
  std::vector<SparseMatrix> fam;
  for (auto& a : action) {
    if (a.rows() != module_dim || a.cols() != module_dim) throw DimensionMismatch("commutant: action size");
    fam.push_back(SparseMatrix::from_dense(a));
  }
  Commutant c;
  c.algebra = detail::endomorphism_algebra(module_dim, detail::commuting_endomorphisms(module_dim, fam));
  if (c.dim() <= 1) {
    c.irreducible = module_dim > 0;
  } else {
    c.irreducible = !detail::find_real_splitting(c.algebra.basis).has_value();
  }
  return c;
}

}  // namespace liecoh
