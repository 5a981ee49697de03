#pragma once

// Relative Chevalley-Eilenberg cohomology H^*(g, m) with trivial real
// coefficients, computed on the complex of m-invariant alternating forms on
// a complement p of m.

#include "liecoh/cartan.hpp"
#include "liecoh/lie_algebra.hpp"
#include "liecoh/sparse.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace liecoh {

struct DegreeOutOfRange : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ImageNotInvariant : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotReductive : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

using IndexTuple = std::vector<std::uint32_t>;

/// All strictly increasing degree-tuples from {0..space_dim-1}, lexicographic.
inline std::vector<IndexTuple> form_basis(std::size_t space_dim, std::size_t degree) {
  if (degree > space_dim) throw DegreeOutOfRange("form degree " + std::to_string(degree) + " exceeds " + std::to_string(space_dim));
  std::vector<IndexTuple> out;
  IndexTuple t(degree);
  for (std::size_t i = 0; i < degree; ++i) t[i] = static_cast<std::uint32_t>(i);
  while (true) {
    out.push_back(t);
    std::size_t i = degree;
    while (i > 0 && t[i - 1] == space_dim - degree + i - 1) --i;
    if (i == 0) break;
    ++t[i - 1];
    for (std::size_t j = i; j < degree; ++j) t[j] = t[j - 1] + 1;
  }
  return out;
}

/// Basis of Λ^k V* with lookup from index sets.
class FormSpace {
public:
  FormSpace(std::size_t space_dim, std::size_t degree)
      : n_(space_dim), k_(degree), tuples_(form_basis(space_dim, degree)) {
    if (space_dim > 64) throw DimensionMismatch("FormSpace: at most 64 generators");
    for (std::size_t i = 0; i < tuples_.size(); ++i) index_.emplace(mask(tuples_[i]), static_cast<std::uint32_t>(i));
  }

  std::size_t space_dim() const { return n_; }
  std::size_t degree() const { return k_; }
  std::size_t size() const { return tuples_.size(); }
  const IndexTuple& tuple(std::size_t i) const { return tuples_[i]; }
  std::uint32_t index_of_mask(std::uint64_t m) const { return index_.at(m); }

  static std::uint64_t mask(const IndexTuple& t) {
    std::uint64_t m = 0;
    for (auto i : t) m |= std::uint64_t{1} << i;
    return m;
  }

private:
  std::size_t n_, k_;
  std::vector<IndexTuple> tuples_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
};

/// An alternating form as a coefficient vector over FormSpace(space_dim, degree).
struct AlternatingForm {
  std::size_t space_dim = 0, degree = 0;
  Vector coefficients;

  /// Value on basis vectors (any order, repeats allowed).
  Rational evaluate(const std::vector<std::uint32_t>& args, const FormSpace& fs) const {
    std::vector<std::uint32_t> a(args);
    int sign = 1;
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j + 1 < a.size() - i; ++j) {
        if (a[j] == a[j + 1]) return {};
        if (a[j] > a[j + 1]) {
          std::swap(a[j], a[j + 1]);
          sign = -sign;
        }
      }
    const Rational& c = coefficients[fs.index_of_mask(FormSpace::mask(a))];
    return sign > 0 ? c : -c;
  }
};

/// (g, m) with a complement p of m such that [m, p] ⊆ p.
struct ReductivePair {
  LieAlgebra g;
  std::vector<Vector> m_basis, p_basis;
  Matrix projection;             // p-coordinates along m, dim p x dim g
  std::vector<Matrix> m_action;  // per m basis vector X: columns are π_p[X, p_a]
  std::vector<std::vector<SparseRow>> p_bracket;  // [a][b]: π_p[p_a, p_b] in p-coordinates
  bool symmetric = false;        // [p, p] ⊆ m
  std::string description;

  std::size_t p_dim() const { return p_basis.size(); }
};

inline ReductivePair make_pair(const LieAlgebra& g, std::vector<Vector> m_basis, std::vector<Vector> p_basis,
                               std::string description) {
  const std::size_t n = g.dim();
  if (m_basis.size() + p_basis.size() != n) throw DimensionMismatch("make_pair: m and p do not span g");
  ReductivePair pr;
  pr.g = g;
  pr.m_basis = std::move(m_basis);
  pr.p_basis = std::move(p_basis);
  pr.description = std::move(description);
  std::vector<Vector> family = pr.m_basis;
  family.insert(family.end(), pr.p_basis.begin(), pr.p_basis.end());
  CoordinateSolver solver(n, family);
  const std::size_t md = pr.m_basis.size(), pd = pr.p_basis.size();
  auto split = [&](const Vector& v) {
    auto c = solver.solve(v);
    return std::make_pair(Vector(c->begin(), c->begin() + md), Vector(c->begin() + md, c->end()));
  };
  pr.projection = Matrix(pd, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto [mc, pc] = split(unit_vector(n, i));
    for (std::size_t a = 0; a < pd; ++a) pr.projection(a, i) = pc[a];
  }
  for (auto& x : pr.m_basis)
    for (auto& y : pr.m_basis)
      if (!is_zero(split(g.bracket(x, y)).second)) throw NotReductive("m is not a subalgebra");
  for (auto& x : pr.m_basis) {
    Matrix act(pd, pd);
    for (std::size_t a = 0; a < pd; ++a) {
      auto [mc, pc] = split(g.bracket(x, pr.p_basis[a]));
      if (!is_zero(mc)) throw NotReductive("[m, p] is not contained in p");
      for (std::size_t b = 0; b < pd; ++b) act(b, a) = pc[b];
    }
    pr.m_action.push_back(std::move(act));
  }
  pr.symmetric = true;
  pr.p_bracket.assign(pd, std::vector<SparseRow>(pd));
  for (std::size_t a = 0; a < pd; ++a)
    for (std::size_t b = a + 1; b < pd; ++b) {
      auto [mc, pc] = split(g.bracket(pr.p_basis[a], pr.p_basis[b]));
      SparseRow r, neg;
      for (std::size_t c = 0; c < pd; ++c)
        if (!pc[c].is_zero()) {
          r.emplace_back(static_cast<std::uint32_t>(c), pc[c]);
          neg.emplace_back(static_cast<std::uint32_t>(c), -pc[c]);
        }
      if (!r.empty()) pr.symmetric = false;
      pr.p_bracket[a][b] = std::move(r);
      pr.p_bracket[b][a] = std::move(neg);
    }
  return pr;
}

/// (g, 0): absolute cohomology.
inline ReductivePair absolute_pair(const LieAlgebra& g) {
  return make_pair(g, {}, full_space(g.dim()).basis, "(" + g.name() + ", 0)");
}

/// (g, k) from a Cartan decomposition.
inline ReductivePair symmetric_pair(const CartanDecomposition& d) {
  return make_pair(d.algebra, d.k.basis, d.p.basis, "(" + d.algebra.name() + ", k)");
}

/// (g, [k, k]) with complement z(k) + p.
inline ReductivePair derived_k_pair(const CartanDecomposition& d) {
  std::vector<Vector> comp = d.z_k.basis;
  comp.insert(comp.end(), d.p.basis.begin(), d.p.basis.end());
  return make_pair(d.algebra, d.m.basis, comp, "(" + d.algebra.name() + ", [k,k])");
}

namespace detail {

/// Order m generators so that a family of pairwise commuting ones comes
/// first; their rows keep elimination block-sparse.
inline std::vector<std::size_t> generator_order(const ReductivePair& pr) {
  const std::size_t md = pr.m_basis.size();
  std::vector<std::size_t> torus, rest;
  for (std::size_t a = 0; a < md; ++a) {
    bool commutes = true;
    for (auto t : torus)
      if (!is_zero(pr.g.bracket(pr.m_basis[a], pr.m_basis[t]))) { commutes = false; break; }
    (commutes ? torus : rest).push_back(a);
  }
  torus.insert(torus.end(), rest.begin(), rest.end());
  return torus;
}

/// Sign and index of the sorted tuple obtained from `t` by replacing the
/// entry at `pos` with c; nullopt when c already occurs elsewhere.
inline std::optional<std::pair<int, std::uint32_t>> substitute(const FormSpace& fs, const IndexTuple& t, std::size_t pos,
                                                               std::uint32_t c) {
  const std::uint32_t old = t[pos];
  std::uint64_t m = FormSpace::mask(t);
  if (c != old && (m >> c & 1)) return std::nullopt;
  int between = 0;
  std::uint32_t lo = std::min(c, old), hi = std::max(c, old);
  for (auto j : t)
    if (j > lo && j < hi) ++between;
  m &= ~(std::uint64_t{1} << old);
  m |= std::uint64_t{1} << c;
  return std::make_pair(between % 2 ? -1 : 1, fs.index_of_mask(m));
}

}  // namespace detail

/// Matrix of the Lie derivative L_X on Λ^k p*, X = sum of coeffs * m_basis.
/// (L_X ω)(v_1..v_k) = -Σ_i ω(v_1, .., π_p[X, v_i], .., v_k).
inline SparseMatrix lie_derivative_matrix(const ReductivePair& pr, const Matrix& action, std::size_t degree) {
  const std::size_t pd = pr.p_dim();
  if (degree > pd) throw DegreeOutOfRange("lie_derivative: degree exceeds dim p");
  if (action.rows() != pd || action.cols() != pd) throw DimensionMismatch("lie_derivative: action size");
  FormSpace fs(pd, degree);
  SparseMatrix out(fs.size(), fs.size());
  for (std::size_t r = 0; r < fs.size(); ++r) {
    const auto& t = fs.tuple(r);
    std::map<std::uint32_t, Rational> row;
    for (std::size_t pos = 0; pos < t.size(); ++pos)
      for (std::size_t c = 0; c < pd; ++c) {
        const Rational& a = action(c, t[pos]);
        if (a.is_zero()) continue;
        auto s = detail::substitute(fs, t, pos, static_cast<std::uint32_t>(c));
        if (!s) continue;
        row[s->second] -= s->first > 0 ? a : -a;
      }
    out.set_row(r, std::move(row));
  }
  return out;
}

inline Matrix action_of(const ReductivePair& pr, std::span<const Rational> x_in_m) {
  const std::size_t pd = pr.p_dim();
  if (x_in_m.size() != pr.m_basis.size()) throw DimensionMismatch("element of m has wrong length");
  Matrix a(pd, pd);
  for (std::size_t i = 0; i < x_in_m.size(); ++i)
    if (!x_in_m[i].is_zero()) a += pr.m_action[i] * x_in_m[i];
  return a;
}

/// L_X ω for X given by coordinates in the m basis.
inline AlternatingForm lie_derivative(const ReductivePair& pr, std::span<const Rational> x_in_m, const AlternatingForm& w) {
  if (w.space_dim != pr.p_dim()) throw DimensionMismatch("lie_derivative: form lives on a different space");
  auto l = lie_derivative_matrix(pr, action_of(pr, x_in_m), w.degree);
  return {w.space_dim, w.degree, l.apply(w.coefficients)};
}

/// m-invariant forms of the given degree (canonical kernel basis).
inline Subspace invariant_forms(const ReductivePair& pr, std::size_t degree) {
  const std::size_t pd = pr.p_dim();
  if (degree > pd) throw DegreeOutOfRange("invariant_forms: degree exceeds dim p");
  FormSpace fs(pd, degree);
  SparseEliminator e(fs.size());
  for (auto idx : detail::generator_order(pr)) {
    if (e.full_rank()) break;
    e.add_rows(lie_derivative_matrix(pr, pr.m_action[idx], degree));
  }
  return e.kernel();
}

/// ad(g)-invariant forms on g itself, (Λ^k g*)^g.
inline Subspace adjoint_invariant_forms(const LieAlgebra& g, std::size_t degree) {
  auto pr = absolute_pair(g);
  if (degree > g.dim()) throw DegreeOutOfRange("adjoint_invariant_forms: degree exceeds dim g");
  FormSpace fs(g.dim(), degree);
  SparseEliminator e(fs.size());
  for (std::size_t x = 0; x < g.dim() && !e.full_rank(); ++x) e.add_rows(lie_derivative_matrix(pr, g.ad(x), degree));
  return e.kernel();
}

/// dω as a full vector on Λ^{k+1} p*:
/// (dω)(x_0..x_k) = Σ_{a<b} (-1)^{a+b} ω(π_p[x_a, x_b], x_0, .., x̂_a, .., x̂_b, .., x_k).
inline Vector apply_differential(const ReductivePair& pr, std::size_t degree, std::span<const Rational> w) {
  const std::size_t pd = pr.p_dim();
  if (degree + 1 > pd) return {};
  FormSpace src(pd, degree), dst(pd, degree + 1);
  if (w.size() != src.size()) throw DimensionMismatch("apply_differential: form length");
  Vector out(dst.size());
  for (std::size_t r = 0; r < dst.size(); ++r) {
    const auto& t = dst.tuple(r);
    const std::uint64_t full = FormSpace::mask(t);
    Rational acc;
    for (std::size_t a = 0; a < t.size(); ++a)
      for (std::size_t b = a + 1; b < t.size(); ++b) {
        const auto& br = pr.p_bracket[t[a]][t[b]];
        if (br.empty()) continue;
        const std::uint64_t rest = full & ~(std::uint64_t{1} << t[a]) & ~(std::uint64_t{1} << t[b]);
        int sign_ab = (a + b) % 2 ? -1 : 1;
        for (auto& [c, v] : br) {
          if (rest >> c & 1) continue;
          // ω(c, rest) = (-1)^{#{r in rest : r < c}} ω(sorted)
          int below = __builtin_popcountll(rest & ((std::uint64_t{1} << c) - 1));
          const Rational& coef = w[src.index_of_mask(rest | (std::uint64_t{1} << c))];
          if (coef.is_zero()) continue;
          Rational term = v * coef;
          if ((sign_ab * (below % 2 ? -1 : 1)) < 0) acc -= term;
          else acc += term;
        }
      }
    out[r] = std::move(acc);
  }
  return out;
}

/// Full matrix of d: Λ^k p* -> Λ^{k+1} p* (for small spaces and tests).
inline SparseMatrix differential_matrix(const ReductivePair& pr, std::size_t degree) {
  const std::size_t pd = pr.p_dim();
  FormSpace src(pd, degree);
  std::size_t rows = degree + 1 <= pd ? FormSpace(pd, degree + 1).size() : 0;
  SparseMatrix d(rows, src.size());
  std::vector<std::map<std::uint32_t, Rational>> acc(rows);
  for (std::size_t i = 0; i < src.size(); ++i) {
    Vector e = unit_vector(src.size(), i);
    Vector img = apply_differential(pr, degree, e);
    for (std::size_t r = 0; r < img.size(); ++r)
      if (!img[r].is_zero()) acc[r][static_cast<std::uint32_t>(i)] = img[r];
  }
  for (std::size_t r = 0; r < rows; ++r) d.set_row(r, std::move(acc[r]));
  return d;
}

namespace detail {

inline bool is_invariant(const ReductivePair& pr, std::size_t degree, const Vector& w) {
  for (auto& act : pr.m_action)
    if (!is_zero(lie_derivative_matrix(pr, act, degree).apply(w))) return false;
  return true;
}

}  // namespace detail

/// d_k restricted to invariants, in the invariant bases of degrees k and k+1.
inline Matrix relative_differential(const ReductivePair& pr, std::size_t degree) {
  const std::size_t pd = pr.p_dim();
  Subspace src = invariant_forms(pr, degree);
  if (degree + 1 > pd) return Matrix(0, src.dim());
  Subspace dst = invariant_forms(pr, degree + 1);
  Matrix d(dst.dim(), src.dim());
  for (std::size_t a = 0; a < src.dim(); ++a) {
    Vector img = apply_differential(pr, degree, src.basis[a]);
    auto c = dst.coordinates(img);
    if (!c) throw ImageNotInvariant("d maps an invariant " + std::to_string(degree) + "-form outside the invariants");
    for (std::size_t b = 0; b < dst.dim(); ++b) d(b, a) = (*c)[b];
  }
  return d;
}

struct DegreeReport {
  std::size_t k = 0;
  std::size_t cochain_dim = 0;    // C(dim p, k)
  std::size_t invariant_dim = 0;  // dim (Λ^k p*)^m
  std::size_t d_rank = 0;         // rank of d_k on invariants
  std::size_t h_dim = 0;
};

struct CohomologyReport {
  std::string pair;
  std::size_t g_dim = 0, m_dim = 0, p_dim = 0;
  bool symmetric_pair = false;
  std::vector<DegreeReport> degrees;

  std::vector<std::size_t> h_dims() const {
    std::vector<std::size_t> h;
    for (auto& d : degrees) h.push_back(d.h_dim);
    return h;
  }
};

/// Ranks of d_k on invariant cochains for k = 0..max_degree, with d∘d = 0
/// checked on every invariant cochain.
inline CohomologyReport cohomology_dims(const ReductivePair& pr, std::size_t max_degree) {
  const std::size_t pd = pr.p_dim();
  if (max_degree > pd) throw DegreeOutOfRange("max_degree " + std::to_string(max_degree) + " exceeds dim p = " + std::to_string(pd));
  CohomologyReport rep{pr.description, pr.g.dim(), pr.m_basis.size(), pd, pr.symmetric, {}};
  std::size_t prev_rank = 0;
  for (std::size_t k = 0; k <= max_degree; ++k) {
    Subspace inv = invariant_forms(pr, k);
    DegreeReport dr;
    dr.k = k;
    dr.cochain_dim = FormSpace(pd, k).size();
    dr.invariant_dim = inv.dim();
    if (k + 1 <= pd) {
      SparseEliminator e(FormSpace(pd, k + 1).size());
      for (auto& w : inv.basis) {
        Vector img = apply_differential(pr, k, w);
        if (!detail::is_invariant(pr, k + 1, img))
          throw ImageNotInvariant("d maps an invariant " + std::to_string(k) + "-form outside the invariants");
        if (k + 2 <= pd && !is_zero(apply_differential(pr, k + 1, img)))
          throw std::logic_error("d o d != 0 in degree " + std::to_string(k));
        SparseRow r;
        for (std::size_t i = 0; i < img.size(); ++i)
          if (!img[i].is_zero()) r.emplace_back(static_cast<std::uint32_t>(i), img[i]);
        e.add_row(r);
      }
      dr.d_rank = e.rank();
    }
    dr.h_dim = dr.invariant_dim - dr.d_rank - prev_rank;
    prev_rank = dr.d_rank;
    rep.degrees.push_back(dr);
  }
  return rep;
}

/// k-invariant symmetric bilinear forms: B([X,Y],Z) + B(Y,[X,Z]) = 0.
inline std::vector<BilinearForm> invariant_symmetric_forms(const LieAlgebra& k) {
  const std::size_t n = k.dim();
  auto var = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return static_cast<std::uint32_t>(a * n - a * (a - 1) / 2 + (b - a));
  };
  const std::size_t nvars = n * (n + 1) / 2;
  SparseEliminator e(nvars);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = y; z < n; ++z) {
        std::map<std::uint32_t, Rational> row;
        for (auto& [c, v] : k.bracket_basis(x, y)) row[var(c, z)] += v;
        for (auto& [c, v] : k.bracket_basis(x, z)) row[var(y, c)] += v;
        SparseRow r;
        for (auto& [i, v] : row)
          if (!v.is_zero()) r.emplace_back(i, v);
        e.add_row(r);
      }
  std::vector<BilinearForm> out;
  for (auto& v : e.kernel().basis) {
    Matrix g(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) g(a, b) = g(b, a) = v[var(a, b)];
    out.push_back({g});
  }
  return out;
}

}  // namespace liecoh
