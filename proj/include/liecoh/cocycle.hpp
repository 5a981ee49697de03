#pragma once

// Explicit cocycles: the 3-form B(X, J[Y, Z]) on Jk, the map B -> B(X, [Y, Z]),
// and Dynkin indices of homomorphisms between compact simple algebras.

#include "liecoh/cartan.hpp"
#include "liecoh/catalog.hpp"
#include "liecoh/cohomology.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace liecoh {

struct NotComplexStructure : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotCartanComplement : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotInvariant : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotSymmetric : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotCompactSimple : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct InconsistentRatio : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonIntegerIndex : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// J^2 = -id and J[X, Y] = [X, JY] for all basis X, Y.
inline bool is_complex_structure(const LieAlgebra& g, const Endomorphism& J) {
  const std::size_t n = g.dim();
  if (J.rows() != n || J.cols() != n) return false;
  if (!(J * J == -Matrix::identity(n))) return false;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix ad = g.ad(i);
    if (!(J * ad == ad * J)) return false;
  }
  return true;
}

struct OmegaForm {
  AlternatingForm form;  // degree 3 on p = Jk, over pair.p_basis
  ReductivePair pair;    // (g, k) with p = Jk
  Endomorphism J;
  std::size_t invariant_dim = 0;  // dim (Λ^3 p*)^k
  /// Only for dim p = 3 (constant curvature): B_g restricted to p equals
  /// curvature_factor times the unit-curvature metric, and
  /// omega = scale * (unit-curvature volume form), oriented by the p basis.
  std::optional<Rational> curvature_factor, scale_squared;
  std::optional<double> scale;
};

/// omega(X, Y, Z) = B_g(X, J[Y, Z]) on p = Jk, with all invariants checked.
inline OmegaForm build_omega(const LieAlgebra& g, const Endomorphism& J, const std::vector<Vector>& k_basis) {
  const std::size_t n = g.dim();
  if (!is_complex_structure(g, J)) throw NotComplexStructure("J is not a complex structure on " + g.name());
  std::vector<Vector> p_basis;
  for (auto& x : k_basis) p_basis.push_back(J.apply(x));
  std::vector<Vector> all = k_basis;
  all.insert(all.end(), p_basis.begin(), p_basis.end());
  if (all.size() != n || rank(Matrix::from_columns(n, all)) != n)
    throw NotCartanComplement("k + Jk is not all of " + g.name());

  Matrix theta_adapted(n, n);
  for (std::size_t a = 0; a < n; ++a) theta_adapted(a, a) = a < k_basis.size() ? 1 : -1;
  Matrix basis = Matrix::from_columns(n, all);
  Matrix theta = basis * theta_adapted * inverse(basis);
  try {
    verify_cartan_involution(g, theta);
  } catch (const std::exception& e) {
    throw NotCartanComplement(std::string("k + Jk is not a Cartan decomposition: ") + e.what());
  }

  OmegaForm out;
  out.J = J;
  out.pair = make_pair(g, k_basis, p_basis, "(" + g.name() + ", k)");
  const BilinearForm B = killing_form(g);
  const std::size_t pd = p_basis.size();
  auto value = [&](std::size_t a, std::size_t b, std::size_t c) {
    return B(p_basis[a], J.apply(g.bracket(p_basis[b], p_basis[c])));
  };
  FormSpace fs(pd, 3);
  out.form = {pd, 3, Vector(fs.size())};
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const auto& t = fs.tuple(i);
    out.form.coefficients[i] = value(t[0], t[1], t[2]);
  }
  if (is_zero(out.form.coefficients)) throw std::logic_error("build_omega: omega vanishes");
  for (std::size_t a = 0; a < pd; ++a)
    for (std::size_t b = 0; b < pd; ++b)
      for (std::size_t c = 0; c < pd; ++c) {
        Rational v = value(a, b, c);
        if (v != out.form.evaluate({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b),
                                    static_cast<std::uint32_t>(c)}, fs))
          throw std::logic_error("build_omega: omega is not alternating");
      }
  for (std::size_t x = 0; x < k_basis.size(); ++x)
    if (!is_zero(lie_derivative(out.pair, unit_vector(k_basis.size(), x), out.form).coefficients))
      throw std::logic_error("build_omega: omega is not k-invariant");
  if (!is_zero(apply_differential(out.pair, 3, out.form.coefficients)))
    throw std::logic_error("build_omega: d omega != 0");
  out.invariant_dim = invariant_forms(out.pair, 3).dim();

  if (pd == 3) {
    // Sectional curvature of B on p is B([X,Y],[X,Y]) / |X ^ Y|^2.
    const auto &x = p_basis[0], &y = p_basis[1];
    Rational area = B(x, x) * B(y, y) - B(x, y) * B(x, y);
    Vector xy = g.bracket(x, y);
    out.curvature_factor = -area / B(xy, xy);
    Matrix gram(pd, pd);
    for (std::size_t a = 0; a < pd; ++a)
      for (std::size_t b = 0; b < pd; ++b) gram(a, b) = B(p_basis[a], p_basis[b]);
    Rational det = gram(0, 0) * (gram(1, 1) * gram(2, 2) - gram(1, 2) * gram(2, 1)) -
                   gram(0, 1) * (gram(1, 0) * gram(2, 2) - gram(1, 2) * gram(2, 0)) +
                   gram(0, 2) * (gram(1, 0) * gram(2, 1) - gram(1, 1) * gram(2, 0));
    const Rational& w = out.form.coefficients[0];
    const Rational& k = *out.curvature_factor;
    out.scale_squared = w * w * k * k * k / det;
    out.scale = std::copysign(std::sqrt(out.scale_squared->to_double()), w.to_double());
  }
  return out;
}

/// Omega for a catalog entry with a rational complex structure, using the
/// compact form fixed by the catalog's Cartan involution.
inline OmegaForm build_omega(const CatalogEntry& e) {
  const LieAlgebra& g = e.algebra();
  auto cs = complex_structure(g);
  if (!cs || !cs->J) throw NotComplexStructure(g.name() + " has no rational complex structure");
  auto d = verify_cartan_involution(g, e.cartan_involution);
  return build_omega(g, *cs->J, d.k.basis);
}

/// Phi_B(X, Y, Z) = B(X, [Y, Z]) as a 3-form on k.
inline AlternatingForm phi_map(const LieAlgebra& k, const BilinearForm& B) {
  const std::size_t n = k.dim();
  if (B.gram.rows() != n || B.gram.cols() != n) throw DimensionMismatch("phi_map: form size");
  if (!B.is_symmetric()) throw NotSymmetric("phi_map: form is not symmetric");
  for (std::size_t x = 0; x < n; ++x) {
    Matrix ad = k.ad(x);
    Matrix s = ad.transpose() * B.gram + B.gram * ad;
    if (!(s == Matrix(n, n))) throw NotInvariant("phi_map: form is not invariant");
  }
  FormSpace fs(n, std::min<std::size_t>(3, n));
  AlternatingForm out{n, 3, {}};
  if (n < 3) return out;
  out.coefficients.resize(fs.size());
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const auto& t = fs.tuple(i);
    out.coefficients[i] = B(unit_vector(n, t[0]), k.bracket(unit_vector(n, t[1]), unit_vector(n, t[2])));
  }
  return out;
}

struct DynkinIndexResult {
  Rational raw_killing_ratio;
  int dual_coxeter_source = 0, dual_coxeter_target = 0;
  Rational index;
};

/// j = c * h(source) / h(target) where phi^* B_target = c * B_source on Killing forms.
inline DynkinIndexResult dynkin_index(const Homomorphism& phi) {
  if (!phi.source_type || !phi.target_type)
    throw NotCompactSimple("dynkin_index: source and target must be compact simple catalog algebras");
  for (const LieAlgebra* a : {&phi.source, &phi.target})
    if (killing_signature(*a) != Inertia{0, a->dim(), 0})
      throw NotCompactSimple("dynkin_index: '" + a->name() + "' is not compact semisimple");
  if (!phi.target.is_homomorphism_from(phi.source, phi.matrix))
    throw std::invalid_argument("dynkin_index: map is not a homomorphism");
  Matrix bs = killing_form(phi.source).gram;
  Matrix pulled = phi.matrix.transpose() * killing_form(phi.target).gram * phi.matrix;
  Rational c;
  bool found = false;
  for (std::size_t i = 0; i < bs.rows() && !found; ++i)
    for (std::size_t j = 0; j < bs.cols() && !found; ++j)
      if (!bs(i, j).is_zero()) {
        c = pulled(i, j) / bs(i, j);
        found = true;
      }
  if (!(pulled == bs * c)) throw InconsistentRatio("dynkin_index: pulled-back form is not proportional to B_source");
  DynkinIndexResult r{c, dual_coxeter_number(*phi.source_type), dual_coxeter_number(*phi.target_type), {}};
  r.index = c * Rational(r.dual_coxeter_source) / Rational(r.dual_coxeter_target);
  if (!r.index.is_integer() || r.index.sign() < 0)
    throw NonIntegerIndex("dynkin_index: " + r.index.str() + " is not a non-negative integer");
  return r;
}

}  // namespace liecoh
