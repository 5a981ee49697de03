#pragma once

// Cartan involutions, k + p splittings and compact duals.

#include "liecoh/lie_algebra.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace liecoh {

struct NotInvolutive : std::invalid_argument {
  NotInvolutive() : std::invalid_argument("theta^2 != id") {}
};
struct NotAutomorphism : std::invalid_argument {
  NotAutomorphism(std::size_t i_, std::size_t j_)
      : std::invalid_argument("theta does not preserve [e_" + std::to_string(i_) + ", e_" + std::to_string(j_) + "]"),
        i(i_), j(j_) {}
  std::size_t i, j;
};
struct BThetaNotPositiveDefinite : std::invalid_argument {
  BThetaNotPositiveDefinite() : std::invalid_argument("-B(X, theta Y) is not positive definite") {}
};
struct EigenspaceDimMismatch : std::invalid_argument {
  EigenspaceDimMismatch() : std::invalid_argument("eigenspaces of theta do not span the algebra") {}
};
struct CompactInput : std::invalid_argument {
  CompactInput() : std::invalid_argument("p = 0: the algebra is compact") {}
};

struct CartanDecomposition {
  LieAlgebra algebra;
  Endomorphism theta;
  Subspace k, p;
  LieAlgebra k_algebra;
  Subspace z_k;  // center of k, in algebra coordinates
  Subspace m;    // [k, k], in algebra coordinates

  std::size_t z_k_dim() const { return z_k.dim(); }
};

inline CartanDecomposition verify_cartan_involution(const LieAlgebra& g, const Endomorphism& theta) {
  const std::size_t n = g.dim();
  if (theta.rows() != n || theta.cols() != n) throw DimensionMismatch("theta must be dim x dim");
  const Matrix id = Matrix::identity(n);
  if (!(theta * theta == id)) throw NotInvolutive();
  std::vector<Vector> img;
  for (std::size_t i = 0; i < n; ++i) img.push_back(theta.column(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector lhs(n);
      for (auto& [k, v] : g.bracket_basis(i, j)) axpy(lhs, v, img[k]);
      if (lhs != g.bracket(img[i], img[j])) throw NotAutomorphism(i, j);
    }

  CartanDecomposition d;
  d.algebra = g;
  d.theta = theta;
  d.k = kernel_subspace(theta - id);
  d.p = kernel_subspace(theta + id);
  if (d.k.dim() + d.p.dim() != n) throw EigenspaceDimMismatch();

  Matrix b_theta = -(killing_form(g).gram * theta);
  if (!(b_theta == b_theta.transpose()) || inertia(b_theta) != Inertia{n, 0, 0}) throw BThetaNotPositiveDefinite();

  auto in = [&](const Subspace& s, const Vector& v) { return s.contains(v); };
  for (auto& x : d.k.basis) {
    for (auto& y : d.k.basis)
      if (!in(d.k, g.bracket(x, y))) throw std::logic_error("[k,k] not in k");
    for (auto& y : d.p.basis)
      if (!in(d.p, g.bracket(x, y))) throw std::logic_error("[k,p] not in p");
  }
  for (auto& x : d.p.basis)
    for (auto& y : d.p.basis)
      if (!in(d.k, g.bracket(x, y))) throw std::logic_error("[p,p] not in k");

  d.k_algebra = subalgebra(g, d.k, "k");
  auto lift = [&](const Subspace& local) {
    std::vector<Vector> v;
    for (auto& b : local.basis) v.push_back(d.k.combine(b));
    return span_of(n, v);
  };
  d.z_k = lift(center(d.k_algebra));
  d.m = lift(derived_subalgebra(d.k_algebra));
  return d;
}

/// Negate the p x p -> k block of an algebra whose basis is (k basis, p basis).
inline LieAlgebra flip_symmetric_pair(const LieAlgebra& g, std::size_t k_dim, std::string name) {
  std::vector<BracketEntry> e;
  for (std::size_t a = 0; a < g.dim(); ++a)
    for (std::size_t b = a + 1; b < g.dim(); ++b)
      for (auto& [c, v] : g.bracket_basis(a, b)) {
        bool pp = a >= k_dim && b >= k_dim;
        e.push_back({a, b, c, pp ? -v : v});
      }
  return LieAlgebra::from_brackets(std::move(name), g.labels(), e);
}

/// g rewritten in the adapted basis (k basis, then p basis).
inline LieAlgebra adapted_algebra(const CartanDecomposition& d) {
  const LieAlgebra& g = d.algebra;
  std::vector<Vector> family = d.k.basis;
  family.insert(family.end(), d.p.basis.begin(), d.p.basis.end());
  CoordinateSolver solver(g.dim(), family);
  auto label_of = [&](const Vector& v, const std::string& fallback) {
    std::size_t nz = 0, last = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) { ++nz; last = i; }
    return nz == 1 && v[last] == Rational(1) ? g.labels()[last] : fallback;
  };
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < d.k.dim(); ++a) labels.push_back(label_of(d.k.basis[a], "k" + std::to_string(a)));
  for (std::size_t a = 0; a < d.p.dim(); ++a) labels.push_back(label_of(d.p.basis[a], "p" + std::to_string(a)));
  std::vector<BracketEntry> e;
  for (std::size_t a = 0; a < family.size(); ++a)
    for (std::size_t b = a + 1; b < family.size(); ++b) {
      auto c = solver.solve(g.bracket(family[a], family[b]));
      for (std::size_t k = 0; k < c->size(); ++k)
        if (!(*c)[k].is_zero()) e.push_back({a, b, k, (*c)[k]});
    }
  return LieAlgebra::from_brackets(g.name(), labels, e);
}

struct CompactDual {
  LieAlgebra algebra;  // basis: k basis, then i*p basis
  std::size_t k_dim = 0;
};

inline CompactDual compact_dual(const CartanDecomposition& d) {
  LieAlgebra adapted = adapted_algebra(d);
  LieAlgebra dual = flip_symmetric_pair(adapted, d.k.dim(), d.algebra.name() + "_u");
  std::vector<std::string> labels = dual.labels();
  for (std::size_t a = d.k.dim(); a < labels.size(); ++a) labels[a] = "i" + labels[a];
  std::vector<BracketEntry> e;
  for (std::size_t a = 0; a < dual.dim(); ++a)
    for (std::size_t b = a + 1; b < dual.dim(); ++b)
      for (auto& [c, v] : dual.bracket_basis(a, b)) e.push_back({a, b, c, v});
  CompactDual cd{LieAlgebra::from_brackets(dual.name(), labels, e), d.k.dim()};
  if (killing_signature(cd.algebra) != Inertia{0, cd.algebra.dim(), 0})
    throw std::logic_error("compact dual has an indefinite Killing form");
  return cd;
}

enum class KClass { k_abelian, hermitian, k_semisimple };

inline const char* to_string(KClass k) {
  switch (k) {
    case KClass::k_abelian: return "k_abelian";
    case KClass::hermitian: return "hermitian";
    case KClass::k_semisimple: return "k_semisimple";
  }
  return "?";
}

struct KClassification {
  KClass kind;
  std::size_t z_dim = 0, m_dim = 0, p_dim = 0;
};

inline KClassification classify_k(const CartanDecomposition& d) {
  if (d.p.dim() == 0) throw CompactInput();
  KClassification c{KClass::k_semisimple, d.z_k_dim(), d.m.dim(), d.p.dim()};
  if (d.k_algebra.is_abelian()) c.kind = KClass::k_abelian;
  else if (c.z_dim == 1) c.kind = KClass::hermitian;
  else if (c.z_dim != 0)
    throw std::runtime_error("classify_k: center of k has dimension " + std::to_string(c.z_dim) +
                             "; expected 0 or 1 for a simple algebra");
  return c;
}

}  // namespace liecoh
