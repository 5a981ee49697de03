#include "liecoh/catalog.hpp"
#include "liecoh/cartan.hpp"
#include "liecoh/lie_algebra.hpp"

#include <gtest/gtest.h>

using namespace liecoh;

namespace {

LieAlgebra su2_cyclic() {
  return LieAlgebra::from_brackets("su2", {"e1", "e2", "e3"}, {{0, 1, 2, 1}, {1, 2, 0, 1}, {0, 2, 1, -1}});
}

LieAlgebra sl2_hef() {
  return LieAlgebra::from_brackets("sl2", {"H", "E", "F"}, {{0, 1, 1, 2}, {0, 2, 2, -2}, {1, 2, 0, 1}});
}

// Killing form from explicit ad matrices built straight from the tensor.
Matrix killing_oracle(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<Matrix> ad(n, Matrix(n, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) ad[i](k, j) = g.c(i, j, k);
  Matrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b(i, j) = (ad[i] * ad[j]).trace();
  return b;
}

}  // namespace

TEST(MakeLieAlgebra, ValidatesJacobiAndAntisymmetry) {
  EXPECT_NO_THROW(su2_cyclic());
  std::vector<Rational> c(27);
  c[(1 * 3 + 2) * 3 + 1] = 1;
  c[(2 * 3 + 1) * 3 + 1] = 1;
  EXPECT_THROW(LieAlgebra::from_tensor("bad", {"a", "b", "c"}, c), AntisymmetryViolation);
  EXPECT_NO_THROW(LieAlgebra::from_tensor("ab", {"a", "b"}, std::vector<Rational>(8)));
  // [a,b] = b, [a,c] = a, [b,c] = 0 fails Jacobi
  try {
    LieAlgebra::from_brackets("bad", {"a", "b", "c"}, {{0, 1, 1, 1}, {0, 2, 0, 1}});
    FAIL() << "expected JacobiViolation";
  } catch (const JacobiViolation& e) {
    EXPECT_EQ(e.i, 0u);
    EXPECT_EQ(e.j, 1u);
    EXPECT_EQ(e.k, 2u);
  }
}

TEST(KillingForm, Examples) {
  EXPECT_EQ(killing_form(su2_cyclic()).gram, Matrix::identity(3) * Rational(-2));
  EXPECT_EQ(killing_form(su2_cyclic()).gram, killing_oracle(su2_cyclic()));
  Matrix b = killing_form(sl2_hef()).gram;
  EXPECT_EQ(b, (Matrix{{8, 0, 0}, {0, 0, 4}, {0, 4, 0}}));
  EXPECT_EQ(b, killing_oracle(sl2_hef()));
  auto ab = LieAlgebra::from_tensor("ab", {"a", "b"}, std::vector<Rational>(8));
  EXPECT_TRUE(killing_form(ab).gram.is_zero());
}

TEST(KillingSignature, Examples) {
  EXPECT_EQ(killing_signature(su2_cyclic()), (Inertia{0, 3, 0}));
  EXPECT_EQ(killing_signature(sl2_hef()), (Inertia{2, 1, 0}));
  EXPECT_EQ(inertia(Matrix{{0, 1}, {1, 0}}), (Inertia{1, 1, 0}));
  EXPECT_EQ(inertia(Matrix{{1, 2}, {2, 4}}), (Inertia{1, 0, 1}));
}

TEST(CenterDerived, Examples) {
  EXPECT_EQ(center(su2_cyclic()).dim(), 0u);
  EXPECT_EQ(derived_subalgebra(su2_cyclic()).dim(), 3u);
  auto ab = LieAlgebra::from_tensor("ab", {"a", "b"}, std::vector<Rational>(8));
  EXPECT_EQ(center(ab).dim(), 2u);
  EXPECT_EQ(derived_subalgebra(ab).dim(), 0u);
  auto e = build("su11");
  auto d = verify_cartan_involution(e.algebra(), e.cartan_involution);
  EXPECT_EQ(center(d.k_algebra).dim(), 1u);
}

TEST(Centroid, Examples) {
  EXPECT_EQ(centroid(sl2_hef()).dim(), 1u);
  auto sl2c = build("sl2C").algebra();
  auto rep = structure_analysis(sl2c);
  EXPECT_EQ(rep.centroid_dim, 2u);
  EXPECT_EQ(rep.kind, StructureKind::simple_complex);
  auto cs = complex_structure(sl2c, rep);
  ASSERT_TRUE(cs.has_value());
  EXPECT_TRUE(cs->minimal_polynomial.has_negative_discriminant());
  auto sum = direct_sum(su2_cyclic(), su2_cyclic(), "su2+su2");
  auto srep = structure_analysis(sum);
  EXPECT_EQ(srep.centroid_dim, 2u);
  EXPECT_EQ(srep.kind, StructureKind::semisimple_split);
  ASSERT_EQ(srep.ideals.size(), 2u);
}

TEST(ComplexStructure, CatalogJ) {
  auto g = build("sl2C").algebra();
  auto cs = complex_structure(g);
  ASSERT_TRUE(cs && cs->J);
  const Matrix& J = *cs->J;
  EXPECT_EQ(J * J, -Matrix::identity(6));
  // interleaved (X, iX): J is block multiplication by i up to sign
  for (std::size_t a = 0; a < 3; ++a) {
    Rational s = J(2 * a + 1, 2 * a);
    EXPECT_TRUE(s == Rational(1) || s == Rational(-1));
    EXPECT_EQ(J(2 * a, 2 * a + 1), -s);
  }
  EXPECT_FALSE(complex_structure(build("su3").algebra()).has_value());
  EXPECT_THROW(complex_structure(direct_sum(su2_cyclic(), su2_cyclic())), NotSimple);
}

TEST(StructureAnalysis, Kinds) {
  EXPECT_EQ(structure_analysis(su2_cyclic()).kind, StructureKind::simple_real);
  auto ab = LieAlgebra::from_tensor("ab", {"a", "b"}, std::vector<Rational>(8));
  EXPECT_EQ(structure_analysis(ab).kind, StructureKind::abelian);
  // Heisenberg algebra
  auto heis = LieAlgebra::from_brackets("heis", {"x", "y", "z"}, {{0, 1, 2, 1}});
  EXPECT_EQ(structure_analysis(heis).kind, StructureKind::not_semisimple);
}

TEST(Commutant, Examples) {
  {
    auto e = build("sl2C");
    auto d = verify_cartan_involution(e.algebra(), e.cartan_involution);
    auto c = commutant(d.p.dim(), restricted_action(e.algebra(), d.k.basis, d.p));
    EXPECT_EQ(c.dim(), 1u);
    EXPECT_TRUE(c.irreducible);
  }
  {
    auto e = build("sl2R");
    auto d = verify_cartan_involution(e.algebra(), e.cartan_involution);
    auto c = commutant(d.p.dim(), restricted_action(e.algebra(), d.k.basis, d.p));
    EXPECT_EQ(c.dim(), 2u);
    EXPECT_TRUE(c.irreducible);
  }
  {
    // su(2) acting on su(2) + su(2) diagonally is reducible
    auto g = direct_sum(su2_cyclic(), su2_cyclic());
    std::vector<Vector> diag;
    for (std::size_t a = 0; a < 3; ++a) {
      Vector v(6);
      v[a] = 1;
      v[a + 3] = 1;
      diag.push_back(v);
    }
    auto c = commutant(6, restricted_action(g, diag, full_space(6)));
    EXPECT_EQ(c.dim(), 4u);
    EXPECT_FALSE(c.irreducible);
  }
}

TEST(LieCoreProperty, CatalogInvariants) {
  for (auto& desc : list(30)) {
    SCOPED_TRACE(desc.name);
    auto g = build(desc.name).algebra();
    const std::size_t n = g.dim();
    Matrix b = killing_form(g).gram;
    EXPECT_EQ(b, b.transpose());
    for (std::size_t x = 0; x < n; ++x) {
      Matrix ad = g.ad(x);
      EXPECT_TRUE((ad.transpose() * b + b * ad).is_zero());
    }
    auto rep = structure_analysis(g);
    ASSERT_TRUE(rep.kind == StructureKind::simple_real || rep.kind == StructureKind::simple_complex);
    for (auto& t : rep.centroid.basis)
      for (std::size_t x = 0; x < n; ++x) EXPECT_EQ(t * g.ad(x), g.ad(x) * t);
    if (auto cs = complex_structure(g, rep); cs && cs->J) {
      EXPECT_EQ(*cs->J * *cs->J, -Matrix::identity(n));
      for (std::size_t x = 0; x < n; ++x) EXPECT_EQ(*cs->J * g.ad(x), g.ad(x) * *cs->J);
    }
    for (std::size_t x = 0; x < n; x += 3) EXPECT_EQ(generated_ideal(g, {unit_vector(n, x)}).dim(), n);
  }
}

TEST(LieCoreProperty, CompactSignature) {
  for (auto name : {"su2", "su3", "su4", "so5", "usp4"}) {
    auto g = build(name).algebra();
    EXPECT_EQ(killing_signature(g), (Inertia{0, g.dim(), 0})) << name;
  }
}

TEST(LieCoreProperty, SplitIdealsBracketCorrectly) {
  auto su3 = build("su3").algebra();
  auto g = direct_sum(su2_cyclic(), su3, "su2+su3");
  auto rep = structure_analysis(g);
  ASSERT_EQ(rep.kind, StructureKind::semisimple_split);
  std::size_t total = 0;
  for (auto& i : rep.ideals) total += i.span.dim();
  EXPECT_EQ(total, g.dim());
  for (std::size_t a = 0; a < rep.ideals.size(); ++a)
    for (std::size_t b = 0; b < rep.ideals.size(); ++b)
      for (auto& x : rep.ideals[a].span.basis)
        for (auto& y : rep.ideals[b].span.basis) {
          Vector z = g.bracket(x, y);
          if (a == b) EXPECT_TRUE(rep.ideals[a].span.contains(z));
          else EXPECT_TRUE(is_zero(z));
        }
}
