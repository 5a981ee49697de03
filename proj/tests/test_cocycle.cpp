#include "liecoh/cocycle.hpp"

#include <gtest/gtest.h>

using namespace liecoh;

namespace {

LieAlgebra su2_cyclic() {
  return LieAlgebra::from_brackets("su2", {"e1", "e2", "e3"}, {{0, 1, 2, 1}, {1, 2, 0, 1}, {0, 2, 1, -1}});
}

}  // namespace

TEST(BuildOmega, Sl2C) {
  auto w = build_omega(build("sl2C"));
  EXPECT_EQ(w.pair.p_dim(), 3u);
  EXPECT_EQ(w.invariant_dim, 1u);
  EXPECT_FALSE(is_zero(w.form.coefficients));
  FormSpace fs(3, 3);
  EXPECT_TRUE(w.form.evaluate({0, 0, 1}, fs).is_zero());
  EXPECT_EQ(w.form.evaluate({1, 0, 2}, fs), -w.form.coefficients[0]);
  for (std::size_t x = 0; x < 3; ++x)
    EXPECT_TRUE(is_zero(lie_derivative(w.pair, unit_vector(3, x), w.form).coefficients));
  // The Killing metric on p is 4 times the unit-curvature metric of H^3.
  ASSERT_TRUE(w.curvature_factor.has_value());
  EXPECT_EQ(*w.curvature_factor, Rational(4));
  EXPECT_EQ(*w.scale_squared, Rational(16));
}

TEST(BuildOmega, SpansInvariantsForEveryComplexEntry) {
  for (auto& desc : list(30)) {
    if (!desc.expects_complex_structure) continue;
    SCOPED_TRACE(desc.name);
    auto w = build_omega(build(desc.name));
    EXPECT_EQ(w.invariant_dim, 1u);
    auto inv = invariant_forms(w.pair, 3);
    EXPECT_TRUE(inv.contains(w.form.coefficients));
  }
}

TEST(BuildOmega, Errors) {
  auto e = build("sl2C");
  auto d = verify_cartan_involution(e.algebra(), e.cartan_involution);
  EXPECT_THROW(build_omega(e.algebra(), Matrix::identity(6), d.k.basis), NotComplexStructure);
  auto J = *complex_structure(e.algebra())->J;
  // p itself is not a compact form: p + Jp = g, but theta is not Cartan
  EXPECT_THROW(build_omega(e.algebra(), J, d.p.basis), NotCartanComplement);
  // too small a k
  EXPECT_THROW(build_omega(e.algebra(), J, {d.k.basis[0]}), NotCartanComplement);
  EXPECT_THROW(build_omega(build("sl2R")), NotComplexStructure);
}

TEST(PhiMap, Su2Killing) {
  auto k = su2_cyclic();
  auto phi = phi_map(k, killing_form(k));
  ASSERT_EQ(phi.coefficients.size(), 1u);
  EXPECT_EQ(phi.coefficients[0], Rational(-2));
  auto zero = phi_map(k, BilinearForm{Matrix(3, 3)});
  EXPECT_TRUE(is_zero(zero.coefficients));
}

TEST(PhiMap, Errors) {
  auto k = su2_cyclic();
  EXPECT_THROW(phi_map(k, BilinearForm{Matrix{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}}), NotSymmetric);
  EXPECT_THROW(phi_map(k, BilinearForm{Matrix{{1, 0, 0}, {0, 2, 0}, {0, 0, 3}}}), NotInvariant);
}

TEST(PhiMap, IsomorphismForCompactSimple) {
  for (auto name : {"su2", "su3", "so5"}) {
    auto k = build(name).algebra();
    auto forms = invariant_symmetric_forms(k);
    ASSERT_EQ(forms.size(), 1u) << name;
    auto phi = phi_map(k, killing_form(k));
    EXPECT_FALSE(is_zero(phi.coefficients));
    EXPECT_FALSE(is_zero(phi_map(k, forms[0]).coefficients));
    auto target = adjoint_invariant_forms(k, 3);
    EXPECT_EQ(target.dim(), 1u) << name;
    EXPECT_TRUE(target.contains(phi.coefficients));
  }
}

TEST(DynkinIndex, Examples) {
  auto su2 = build("su2"), su3 = build("su3"), su4 = build("su4");
  EXPECT_EQ(dynkin_index(matrix_homomorphism(su2, su2, su2.matrices.basis())).index, Rational(1));
  auto a = dynkin_index(su2_embedding(su3, {1, -1, 0}));
  EXPECT_EQ(a.index, Rational(1));
  EXPECT_EQ(a.raw_killing_ratio, Rational(3, 2));
  EXPECT_EQ(a.dual_coxeter_source, 2);
  EXPECT_EQ(a.dual_coxeter_target, 3);
  EXPECT_EQ(dynkin_index(su2_embedding(su3, {2, 0, -2})).index, Rational(4));
  EXPECT_EQ(dynkin_index(su2_embedding(su4, {1, -1, 1, -1})).index, Rational(2));
  EXPECT_EQ(dynkin_index(su2_embedding(su4, {2, 0, -2, 0})).index, Rational(4));
  EXPECT_EQ(dynkin_index(su2_embedding(su4, {1, -1, 0, 0})).index, Rational(1));
}

TEST(DynkinIndex, WeightOracle) {
  auto su3 = build("su3"), su4 = build("su4");
  auto oracle = [](const std::vector<int>& w) {
    long s = 0;
    for (int x : w) s += x * x;
    return Rational(s, 2);
  };
  for (auto w : std::vector<std::vector<int>>{{1, -1, 0}, {2, 0, -2}, {0, 1, -1}})
    EXPECT_EQ(dynkin_index(su2_embedding(su3, w)).index, oracle(w));
  for (auto w : std::vector<std::vector<int>>{{1, -1, 1, -1}, {2, 0, -2, 0}, {1, 0, -1, 0}, {0, 0, 1, -1}})
    EXPECT_EQ(dynkin_index(su2_embedding(su4, w)).index, oracle(w));
}

TEST(DynkinIndex, MultiplicativeUnderComposition) {
  auto su2 = build("su2"), su3 = build("su3"), su4 = build("su4");
  auto f = su2_embedding(su3, {2, 0, -2});
  auto g = block_embedding(su3, su4);
  auto jf = dynkin_index(f).index, jg = dynkin_index(g).index;
  EXPECT_EQ(jg, Rational(1));
  EXPECT_EQ(dynkin_index(compose(g, f)).index, jf * jg);
  auto id = matrix_homomorphism(su2, su2, su2.matrices.basis());
  EXPECT_EQ(dynkin_index(compose(f, id)).index, jf);
}

TEST(DynkinIndex, Errors) {
  auto sl2 = build("sl2R"), su2 = build("su2");
  Homomorphism h{sl2.algebra(), sl2.algebra(), Matrix::identity(3), std::nullopt, std::nullopt};
  EXPECT_THROW(dynkin_index(h), NotCompactSimple);
  Homomorphism zero{su2.algebra(), su2.algebra(), Matrix(3, 3), su2.compact_type, su2.compact_type};
  EXPECT_EQ(dynkin_index(zero).index, Rational(0));
}
