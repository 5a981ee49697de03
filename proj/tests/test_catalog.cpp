#include "liecoh/cartan.hpp"
#include "liecoh/catalog.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace liecoh;

TEST(Catalog, BuildExamples) {
  auto su2 = build("su2");
  EXPECT_EQ(su2.algebra().dim(), 3u);
  EXPECT_EQ(killing_form(su2.algebra()).gram, Matrix::identity(3) * Rational(-2));
  auto sl2c = build("sl2C");
  EXPECT_EQ(sl2c.algebra().dim(), 6u);
  EXPECT_EQ(centroid(sl2c.algebra()).dim(), 2u);
  auto su21 = build("su21");
  EXPECT_EQ(su21.algebra().dim(), 8u);
  EXPECT_EQ(killing_signature(su21.algebra()), (Inertia{4, 4, 0}));
}

TEST(Catalog, Errors) {
  EXPECT_THROW(build("g2"), UnknownFamily);
  EXPECT_THROW(build("sl1R"), std::invalid_argument);
  EXPECT_THROW(build("so55", 30), RankOutOfBounds);
  EXPECT_THROW(build("sl9C"), RankOutOfBounds);
}

TEST(Catalog, ListIsOrderedAndBounded) {
  auto l = list();
  auto has = [&](const std::string& n) {
    return std::any_of(l.begin(), l.end(), [&](auto& d) { return d.name == n; });
  };
  EXPECT_TRUE(has("sl2C"));
  EXPECT_TRUE(has("su21"));
  for (std::size_t i = 1; i < l.size(); ++i) EXPECT_LE(l[i - 1].dim, l[i].dim);
  for (auto& d : list(10)) EXPECT_LE(d.dim, 10u);
  EXPECT_TRUE(list(0).empty());
}

TEST(Catalog, RealDimensions) {
  EXPECT_EQ(catalog_dimension("sl4C"), 30u);
  EXPECT_EQ(catalog_dimension("so5C"), 20u);
  EXPECT_EQ(catalog_dimension("su33"), 35u);
  EXPECT_EQ(catalog_dimension("sl5R"), 24u);
  EXPECT_EQ(catalog_dimension("so55"), 45u);
  EXPECT_EQ(catalog_dimension("sp4R"), 10u);
}

TEST(CatalogProperty, EveryEntryIsConsistent) {
  for (auto& desc : list(30)) {
    SCOPED_TRACE(desc.name);
    auto e = build(desc.name);
    const LieAlgebra& g = e.algebra();
    EXPECT_EQ(g.dim(), desc.dim);
    // theta is an automorphism and a Cartan involution
    EXPECT_NO_THROW(verify_cartan_involution(g, e.cartan_involution));
    const Matrix& t = e.cartan_involution;
    for (std::size_t i = 0; i < g.dim(); ++i)
      for (std::size_t j = i + 1; j < g.dim(); ++j)
        EXPECT_EQ(t.apply(g.bracket(unit_vector(g.dim(), i), unit_vector(g.dim(), j))),
                  g.bracket(t.column(i), t.column(j)));
    auto cs = complex_structure(g);
    EXPECT_EQ(cs.has_value(), e.expects_complex_structure);
    if (cs) EXPECT_TRUE(cs->J.has_value());
  }
}

TEST(Su2Embedding, Examples) {
  auto su2 = build("su2"), su3 = build("su3");
  auto id = su2_embedding(su2, {1, -1});
  EXPECT_EQ(id.matrix, Matrix::identity(3));
  auto block = su2_embedding(su3, {1, -1, 0});
  EXPECT_EQ(rank(block.matrix), 3u);
  EXPECT_EQ(block.matrix, block_embedding(su2, su3).matrix);
  auto irred = su2_embedding(su3, {2, 0, -2});
  EXPECT_EQ(rank(irred.matrix), 3u);
  EXPECT_TRUE(su3.algebra().is_homomorphism_from(su2.algebra(), irred.matrix));
  EXPECT_THROW(su2_embedding(su3, {1, 1, 0}), WeightsNotSymmetric);
  EXPECT_THROW(su2_embedding(su3, {1, -1}), SizeMismatch);
}

TEST(Homomorphism, Composition) {
  auto su2 = build("su2"), su3 = build("su3"), su4 = build("su4");
  auto f = block_embedding(su2, su3);
  auto g = block_embedding(su3, su4);
  auto h = compose(g, f);
  EXPECT_TRUE(su4.algebra().is_homomorphism_from(su2.algebra(), h.matrix));
  EXPECT_EQ(h.matrix, block_embedding(su2, su4).matrix);
}
