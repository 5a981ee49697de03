#include "liecoh/geodesic.hpp"

#include <gtest/gtest.h>

#include <numbers>

using namespace liecoh;

namespace {

// Volume of a geodesic tetrahedron in the Klein model: a Euclidean
// tetrahedron with density (1 - |y|^2)^-2, integrated after a Duffy
// transform with its own Gauss-Legendre product rule.
double klein_volume(const std::vector<Point>& v, int n) {
  std::array<std::array<double, 3>, 4> y;
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 3; ++k) y[i][k] = v[i].x[k + 1] / v[i].x[0];
  double e[3][3];
  for (int a = 0; a < 3; ++a)
    for (int k = 0; k < 3; ++k) e[a][k] = y[a + 1][k] - y[0][k];
  double det = e[0][0] * (e[1][1] * e[2][2] - e[1][2] * e[2][1]) - e[0][1] * (e[1][0] * e[2][2] - e[1][2] * e[2][0]) +
               e[0][2] * (e[1][0] * e[2][1] - e[1][1] * e[2][0]);
  auto q = gauss_legendre(n);
  double s = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        double u = q.nodes[a], w = q.nodes[b], z = q.nodes[c];
        double l1 = u, l2 = (1 - u) * w, l3 = (1 - u) * (1 - w) * z;
        double jac = (1 - u) * (1 - u) * (1 - w);
        double r2 = 0;
        for (int k = 0; k < 3; ++k) {
          double p = y[0][k] + l1 * e[0][k] + l2 * e[1][k] + l3 * e[2][k];
          r2 += p * p;
        }
        s += q.weights[a] * q.weights[b] * q.weights[c] * jac / ((1 - r2) * (1 - r2));
      }
  return s * det;
}

std::vector<GroupElement> random_tuple(Rng& rng, int n) {
  std::vector<GroupElement> g;
  for (int i = 0; i < n; ++i) g.push_back(random_element(rng));
  return g;
}

double on_hyperboloid(const Point& p) { return std::abs(minkowski(p.x, p.x) + 1); }

}  // namespace

TEST(Geodesic, Endpoints) {
  Rng rng(3);
  for (int i = 0; i < 10; ++i) {
    Point x = random_element(rng).point(), y = random_element(rng).point();
    EXPECT_LT(distance(geodesic(x, y, 0), x), 1e-12);
    EXPECT_LT(distance(geodesic(x, y, 1), y), 1e-12);
    EXPECT_LT(distance(geodesic(x, x, 0.3), x), 1e-12);
    Point m = geodesic(x, y, 0.25);
    EXPECT_LT(on_hyperboloid(m), 1e-12);
    EXPECT_NEAR(distance(x, m), 0.25 * distance(x, y), 1e-12);
  }
  Point far = translation(2).point();
  EXPECT_NEAR(distance(origin(), far), 2, 1e-14);
  EXPECT_NEAR(distance(origin(), geodesic(origin(), far, 0.5)), 1, 1e-14);
}

TEST(Geodesic, NearbyPoints) {
  // chords below the series threshold stay accurate
  for (double d : {1e-3, 1e-5, 1e-8}) {
    Point y = translation(d).point();
    EXPECT_NEAR(distance(origin(), geodesic(origin(), y, 0.5)), d / 2, 1e-15);
  }
}

TEST(GroupElement, ActionIsIsometric) {
  Rng rng(5);
  for (int i = 0; i < 10; ++i) {
    auto g = random_element(rng), h = random_element(rng);
    Point x = random_element(rng).point(), y = random_element(rng).point();
    EXPECT_NEAR(distance(g.act(x), g.act(y)), distance(x, y), 1e-11);
    EXPECT_LT(distance((g * h).point(), g.act(h.point())), 1e-11);
    EXPECT_LE(distance(origin(), g.point()), 2 * std::log(2.0) + 1e-12);
    EXPECT_LT(distance(random_rotation(rng).point(), origin()), 1e-12);
  }
  EXPECT_THROW(GroupElement(2.0, 0.0, 0.0, 2.0), std::invalid_argument);
}

TEST(SimplexMap, Examples) {
  Rng rng(11);
  GeodesicSimplex s;
  for (int i = 0; i < 4; ++i) s.vertices.push_back(random_element(rng).point());
  std::vector<double> last = {0, 0, 0, 1};
  EXPECT_LT(distance(simplex_map(s, last), s.vertices[3]), 1e-12);
  std::vector<double> first = {1, 0, 0, 0};
  EXPECT_LT(distance(simplex_map(s, first), s.vertices[0]), 1e-12);
  GeodesicSimplex edge{{s.vertices[0], s.vertices[1]}};
  std::vector<double> w = {0.7, 0.3};
  EXPECT_LT(distance(simplex_map(edge, w), geodesic(s.vertices[0], s.vertices[1], 0.3)), 1e-12);
  // barycentric weights of a triangle stay inside the triangle's plane
  GeodesicSimplex tri{{s.vertices[0], s.vertices[1], s.vertices[2]}};
  std::vector<double> third = {1.0 / 3, 1.0 / 3, 1.0 / 3};
  Point c = simplex_map(tri, third);
  EXPECT_LT(on_hyperboloid(c), 1e-12);
  double plane = detail::det4({s.vertices[0].x, s.vertices[1].x, s.vertices[2].x, c.x});
  EXPECT_LT(std::abs(plane), 1e-10);
  EXPECT_THROW(simplex_map(tri, std::vector<double>{1, 0}), std::invalid_argument);
}

TEST(GaussLegendre, IntegratesPolynomials) {
  for (int n : {1, 2, 5, 12, 20}) {
    auto q = gauss_legendre(n);
    for (int p = 0; p < 2 * n; ++p) {
      double s = 0;
      for (int i = 0; i < n; ++i) s += q.weights[i] * std::pow(q.nodes[i], p);
      EXPECT_NEAR(s, 1.0 / (p + 1), 1e-13) << n << " " << p;
    }
  }
  EXPECT_THROW(gauss_legendre(0), std::invalid_argument);
}

TEST(Cocycle, DegenerateSimplexVanishes) {
  Rng rng(1);
  auto g = random_tuple(rng, 3);
  std::vector<GroupElement> d = {g[0], g[1], g[0], g[2]};
  EXPECT_LT(std::abs(cocycle_value(d, 1, 16)), 1e-10);
  std::vector<GroupElement> same = {g[0], g[0], g[0], g[0]};
  EXPECT_EQ(cocycle_value(same, 1, 8), 0.0);
}

TEST(Cocycle, AlternatesUnderSwaps) {
  Rng rng(2);
  auto g = random_tuple(rng, 4);
  double v = cocycle_value(g, 1, 20);
  for (int i = 0; i < 3; ++i) {
    auto h = g;
    std::swap(h[i], h[i + 1]);
    EXPECT_NEAR(cocycle_value(h, 1, 20), -v, 1e-10);
  }
  EXPECT_NEAR(cocycle_value(g, -2.5, 20), -2.5 * v, 1e-12);
}

TEST(Cocycle, QuadratureConverges) {
  Rng rng(7);
  auto g = random_tuple(rng, 4);
  EXPECT_LT(std::abs(cocycle_value(g, 1, 24) - cocycle_value(g, 1, 16)), 1e-10);
}

TEST(Cocycle, MatchesKleinModelOracle) {
  Rng rng(0);
  for (int i = 0; i < 8; ++i) {
    auto g = random_tuple(rng, 4);
    std::vector<Point> pts;
    for (auto& x : g) pts.push_back(x.point());
    EXPECT_NEAR(cocycle_value(g, 1, 20), klein_volume(pts, 40), 1e-11);
  }
}

TEST(Cocycle, RegularIdealLimit) {
  // the regular ideal tetrahedron has volume 1.01494...; large regular
  // tetrahedra approach it from below
  const double pi = std::numbers::pi;
  double c = std::acos(-1.0 / 3);
  double d = 12;
  std::array<std::array<double, 3>, 4> dirs = {{{0, 0, 1}, {std::sin(c), 0, std::cos(c)},
                                                {std::sin(c) * std::cos(2 * pi / 3), std::sin(c) * std::sin(2 * pi / 3), std::cos(c)},
                                                {std::sin(c) * std::cos(4 * pi / 3), std::sin(c) * std::sin(4 * pi / 3), std::cos(c)}}};
  std::vector<Point> pts;
  for (auto& u : dirs) {
    Point p;
    p.x = {std::cosh(d), std::sinh(d) * u[0], std::sinh(d) * u[1], std::sinh(d) * u[2]};
    pts.push_back(p);
  }
  GeodesicSimplex s{pts};
  double v = std::abs(integrate_form(1, s, 40));
  EXPECT_NEAR(v, 1.0149416064096536, 1e-3);
  EXPECT_LT(v, 1.0149416064096536);
}

TEST(CocycleProperty, SuiteOnRandomTuples) {
  Rng rng(0);
  double max_abs = 0;
  for (int trial = 0; trial < 6; ++trial) {
    auto g = random_tuple(rng, 5);
    EXPECT_LT(cocycle_defect(g, 1, 16), 1e-8);
    auto h = random_element(rng);
    std::vector<GroupElement> f(g.begin(), g.begin() + 4), hf;
    for (auto& x : f) hf.push_back(h * x);
    double v = cocycle_value(f, 1, 16);
    EXPECT_NEAR(cocycle_value(hf, 1, 16), v, 1e-9);
    max_abs = std::max(max_abs, std::abs(v));
  }
  EXPECT_GT(max_abs, 0.0);
}

TEST(Rng, IsDeterministic) {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) {
    double x = a.uniform();
    EXPECT_EQ(x, b.uniform());
    EXPECT_GE(x, 0.0);
    EXPECT_LT(x, 1.0);
  }
}
