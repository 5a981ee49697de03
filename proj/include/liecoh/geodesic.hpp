#pragma once

// Geodesic simplices in hyperbolic 3-space H^3 = SL(2,C)/SU(2) (hyperboloid
// model) and integration of multiples of the volume form over them.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

namespace liecoh {

/// Point of {x : -x0^2 + x1^2 + x2^2 + x3^2 = -1, x0 > 0}.
struct Point {
  std::array<double, 4> x{1, 0, 0, 0};
};

inline Point origin() { return {}; }

inline double minkowski(const std::array<double, 4>& a, const std::array<double, 4>& b) {
  return -a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

inline Point renormalized(Point p) {
  double s = std::sqrt(-minkowski(p.x, p.x));
  if (p.x[0] < 0) s = -s;
  for (auto& c : p.x) c /= s;
  return p;
}

/// Hyperbolic distance, via the chord r = |x - y| (r = 2 sinh(d/2)).
inline double distance(const Point& a, const Point& b) {
  std::array<double, 4> d;
  for (int i = 0; i < 4; ++i) d[i] = a.x[i] - b.x[i];
  double r2 = std::max(0.0, minkowski(d, d));
  return 2 * std::asinh(std::sqrt(r2) / 2);
}

using Complex = std::complex<double>;

/// Element of SL(2,C) acting by X -> g X g^* on Hermitian matrices
/// X = [[x0 + x3, x1 - i x2], [x1 + i x2, x0 - x3]].
struct GroupElement {
  std::array<Complex, 4> m{1.0, 0.0, 0.0, 1.0};  // row-major a b / c d

  GroupElement() = default;
  GroupElement(Complex a, Complex b, Complex c, Complex d) : m{a, b, c, d} {
    if (std::abs(det() - 1.0) > 1e-12) throw std::invalid_argument("GroupElement: det != 1");
  }

  Complex det() const { return m[0] * m[3] - m[1] * m[2]; }

  friend GroupElement operator*(const GroupElement& g, const GroupElement& h) {
    GroupElement r;
    r.m = {g.m[0] * h.m[0] + g.m[1] * h.m[2], g.m[0] * h.m[1] + g.m[1] * h.m[3],
           g.m[2] * h.m[0] + g.m[3] * h.m[2], g.m[2] * h.m[1] + g.m[3] * h.m[3]};
    return r;
  }

  double operator_norm() const {
    // largest singular value from tr(g g^*) and |det| = 1
    double f = std::norm(m[0]) + std::norm(m[1]) + std::norm(m[2]) + std::norm(m[3]);
    double s2 = (f + std::sqrt(std::max(0.0, f * f - 4))) / 2;
    return std::sqrt(s2);
  }

  Point act(const Point& p) const {
    const auto& x = p.x;
    Complex X[4] = {x[0] + x[3], Complex(x[1], -x[2]), Complex(x[1], x[2]), x[0] - x[3]};
    Complex gx[4] = {m[0] * X[0] + m[1] * X[2], m[0] * X[1] + m[1] * X[3], m[2] * X[0] + m[3] * X[2],
                     m[2] * X[1] + m[3] * X[3]};
    // (g X g^*)_{ij} = sum_k (gX)_{ik} conj(g_{jk})
    Complex y00 = gx[0] * std::conj(m[0]) + gx[1] * std::conj(m[1]);
    Complex y10 = gx[2] * std::conj(m[0]) + gx[3] * std::conj(m[1]);
    Complex y11 = gx[2] * std::conj(m[2]) + gx[3] * std::conj(m[3]);
    Point q;
    q.x = {(y00.real() + y11.real()) / 2, y10.real(), y10.imag(), (y00.real() - y11.real()) / 2};
    return renormalized(q);
  }

  Point point() const { return act(origin()); }
};

/// Pure translation taking o to distance d along the x3 axis.
inline GroupElement translation(double d) {
  return {std::exp(d / 2), 0.0, 0.0, std::exp(-d / 2)};
}

namespace detail {

/// Forward-mode value with N directional derivatives.
template <int N>
struct Jet {
  double v = 0;
  std::array<double, N> d{};

  Jet() = default;
  Jet(double value) : v(value) {}

  static Jet variable(double value, int i) {
    Jet j(value);
    j.d[i] = 1;
    return j;
  }

  friend Jet operator+(Jet a, const Jet& b) {
    a.v += b.v;
    for (int i = 0; i < N; ++i) a.d[i] += b.d[i];
    return a;
  }
  friend Jet operator-(Jet a, const Jet& b) {
    a.v -= b.v;
    for (int i = 0; i < N; ++i) a.d[i] -= b.d[i];
    return a;
  }
  friend Jet operator-(Jet a) {
    a.v = -a.v;
    for (auto& x : a.d) x = -x;
    return a;
  }
  friend Jet operator*(const Jet& a, const Jet& b) {
    Jet r(a.v * b.v);
    for (int i = 0; i < N; ++i) r.d[i] = a.d[i] * b.v + a.v * b.d[i];
    return r;
  }
  friend Jet operator/(const Jet& a, const Jet& b) {
    Jet r(a.v / b.v);
    for (int i = 0; i < N; ++i) r.d[i] = (a.d[i] - r.v * b.d[i]) / b.v;
    return r;
  }
  Jet chain(double fv, double dfv) const {
    Jet r(fv);
    for (int i = 0; i < N; ++i) r.d[i] = dfv * d[i];
    return r;
  }
};

inline double value_of(double x) { return x; }
template <int N>
double value_of(const Jet<N>& x) {
  return x.v;
}

inline double sqrt_(double x) { return std::sqrt(x); }
inline double sinh_(double x) { return std::sinh(x); }
inline double asinh_(double x) { return std::asinh(x); }
template <int N>
Jet<N> sqrt_(const Jet<N>& x) {
  double s = std::sqrt(x.v);
  return x.chain(s, 0.5 / s);
}
template <int N>
Jet<N> sinh_(const Jet<N>& x) {
  return x.chain(std::sinh(x.v), std::cosh(x.v));
}
template <int N>
Jet<N> asinh_(const Jet<N>& x) {
  return x.chain(std::asinh(x.v), 1 / std::sqrt(1 + x.v * x.v));
}

template <class T>
using Vec4 = std::array<T, 4>;

template <class T>
T mink(const Vec4<T>& a, const Vec4<T>& b) {
  return T(0) - a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

template <class T>
Vec4<T> normalize(Vec4<T> p) {
  T s = sqrt_(T(0) - mink(p, p));
  for (auto& c : p) c = c / s;
  return p;
}

/// Chord length below which the sinh ratios are replaced by their series.
inline constexpr double small_chord = 1e-4;

/// Point at fraction t along the geodesic from x to y:
/// (sinh((1-t)s) x + sinh(ts) y) / sinh(s), s = d(x, y).
template <class T>
Vec4<T> geodesic(const Vec4<T>& x, const Vec4<T>& y, const T& t) {
  Vec4<T> diff;
  for (int i = 0; i < 4; ++i) diff[i] = x[i] - y[i];
  T r2 = mink(diff, diff);
  T one(1);
  T u = one - t;
  T cx, cy;
  if (value_of(r2) < small_chord * small_chord) {
    // s^2 = r^2 - r^4/12 + O(r^6); sinh(as)/sinh(s) = a(1 + (a^2-1)s^2/6 + O(s^4))
    T s2 = r2 - r2 * r2 / T(12);
    cx = u * (one + (u * u - one) * s2 / T(6));
    cy = t * (one + (t * t - one) * s2 / T(6));
  } else {
    T s = T(2) * asinh_(sqrt_(r2) / T(2));
    T sh = sinh_(s);
    cx = sinh_(u * s) / sh;
    cy = sinh_(t * s) / sh;
  }
  Vec4<T> p;
  for (int i = 0; i < 4; ++i) p[i] = cx * x[i] + cy * y[i];
  return normalize(p);
}

/// Iterated cone: P_0 = v_0, P_j = geodesic(P_{j-1}, v_j, t_j).
template <class T>
Vec4<T> cone(std::span<const Point> vertices, std::span<const T> t) {
  Vec4<T> p;
  for (int i = 0; i < 4; ++i) p[i] = T(vertices[0].x[i]);
  for (std::size_t j = 1; j < vertices.size(); ++j) {
    Vec4<T> v;
    for (int i = 0; i < 4; ++i) v[i] = T(vertices[j].x[i]);
    p = geodesic(p, v, t[j - 1]);
  }
  return p;
}

inline double det4(const std::array<std::array<double, 4>, 4>& m) {
  auto minor3 = [&](int skip) {
    int c[3], k = 0;
    for (int i = 0; i < 4; ++i)
      if (i != skip) c[k++] = i;
    return m[1][c[0]] * (m[2][c[1]] * m[3][c[2]] - m[2][c[2]] * m[3][c[1]]) -
           m[1][c[1]] * (m[2][c[0]] * m[3][c[2]] - m[2][c[2]] * m[3][c[0]]) +
           m[1][c[2]] * (m[2][c[0]] * m[3][c[1]] - m[2][c[1]] * m[3][c[0]]);
  };
  double s = 0;
  for (int j = 0; j < 4; ++j) s += (j % 2 ? -1 : 1) * m[0][j] * minor3(j);
  return s;
}

/// Deterministic pairwise sum.
inline double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 8) {
    double s = 0;
    for (double x : v) s += x;
    return s;
  }
  std::size_t h = v.size() / 2;
  return pairwise_sum(v.subspan(0, h)) + pairwise_sum(v.subspan(h));
}

}  // namespace detail

/// Geodesic from x to y at parameter t in [0, 1].
inline Point geodesic(const Point& x, const Point& y, double t) {
  Point p;
  p.x = detail::geodesic<double>(x.x, y.x, t);
  return p;
}

struct GeodesicSimplex {
  std::vector<Point> vertices;  // cone order: v_0 first, v_k last

  std::size_t dimension() const { return vertices.empty() ? 0 : vertices.size() - 1; }
};

/// Point with cone coordinates t in [0,1]^k.
inline Point cone_point(const GeodesicSimplex& s, std::span<const double> t) {
  if (s.vertices.empty() || t.size() != s.dimension()) throw std::invalid_argument("cone_point: coordinate count");
  Point p;
  p.x = detail::cone<double>(s.vertices, t);
  return p;
}

/// Point with barycentric weights (k+1 non-negative weights summing to 1),
/// converted to cone coordinates t_j = w_j / (w_0 + ... + w_j).
inline Point simplex_map(const GeodesicSimplex& s, std::span<const double> barycentric) {
  if (barycentric.size() != s.vertices.size()) throw std::invalid_argument("simplex_map: weight count");
  std::vector<double> t(s.dimension());
  double acc = barycentric[0];
  for (std::size_t j = 1; j < barycentric.size(); ++j) {
    acc += barycentric[j];
    t[j - 1] = acc > 0 ? barycentric[j] / acc : 0.0;
  }
  return cone_point(s, t);
}

/// Gauss-Legendre nodes and weights on [0, 1].
struct Quadrature {
  std::vector<double> nodes, weights;
};

inline Quadrature gauss_legendre(int order) {
  if (order < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
  const unsigned n = static_cast<unsigned>(order);
  Quadrature q;
  q.nodes.resize(n);
  q.weights.resize(n);
  const double pi = std::acos(-1.0);
  for (unsigned i = 0; i < n; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double dp = 0;
    for (int it = 0; it < 100; ++it) {
      double p = std::legendre(n, x), pm = n > 1 ? std::legendre(n - 1, x) : 1.0;
      dp = n * (x * p - pm) / (x * x - 1);
      double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double p = std::legendre(n, x), pm = n > 1 ? std::legendre(n - 1, x) : 1.0;
    dp = n * (x * p - pm) / (x * x - 1);
    // map [-1,1] -> [0,1], ascending nodes
    q.nodes[n - 1 - i] = (x + 1) / 2;
    q.weights[n - 1 - i] = 1.0 / ((1 - x * x) * dp * dp);
  }
  return q;
}

/// Integral of scale * (unit-curvature volume form) over the geodesic
/// 3-simplex, by product Gauss-Legendre quadrature on the cone coordinates.
/// The volume form at p is det[p, a, b, c].
inline double integrate_form(double scale, const GeodesicSimplex& s, int order) {
  if (s.vertices.size() != 4) throw std::invalid_argument("integrate_form: expects a 3-simplex");
  using J = detail::Jet<3>;
  Quadrature q = gauss_legendre(order);
  std::vector<double> terms;
  terms.reserve(q.nodes.size() * q.nodes.size() * q.nodes.size());
  for (std::size_t a = 0; a < q.nodes.size(); ++a)
    for (std::size_t b = 0; b < q.nodes.size(); ++b)
      for (std::size_t c = 0; c < q.nodes.size(); ++c) {
        std::array<J, 3> t = {J::variable(q.nodes[a], 0), J::variable(q.nodes[b], 1), J::variable(q.nodes[c], 2)};
        auto p = detail::cone<J>(s.vertices, t);
        std::array<std::array<double, 4>, 4> m;
        for (int i = 0; i < 4; ++i) {
          m[0][i] = p[i].v;
          for (int k = 0; k < 3; ++k) m[k + 1][i] = p[i].d[k];
        }
        terms.push_back(q.weights[a] * q.weights[b] * q.weights[c] * detail::det4(m));
      }
  return scale * detail::pairwise_sum(terms);
}

/// I(g_0, .., g_3) = integral over the simplex with vertices g_i * o.
inline double cocycle_value(std::span<const GroupElement> g, double scale, int order) {
  if (g.size() != 4) throw std::invalid_argument("cocycle_value: expects 4 group elements");
  GeodesicSimplex s;
  for (auto& x : g) s.vertices.push_back(x.point());
  return integrate_form(scale, s, order);
}

/// |sum_i (-1)^i I(g_0, .., omit g_i, .., g_4)|.
inline double cocycle_defect(std::span<const GroupElement> g, double scale, int order) {
  if (g.size() != 5) throw std::invalid_argument("cocycle_defect: expects 5 group elements");
  std::vector<double> terms;
  for (std::size_t i = 0; i < 5; ++i) {
    std::vector<GroupElement> face;
    for (std::size_t j = 0; j < 5; ++j)
      if (j != i) face.push_back(g[j]);
    double v = cocycle_value(face, scale, order);
    terms.push_back(i % 2 ? -v : v);
  }
  return std::abs(detail::pairwise_sum(terms));
}

/// Seeded generator with a platform-independent uniform on [0, 1).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
  std::mt19937_64 engine_;
};

/// Uniformly random element of SU(2) (rejection-sampled unit quaternion).
inline GroupElement random_rotation(Rng& rng) {
  while (true) {
    double q[4], n2 = 0;
    for (auto& c : q) {
      c = rng.uniform(-1, 1);
      n2 += c * c;
    }
    if (n2 > 1 || n2 < 1e-4) continue;
    double n = std::sqrt(n2);
    for (auto& c : q) c /= n;
    GroupElement g;
    g.m = {Complex(q[0], q[1]), Complex(q[2], q[3]), Complex(-q[2], q[3]), Complex(q[0], -q[1])};
    return g;
  }
}

/// u * diag(l, 1/l) * v with u, v random rotations and l uniform in
/// [1, max_norm]; operator norm <= max_norm, so d(o, g o) <= 2 log(max_norm).
inline GroupElement random_element(Rng& rng, double max_norm = 2.0) {
  GroupElement u = random_rotation(rng);
  double l = rng.uniform(1.0, max_norm);
  GroupElement a;
  a.m = {l, 0.0, 0.0, 1 / l};
  GroupElement v = random_rotation(rng);
  return u * a * v;
}

}  // namespace liecoh
