#pragma once

// Classical simple real Lie algebras as real spans of rational (Gaussian)
// matrices, with their standard Cartan involutions X -> -X^*.

#include "liecoh/lie_algebra.hpp"

#include <functional>
#include <optional>
#include <regex>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace liecoh {

struct UnknownFamily : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct RankOutOfBounds : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct WeightsNotSymmetric : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct SizeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t default_dimension_bound = 64;

enum class Family { slnR, sun, supq, sonR, sopq, sp2nR, slnC, sonC, sp2nC, compact_simple };

inline const char* to_string(Family f) {
  switch (f) {
    case Family::slnR: return "slnR";
    case Family::sun: return "sun";
    case Family::supq: return "supq";
    case Family::sonR: return "sonR";
    case Family::sopq: return "sopq";
    case Family::sp2nR: return "sp2nR";
    case Family::slnC: return "slnC";
    case Family::sonC: return "sonC";
    case Family::sp2nC: return "sp2nC";
    case Family::compact_simple: return "compact_simple";
  }
  return "?";
}

/// Killing-Cartan type of a compact simple algebra, e.g. {'A', 2} for su(3).
struct SimpleType {
  char series;
  int rank;
  friend bool operator==(const SimpleType&, const SimpleType&) = default;
  std::string str() const { return std::string(1, series) + std::to_string(rank); }
};

inline int dual_coxeter_number(SimpleType t) {
  switch (t.series) {
    case 'A': return t.rank + 1;
    case 'B': return 2 * t.rank - 1;
    case 'C': return t.rank + 1;
    case 'D': return 2 * t.rank - 2;
  }
  throw std::invalid_argument("dual_coxeter_number: unsupported series");
}

/// Square matrix with Gaussian-rational entries re + i*im.
struct ComplexMatrix {
  Matrix re, im;

  explicit ComplexMatrix(std::size_t n = 0) : re(n, n), im(n, n) {}
  ComplexMatrix(Matrix r, Matrix i) : re(std::move(r)), im(std::move(i)) {}

  std::size_t size() const { return re.rows(); }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) { return {a.re + b.re, a.im + b.im}; }
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) { return {a.re - b.re, a.im - b.im}; }
  ComplexMatrix times_i() const { return {-im, re}; }
  ComplexMatrix adjoint() const { return {re.transpose(), -im.transpose()}; }
  ComplexMatrix scaled(const Rational& s) const { return {re * s, im * s}; }

  /// Real coordinates (re entries, then im entries).
  Vector flatten() const {
    Vector v(re.entries());
    v.insert(v.end(), im.entries().begin(), im.entries().end());
    return v;
  }
};

inline ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b - b * a; }

/// A real Lie algebra spanned by matrices, with exact coordinates.
class MatrixLieAlgebra {
public:
  MatrixLieAlgebra() = default;
  MatrixLieAlgebra(std::string name, std::vector<std::string> labels, std::vector<ComplexMatrix> basis)
      : basis_(std::move(basis)) {
    if (basis_.empty()) throw std::invalid_argument("MatrixLieAlgebra: empty basis");
    n_ = basis_.front().size();
    std::vector<Vector> flat;
    for (auto& b : basis_) flat.push_back(b.flatten());
    solver_ = CoordinateSolver(2 * n_ * n_, flat);
    std::vector<BracketEntry> entries;
    for (std::size_t a = 0; a < basis_.size(); ++a)
      for (std::size_t b = a + 1; b < basis_.size(); ++b) {
        Vector c = coordinates(commutator(basis_[a], basis_[b]));
        for (std::size_t k = 0; k < c.size(); ++k)
          if (!c[k].is_zero()) entries.push_back({a, b, k, c[k]});
      }
    algebra_ = LieAlgebra::from_brackets(std::move(name), std::move(labels), entries);
  }

  const LieAlgebra& algebra() const { return algebra_; }
  const std::vector<ComplexMatrix>& basis() const { return basis_; }
  std::size_t matrix_size() const { return n_; }

  /// Coordinates of a matrix in the span; throws if outside.
  Vector coordinates(const ComplexMatrix& m) const {
    auto c = solver_.solve(m.flatten());
    if (!c) throw std::invalid_argument("matrix outside the algebra '" + algebra_.name() + "'");
    return *c;
  }

  ComplexMatrix element(std::span<const Rational> coords) const {
    ComplexMatrix m(n_);
    for (std::size_t a = 0; a < basis_.size(); ++a)
      if (!coords[a].is_zero()) m = m + basis_[a].scaled(coords[a]);
    return m;
  }

  /// Matrix of a linear map given on matrices, in this basis.
  Matrix induced(const std::function<ComplexMatrix(const ComplexMatrix&)>& f) const {
    std::vector<Vector> cols;
    for (auto& b : basis_) cols.push_back(coordinates(f(b)));
    return Matrix::from_columns(basis_.size(), cols);
  }

private:
  std::size_t n_ = 0;
  std::vector<ComplexMatrix> basis_;
  CoordinateSolver solver_;
  LieAlgebra algebra_;
};

struct CatalogEntry {
  std::string name;
  Family family;
  MatrixLieAlgebra matrices;
  Endomorphism cartan_involution;
  bool expects_complex_structure = false;
  /// Present for compact simple entries.
  std::optional<SimpleType> compact_type;

  const LieAlgebra& algebra() const { return matrices.algebra(); }
};

struct Homomorphism {
  LieAlgebra source, target;
  Matrix matrix;  // target.dim x source.dim
  std::optional<SimpleType> source_type, target_type;
};

inline Homomorphism compose(const Homomorphism& second, const Homomorphism& first) {
  if (!(second.source == first.target)) throw std::invalid_argument("compose: homomorphisms not composable");
  return {first.source, second.target, second.matrix * first.matrix, first.source_type, second.target_type};
}

namespace catalog_detail {

inline Matrix unit(std::size_t n, std::size_t a, std::size_t b) {
  Matrix m(n, n);
  m(a, b) = 1;
  return m;
}
inline ComplexMatrix real(Matrix m) {
  std::size_t n = m.rows();
  return {std::move(m), Matrix(n, n)};
}
inline ComplexMatrix imag(Matrix m) {
  std::size_t n = m.rows();
  return {Matrix(n, n), std::move(m)};
}
inline std::string idx(std::size_t a, std::size_t b) { return std::to_string(a + 1) + std::to_string(b + 1); }

struct Builder {
  std::vector<std::string> labels;
  std::vector<ComplexMatrix> basis;
  void add(std::string l, ComplexMatrix m) {
    labels.push_back(std::move(l));
    basis.push_back(std::move(m));
  }
};

inline Matrix H(std::size_t n, std::size_t a) { return unit(n, a, a) - unit(n, a + 1, a + 1); }
inline Matrix A(std::size_t n, std::size_t a, std::size_t b) { return unit(n, a, b) - unit(n, b, a); }
inline Matrix S(std::size_t n, std::size_t a, std::size_t b) {
  return a == b ? unit(n, a, a) : unit(n, a, b) + unit(n, b, a);
}

/// Place an n x n block at (r, c) inside a zero m x m matrix.
inline Matrix embed(std::size_t m, const Matrix& blk, std::size_t r, std::size_t c) {
  Matrix out(m, m);
  for (std::size_t i = 0; i < blk.rows(); ++i)
    for (std::size_t j = 0; j < blk.cols(); ++j) out(r + i, c + j) = blk(i, j);
  return out;
}

inline Builder sl_real(std::size_t n) {
  Builder b;
  if (n == 2) {
    b.add("H", real(H(2, 0)));
    b.add("E", real(unit(2, 0, 1)));
    b.add("F", real(unit(2, 1, 0)));
    return b;
  }
  for (std::size_t a = 0; a + 1 < n; ++a) b.add("H" + std::to_string(a + 1), real(H(n, a)));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = a + 1; c < n; ++c) b.add("E" + idx(a, c), real(unit(n, a, c)));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = a + 1; c < n; ++c) b.add("E" + idx(c, a), real(unit(n, c, a)));
  return b;
}

/// su(2) in the basis -i sigma_a / 2, so that [X1, X2] = X3 cyclically.
inline Builder su2_basis() {
  Builder b;
  Rational h(1, 2);
  b.add("X1", imag(Matrix{{0, -h}, {-h, 0}}));
  b.add("X2", real(Matrix{{0, -h}, {h, 0}}));
  b.add("X3", imag(Matrix{{-h, 0}, {0, h}}));
  return b;
}

/// su(p, q) for the form diag(I_p, -I_q); q = 0 gives su(p).
inline Builder su_pq(std::size_t p, std::size_t q) {
  const std::size_t n = p + q;
  if (q == 0 && n == 2) return su2_basis();
  Builder b;
  auto same_block = [&](std::size_t a, std::size_t c) { return (a < p) == (c < p); };
  for (std::size_t a = 0; a + 1 < n; ++a) b.add("iH" + std::to_string(a + 1), imag(H(n, a)));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = a + 1; c < n; ++c)
      if (same_block(a, c)) {
        b.add("A" + idx(a, c), real(A(n, a, c)));
        b.add("iS" + idx(a, c), imag(S(n, a, c)));
      }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = a + 1; c < n; ++c)
      if (!same_block(a, c)) {
        b.add("S" + idx(a, c), real(S(n, a, c)));
        b.add("iA" + idx(a, c), imag(A(n, a, c)));
      }
  return b;
}

/// so(p, q) for diag(I_p, -I_q); q = 0 gives so(p).
inline Builder so_pq(std::size_t p, std::size_t q) {
  const std::size_t n = p + q;
  Builder b;
  auto same_block = [&](std::size_t a, std::size_t c) { return (a < p) == (c < p); };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = a + 1; c < n; ++c)
      if (same_block(a, c)) b.add("A" + idx(a, c), real(A(n, a, c)));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = a + 1; c < n; ++c)
      if (!same_block(a, c)) b.add("S" + idx(a, c), real(S(n, a, c)));
  return b;
}

/// sp(2n, R) preserving [[0, I], [-I, 0]].
inline Builder sp_real(std::size_t n) {
  const std::size_t m = 2 * n;
  Builder b;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = a + 1; c < n; ++c)
      b.add("K" + idx(a, c), real(embed(m, A(n, a, c), 0, 0) + embed(m, A(n, a, c), n, n)));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = a; c < n; ++c)
      b.add("L" + idx(a, c), real(embed(m, S(n, a, c), 0, n) - embed(m, S(n, a, c), n, 0)));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = a; c < n; ++c)
      b.add("P" + idx(a, c), real(embed(m, S(n, a, c), 0, 0) - embed(m, S(n, a, c), n, n)));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = a; c < n; ++c)
      b.add("Q" + idx(a, c), real(embed(m, S(n, a, c), 0, n) + embed(m, S(n, a, c), n, 0)));
  return b;
}

/// Compact symplectic algebra sp(n) = sp(2n, C) ∩ u(2n).
inline Builder usp(std::size_t n) {
  const std::size_t m = 2 * n;
  Builder b;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = a + 1; c < n; ++c)
      b.add("A" + idx(a, c), real(embed(m, A(n, a, c), 0, 0) + embed(m, A(n, a, c), n, n)));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = a; c < n; ++c)
      b.add("iS" + idx(a, c), imag(embed(m, S(n, a, c), 0, 0) - embed(m, S(n, a, c), n, n)));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = a; c < n; ++c)
      b.add("B" + idx(a, c), real(embed(m, S(n, a, c), 0, n) - embed(m, S(n, a, c), n, 0)));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = a; c < n; ++c)
      b.add("iB" + idx(a, c), imag(embed(m, S(n, a, c), 0, n) + embed(m, S(n, a, c), n, 0)));
  return b;
}

/// Realification of the complexification of a compact form: (X_1, iX_1, X_2, iX_2, ...).
inline Builder complexify(const Builder& compact) {
  Builder b;
  for (std::size_t a = 0; a < compact.basis.size(); ++a) {
    b.add(compact.labels[a], compact.basis[a]);
    b.add("i" + compact.labels[a], compact.basis[a].times_i());
  }
  return b;
}

struct Spec {
  Family family;
  std::size_t p = 0, q = 0;  // family parameters (n, or p and q)
};

inline std::size_t real_dimension(const Spec& s) {
  const std::size_t n = s.p, m = s.p + s.q;
  switch (s.family) {
    case Family::slnR: case Family::sun: return n * n - 1;
    case Family::supq: return m * m - 1;
    case Family::sonR: return n * (n - 1) / 2;
    case Family::sopq: return m * (m - 1) / 2;
    case Family::sp2nR: case Family::compact_simple: return 2 * n * n + n;
    case Family::slnC: return 2 * (n * n - 1);
    case Family::sonC: return n * (n - 1);
    case Family::sp2nC: return 2 * (2 * n * n + n);
  }
  return 0;
}

inline Spec parse_name(const std::string& name) {
  static const std::regex re(R"(^(sl|su|so|sp|usp)(\d+)(R|C)?$)");
  std::smatch m;
  if (!std::regex_match(name, m, re)) throw UnknownFamily("unknown catalog entry '" + name + "'");
  const std::string fam = m[1], digits = m[2], field = m[3];
  auto num = [&](const std::string& s) { return static_cast<std::size_t>(std::stoul(s)); };
  auto bad = [&]() -> Spec { throw UnknownFamily("unknown catalog entry '" + name + "'"); };
  const std::size_t whole = num(digits);
  if (fam == "sl") {
    if (whole < 2) return bad();
    if (field == "R") return {Family::slnR, whole};
    if (field == "C") return {Family::slnC, whole};
    return bad();
  }
  if (fam == "su") {
    if (!field.empty()) return bad();
    if (digits.size() == 1 && whole >= 2) return {Family::sun, whole};
    if (digits.size() == 2 && digits[0] != '0' && digits[1] != '0') return {Family::supq, num(digits.substr(0, 1)), num(digits.substr(1))};
    return bad();
  }
  if (fam == "so") {
    if (field == "C") {
      // so(3, C) = sl(2, C) and so(4, C) is not simple; so(n, C) starts at 5
      if (whole < 5) return bad();
      return {Family::sonC, whole};
    }
    if (!field.empty()) return bad();
    if (digits.size() == 1) {
      // so(4) is not simple; so(3) is su(2)
      if (whole < 5) return bad();
      return {Family::sonR, whole};
    }
    if (digits.size() == 2) {
      std::size_t p = num(digits.substr(0, 1)), q = num(digits.substr(1));
      // so(2,2) is not simple and so(3,1) is sl(2,C) (complex)
      if (p == 0 || q == 0 || p + q < 3 || (p == 2 && q == 2) || (p + q == 4 && (p == 1 || q == 1))) return bad();
      return {Family::sopq, p, q};
    }
    return bad();
  }
  if (fam == "sp") {
    if (whole % 2 != 0 || whole < 2) return bad();
    if (field == "R") return {Family::sp2nR, whole / 2};
    if (field == "C") return {Family::sp2nC, whole / 2};
    return bad();
  }
  if (fam == "usp") {
    if (!field.empty() || whole % 2 != 0 || whole < 4) return bad();
    return {Family::compact_simple, whole / 2};
  }
  return bad();
}

inline std::optional<SimpleType> compact_type_of(const Spec& s) {
  switch (s.family) {
    case Family::sun: return SimpleType{'A', static_cast<int>(s.p) - 1};
    case Family::sonR:
      return s.p % 2 ? SimpleType{'B', static_cast<int>(s.p / 2)} : SimpleType{'D', static_cast<int>(s.p / 2)};
    case Family::compact_simple: return SimpleType{'C', static_cast<int>(s.p)};
    default: return std::nullopt;
  }
}

inline Builder builder_for(const Spec& s) {
  switch (s.family) {
    case Family::slnR: return sl_real(s.p);
    case Family::sun: return su_pq(s.p, 0);
    case Family::supq: return su_pq(s.p, s.q);
    case Family::sonR: return so_pq(s.p, 0);
    case Family::sopq: return so_pq(s.p, s.q);
    case Family::sp2nR: return sp_real(s.p);
    case Family::compact_simple: return usp(s.p);
    case Family::slnC: return complexify(su_pq(s.p, 0));
    case Family::sonC: return complexify(so_pq(s.p, 0));
    case Family::sp2nC: return complexify(usp(s.p));
  }
  throw UnknownFamily("unreachable family");
}

}  // namespace catalog_detail

/// Real dimension of a named entry without building it.
inline std::size_t catalog_dimension(const std::string& name) {
  return catalog_detail::real_dimension(catalog_detail::parse_name(name));
}

inline CatalogEntry build(const std::string& name, std::size_t max_dim = default_dimension_bound) {
  using namespace catalog_detail;
  Spec spec = parse_name(name);
  std::size_t d = real_dimension(spec);
  if (d > max_dim)
    throw RankOutOfBounds("'" + name + "' has real dimension " + std::to_string(d) + " above the bound " +
                          std::to_string(max_dim));
  Builder b = builder_for(spec);
  CatalogEntry e{name, spec.family, MatrixLieAlgebra(name, b.labels, b.basis), {}, false, compact_type_of(spec)};
  e.cartan_involution = e.matrices.induced([](const ComplexMatrix& x) { return x.adjoint().scaled(-1); });
  e.expects_complex_structure =
      spec.family == Family::slnC || spec.family == Family::sonC || spec.family == Family::sp2nC;
  return e;
}

struct CatalogDescriptor {
  std::string name;
  std::size_t dim;
  Family family;
  bool expects_complex_structure;
};

/// The fixed sample of simple real algebras, ascending by dimension then name.
inline std::vector<CatalogDescriptor> list(std::size_t max_dim = default_dimension_bound) {
  static const char* names[] = {
      "sl2R", "sl3R", "sl4R", "sl5R",                   // split real forms
      "su2",  "su3",  "su4",  "so5",  "usp4",           // compact
      "su11", "su21", "su22", "su31", "su32", "su33",   // su(p,q)
      "so21", "so32", "so41", "so42", "so51", "so33",
      "so43", "so44", "so55",                           // so(p,q)
      "sp4R", "sp6R",                                   // sp(2n,R)
      "sl2C", "sl3C", "sl4C", "so5C", "sp4C",           // complex, as real algebras
  };
  std::vector<CatalogDescriptor> out;
  for (const char* n : names) {
    auto spec = catalog_detail::parse_name(n);
    std::size_t d = catalog_detail::real_dimension(spec);
    if (d > max_dim) continue;
    bool cx = spec.family == Family::slnC || spec.family == Family::sonC || spec.family == Family::sp2nC;
    out.push_back({n, d, spec.family, cx});
  }
  std::stable_sort(out.begin(), out.end(), [](const CatalogDescriptor& a, const CatalogDescriptor& b) {
    return a.dim != b.dim ? a.dim < b.dim : a.name < b.name;
  });
  return out;
}

/// Homomorphism determined by the images (as matrices) of the source's basis matrices.
inline Homomorphism matrix_homomorphism(const CatalogEntry& source, const CatalogEntry& target,
                                        const std::vector<ComplexMatrix>& images) {
  std::vector<Vector> cols;
  for (auto& m : images) cols.push_back(target.matrices.coordinates(m));
  Homomorphism h{source.algebra(), target.algebra(), Matrix::from_columns(target.algebra().dim(), cols),
                 source.compact_type, target.compact_type};
  if (!h.target.is_homomorphism_from(h.source, h.matrix))
    throw std::logic_error("matrix_homomorphism: map does not intertwine brackets");
  return h;
}

/// su(m) -> su(n) (m <= n) in the upper-left block.
inline Homomorphism block_embedding(const CatalogEntry& source, const CatalogEntry& target) {
  if (source.family != Family::sun || target.family != Family::sun)
    throw UnknownFamily("block_embedding expects su(m) -> su(n)");
  const std::size_t m = source.matrices.matrix_size(), n = target.matrices.matrix_size();
  if (m > n) throw SizeMismatch("block_embedding: source larger than target");
  std::vector<ComplexMatrix> imgs;
  for (auto& b : source.matrices.basis())
    imgs.push_back({catalog_detail::embed(n, b.re, 0, 0), catalog_detail::embed(n, b.im, 0, 0)});
  return matrix_homomorphism(source, target, imgs);
}

/// su(2) -> su(n) whose defining representation has the given weights
/// (in units where the 2-dimensional irreducible has weights {1, -1}).
/// Irreducible blocks of weight 0, 1 and 2 have rational unitary models.
inline Homomorphism su2_embedding(const CatalogEntry& target, std::vector<int> weights) {
  using catalog_detail::unit;
  if (target.family != Family::sun) throw UnknownFamily("su2_embedding: target must be su(n)");
  const std::size_t n = target.matrices.matrix_size();
  if (weights.size() != n)
    throw SizeMismatch("su2_embedding: " + std::to_string(weights.size()) + " weights for su(" + std::to_string(n) + ")");
  // Decompose the multiset into weight strings m, m-2, ..., -m.
  std::multiset<int> pool(weights.begin(), weights.end());
  std::vector<int> tops;
  while (!pool.empty()) {
    int top = *pool.rbegin();
    if (top < 0) throw WeightsNotSymmetric("su2_embedding: weights are not symmetric under negation");
    for (int w = top; w >= -top; w -= 2) {
      auto it = pool.find(w);
      if (it == pool.end()) throw WeightsNotSymmetric("su2_embedding: weights do not form su(2) strings");
      pool.erase(it);
    }
    tops.push_back(top);
  }
  for (int t : tops)
    if (t > 2)
      throw std::invalid_argument("su2_embedding: irreducible blocks of highest weight > 2 are not rational");

  CatalogEntry su2 = build("su2");
  // Block models of X1, X2, X3.
  std::vector<ComplexMatrix> spin_half = su2.matrices.basis();
  std::vector<ComplexMatrix> spin_one = {
      catalog_detail::real(unit(3, 2, 1) - unit(3, 1, 2)),
      catalog_detail::real(unit(3, 0, 2) - unit(3, 2, 0)),
      catalog_detail::real(unit(3, 1, 0) - unit(3, 0, 1)),
  };
  std::vector<ComplexMatrix> imgs(3, ComplexMatrix(n));
  std::size_t offset = 0;
  for (int t : tops) {
    std::size_t sz = static_cast<std::size_t>(t) + 1;
    if (t > 0) {
      const auto& blocks = t == 1 ? spin_half : spin_one;
      for (std::size_t a = 0; a < 3; ++a) {
        imgs[a].re += catalog_detail::embed(n, blocks[a].re, offset, offset);
        imgs[a].im += catalog_detail::embed(n, blocks[a].im, offset, offset);
      }
    }
    offset += sz;
  }
  return matrix_homomorphism(su2, target, imgs);
}

}  // namespace liecoh
