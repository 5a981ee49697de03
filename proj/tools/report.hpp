#pragma once

// Report builders shared by the command-line tool and the acceptance run.

#include "liecoh/cartan.hpp"
#include "liecoh/catalog.hpp"
#include "liecoh/cocycle.hpp"
#include "liecoh/cohomology.hpp"
#include "liecoh/geodesic.hpp"
#include "liecoh/json_io.hpp"

#include <cstdio>
#include <string>
#include <vector>

namespace liecoh::report {

inline Json cohomology_json(const CohomologyReport& r) {
  Json degrees = Json::array();
  for (auto& d : r.degrees)
    degrees.push_back({{"k", d.k}, {"cochain_dim", d.cochain_dim}, {"invariant_dim", d.invariant_dim},
                       {"d_rank", d.d_rank}, {"h_dim", d.h_dim}});
  return {{"pair", r.pair},         {"g_dim", r.g_dim},       {"m_dim", r.m_dim},
          {"p_dim", r.p_dim},       {"symmetric_pair", r.symmetric_pair}, {"degrees", degrees},
          {"h_dims", r.h_dims()}};
}

inline std::string ideal_dims(const LieAlgebra& g) {
  auto rep = structure_analysis(g);
  std::string s;
  for (auto& i : rep.ideals) s += (s.empty() ? "" : "+") + std::to_string(i.span.dim());
  if (s.empty() && (rep.kind == StructureKind::simple_real || rep.kind == StructureKind::simple_complex))
    s = std::to_string(g.dim());
  return s.empty() ? "none" : s;
}

struct TheoremARow {
  std::string name;
  std::size_t dim = 0;
  bool expects_complex_structure = false, has_complex_structure = false;
  std::string k_class;  // compact, k_abelian, hermitian, k_semisimple
  std::size_t p_dim = 0, h2_dim = 0, h3_dim = 0;
  bool consistent = false;
};

struct TheoremAReport {
  std::vector<TheoremARow> rows;
  bool passed() const {
    for (auto& r : rows)
      if (!r.consistent) return false;
    return true;
  }
};

inline TheoremARow theorem_a_row(const std::string& name) {
  try {
    CatalogEntry e = build(name);
    const LieAlgebra& g = e.algebra();
    TheoremARow row;
    row.name = name;
    row.dim = g.dim();
    row.expects_complex_structure = e.expects_complex_structure;
    row.has_complex_structure = complex_structure(g).has_value();
    auto d = verify_cartan_involution(g, e.cartan_involution);
    row.p_dim = d.p.dim();
    row.k_class = row.p_dim == 0 ? "compact" : to_string(classify_k(d).kind);
    auto rep = cohomology_dims(symmetric_pair(d), std::min<std::size_t>(3, row.p_dim));
    auto h = rep.h_dims();
    row.h2_dim = h.size() > 2 ? h[2] : 0;
    row.h3_dim = h.size() > 3 ? h[3] : 0;
    row.consistent = row.h3_dim <= 1 && (row.h3_dim == 1) == row.has_complex_structure &&
                     row.has_complex_structure == row.expects_complex_structure;
    return row;
  } catch (const std::exception& ex) {
    throw std::runtime_error(name + ": " + ex.what());
  }
}

inline TheoremAReport verify_theorem_a(std::size_t max_dim) {
  TheoremAReport r;
  for (auto& d : list(max_dim)) r.rows.push_back(theorem_a_row(d.name));
  return r;
}

inline Json to_json(const TheoremAReport& r) {
  Json rows = Json::array();
  for (auto& x : r.rows)
    rows.push_back({{"name", x.name}, {"dim", x.dim}, {"expects_complex_structure", x.expects_complex_structure},
                    {"has_complex_structure", x.has_complex_structure}, {"k_class", x.k_class},
                    {"p_dim", x.p_dim}, {"h2_dim", x.h2_dim}, {"h3_dim", x.h3_dim}, {"consistent", x.consistent}});
  return {{"theorem", "A"}, {"rows", rows}, {"passed", r.passed()}};
}

struct TheoremBCase1 {
  std::string algebra = "sl2R";
  std::string k_class;
  std::size_t p_dim = 0, compact_dual_dim = 0;
  bool compact_dual_simple = false;
  std::size_t compact_dual_h3 = 0;
  bool ok() const {
    return k_class == "k_abelian" && p_dim == 2 && compact_dual_simple && compact_dual_dim == 3 && compact_dual_h3 == 1;
  }
};

struct TheoremBRow {
  std::string name;
  std::size_t z_k_dim = 0, m_dim = 0;
  std::string m_description;
  std::size_t h3_g_m = 0;
  bool ok() const { return z_k_dim == 1 && h3_g_m == 0; }
};

struct TheoremBReport {
  TheoremBCase1 case1;
  std::vector<TheoremBRow> case2;
  bool passed() const {
    if (!case1.ok()) return false;
    for (auto& r : case2)
      if (!r.ok()) return false;
    return true;
  }
};

/// Case 1: sl(2,R). Case 2: every catalog entry of Hermitian type with
/// non-abelian k, up to max_dim.
inline TheoremBReport verify_theorem_b(std::size_t max_dim = default_dimension_bound) {
  TheoremBReport r;
  {
    CatalogEntry e = build("sl2R");
    auto d = verify_cartan_involution(e.algebra(), e.cartan_involution);
    auto c = classify_k(d);
    r.case1.k_class = to_string(c.kind);
    r.case1.p_dim = c.p_dim;
    auto dual = compact_dual(d);
    r.case1.compact_dual_dim = dual.algebra.dim();
    r.case1.compact_dual_simple = structure_analysis(dual.algebra).kind == StructureKind::simple_real;
    auto rep = cohomology_dims(absolute_pair(dual.algebra), 3);
    r.case1.compact_dual_h3 = rep.degrees[3].h_dim;
  }
  for (auto& desc : list(max_dim)) {
    try {
      CatalogEntry e = build(desc.name);
      auto d = verify_cartan_involution(e.algebra(), e.cartan_involution);
      if (d.p.dim() == 0) continue;
      auto c = classify_k(d);
      if (c.kind != KClass::hermitian) continue;
      TheoremBRow row;
      row.name = desc.name;
      row.z_k_dim = c.z_dim;
      row.m_dim = c.m_dim;
      row.m_description = "[k,k], simple ideals of dim " + ideal_dims(subalgebra(e.algebra(), d.m, "m"));
      auto pr = derived_k_pair(d);
      row.h3_g_m = cohomology_dims(pr, std::min<std::size_t>(3, pr.p_dim())).degrees.back().h_dim;
      if (pr.p_dim() < 3) row.h3_g_m = 0;
      r.case2.push_back(row);
    } catch (const std::exception& ex) {
      throw std::runtime_error(desc.name + ": " + ex.what());
    }
  }
  return r;
}

inline Json to_json(const TheoremBReport& r) {
  Json rows = Json::array();
  for (auto& x : r.case2)
    rows.push_back({{"name", x.name}, {"z_k_dim", x.z_k_dim}, {"m_dim", x.m_dim}, {"m_description", x.m_description},
                    {"h3_g_m", x.h3_g_m}, {"ok", x.ok()}});
  Json c1 = {{"algebra", r.case1.algebra},
             {"k_class", r.case1.k_class},
             {"p_dim", r.case1.p_dim},
             {"compact_dual_dim", r.case1.compact_dual_dim},
             {"compact_dual_simple", r.case1.compact_dual_simple},
             {"compact_dual_h3", r.case1.compact_dual_h3},
             {"ok", r.case1.ok()}};
  return {{"theorem", "B"}, {"case1", c1}, {"case2", rows}, {"passed", r.passed()}};
}

inline Json omega_json(const OmegaForm& w) {
  FormSpace fs(w.form.space_dim, 3);
  Json coeffs = Json::array();
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (!w.form.coefficients[i].is_zero()) {
      const auto& t = fs.tuple(i);
      coeffs.push_back(Json::array({t[0], t[1], t[2], rational_string(w.form.coefficients[i])}));
    }
  Json j = {{"algebra", w.pair.g.name()},
            {"p_dim", w.pair.p_dim()},
            {"invariant_dim", w.invariant_dim},
            {"nonzero_coefficients", coeffs},
            {"p_basis", Json::array()}};
  for (auto& v : w.pair.p_basis) j["p_basis"].push_back(vector_json(v));
  if (w.curvature_factor) {
    j["curvature_factor"] = rational_string(*w.curvature_factor);
    j["scale_squared"] = rational_string(*w.scale_squared);
  }
  return j;
}

inline Json dynkin_json(const DynkinIndexResult& r, std::optional<Rational> weight_oracle) {
  Json j = {{"raw_killing_ratio", rational_string(r.raw_killing_ratio)},
            {"dual_coxeter_source", r.dual_coxeter_source},
            {"dual_coxeter_target", r.dual_coxeter_target},
            {"index", rational_string(r.index)}};
  if (weight_oracle) j["weight_oracle"] = rational_string(*weight_oracle);
  return j;
}

/// Half the sum of squared weights of the defining representation.
inline Rational weight_oracle(const std::vector<int>& weights) {
  long s = 0;
  for (int w : weights) s += static_cast<long>(w) * w;
  return Rational(s, 2);
}

/// Fixed-format float so reports are byte-stable.
inline std::string fixed(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12e", x);
  return buf;
}

struct SimplexTrial {
  double value = 0, defect = 0, invariance_residual = 0, degenerate = 0;
};

struct SimplexReport {
  int order = 16;
  std::uint64_t seed = 0;
  double scale = 1;
  std::vector<SimplexTrial> trials;
  double max_abs_value() const {
    double m = 0;
    for (auto& t : trials) m = std::max(m, std::abs(t.value));
    return m;
  }
  double max_defect() const {
    double m = 0;
    for (auto& t : trials) m = std::max(m, t.defect);
    return m;
  }
  double max_invariance() const {
    double m = 0;
    for (auto& t : trials) m = std::max(m, t.invariance_residual);
    return m;
  }
  double max_degenerate() const {
    double m = 0;
    for (auto& t : trials) m = std::max(m, std::abs(t.degenerate));
    return m;
  }
  bool per_tuple_passed() const { return max_defect() < 1e-6 && max_invariance() < 1e-8 && max_degenerate() < 1e-10; }
  bool nontrivial() const { return max_abs_value() > 0.1 * std::abs(scale); }
  bool passed() const { return per_tuple_passed() && nontrivial(); }
};

/// Random 5-tuples (operator norms <= 2, so vertex distances <= 4 log 2 < 3).
inline SimplexReport simplex_suite(std::size_t count, int order, std::uint64_t seed, double scale = 1.0) {
  SimplexReport r{order, seed, scale, {}};
  Rng rng(seed);
  for (std::size_t n = 0; n < count; ++n) {
    std::vector<GroupElement> g;
    for (int i = 0; i < 5; ++i) g.push_back(random_element(rng));
    GroupElement h = random_element(rng);
    SimplexTrial t;
    std::vector<GroupElement> face(g.begin(), g.begin() + 4), moved;
    for (auto& x : face) moved.push_back(h * x);
    t.value = cocycle_value(face, scale, order);
    t.defect = cocycle_defect(g, scale, order);
    t.invariance_residual = std::abs(cocycle_value(moved, scale, order) - t.value);
    std::vector<GroupElement> degenerate = {g[0], g[1], g[0], g[2]};
    t.degenerate = cocycle_value(degenerate, scale, order);
    r.trials.push_back(t);
  }
  return r;
}

inline Json to_json(const SimplexReport& r) {
  Json trials = Json::array();
  for (auto& t : r.trials)
    trials.push_back({{"value", fixed(t.value)}, {"defect", fixed(t.defect)},
                      {"invariance_residual", fixed(t.invariance_residual)}, {"degenerate", fixed(t.degenerate)}});
  return {{"model", "h3"},
          {"order", r.order},
          {"seed", r.seed},
          {"scale", fixed(r.scale)},
          {"trials", trials},
          {"max_abs_value", fixed(r.max_abs_value())},
          {"max_defect", fixed(r.max_defect())},
          {"max_invariance_residual", fixed(r.max_invariance())},
          {"max_degenerate", fixed(r.max_degenerate())},
          {"per_tuple_passed", r.per_tuple_passed()},
          {"nontrivial", r.nontrivial()},
          {"passed", r.passed()}};
}

}  // namespace liecoh::report
