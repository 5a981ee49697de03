#pragma once

// Algebra definition JSON:
//   {"brackets": [[i, j, k, "p/q"], ...], "dim": n, "labels": [...], "name": "..."}
// Only nonzero entries with i < j are listed; keys are emitted sorted.

#include "liecoh/lie_algebra.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace liecoh {

using Json = nlohmann::json;

/// Always "p/q", reduced, with q >= 1.
inline std::string rational_string(const Rational& r) { return r.num().get_str() + "/" + r.den().get_str(); }

inline Json to_json(const LieAlgebra& g) {
  Json brackets = Json::array();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j)
      for (auto& [k, v] : g.bracket_basis(i, j)) brackets.push_back(Json::array({i, j, k, rational_string(v)}));
  return Json{{"name", g.name()}, {"dim", g.dim()}, {"labels", g.labels()}, {"brackets", brackets}};
}

inline Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(rational_string(m(i, j)));
    rows.push_back(r);
  }
  return rows;
}

inline Json vector_json(std::span<const Rational> v) {
  Json out = Json::array();
  for (auto& x : v) out.push_back(rational_string(x));
  return out;
}

namespace detail {

inline std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace detail

inline LieAlgebra algebra_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw ParseError("algebra JSON must be an object");
    for (const char* key : {"name", "dim", "labels", "brackets"})
      if (!j.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
    auto n = j.at("dim").get<std::size_t>();
    auto labels = j.at("labels").get<std::vector<std::string>>();
    if (labels.size() != n) throw ParseError("labels has " + std::to_string(labels.size()) + " entries, dim is " + std::to_string(n));
    std::vector<BracketEntry> entries;
    for (auto& e : j.at("brackets")) {
      if (!e.is_array() || e.size() != 4) throw ParseError("bracket entries are [i, j, k, \"p/q\"]");
      std::size_t a = e[0].get<std::size_t>(), b = e[1].get<std::size_t>(), c = e[2].get<std::size_t>();
      if (a >= n || b >= n || c >= n) throw ParseError("bracket index out of range");
      if (a >= b) throw ParseError("bracket entries must have i < j");
      entries.push_back({a, b, c, Rational::parse(e[3].get<std::string>())});
    }
    return LieAlgebra::from_brackets(j.at("name").get<std::string>(), labels, entries);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("algebra JSON: ") + e.what());
  }
}

/// Parse algebra JSON text; syntax errors report line and column.
inline LieAlgebra parse_algebra(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    auto [line, col] = detail::line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + e.what());
  }
  return algebra_from_json(j);
}

}  // namespace liecoh
