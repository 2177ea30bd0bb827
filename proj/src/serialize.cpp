/*
 * (C) Copyright 2026 The crystalkit Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "crystalkit/serialize.hpp"

#include <sstream>

#include "json.hpp"

namespace crystalkit {

using nlohmann::json;

namespace {

json letters_json(const ReducedWord& word) {
  return json(std::vector<Letter>(word.letters().begin(), word.letters().end()));
}

std::string dump(const json& j) { return j.dump() + "\n"; }

std::string linear_text(std::span<const Int> c, char var) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    const Int mag = c[k] < 0 ? -c[k] : c[k];
    if (first) {
      if (c[k] < 0) out << "-";
    } else {
      out << (c[k] < 0 ? " - " : " + ");
    }
    if (mag != 1) out << mag << " ";
    out << var << (k + 1);
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace

std::string roots_json(const ReducedWord& word) {
  json out = json::array();
  for (const auto& r : word.roots()) out.push_back({r.k, r.l});
  return dump(out);
}

std::string roots_text(const ReducedWord& word) {
  std::ostringstream out;
  for (const auto& r : word.roots()) out << "(" << r.k << "," << r.l << ")\n";
  return out.str();
}

std::string crossings_json(const WiringDiagram& diagram, const std::vector<Crossing>& crossings) {
  json out = json::array();
  for (const auto& c : crossings) {
    const auto v = crossing_vectors(diagram, c);
    json j;
    j["kind"] = std::string(crossing_kind_name(c.kind));
    j["a"] = c.a;
    j["vertices"] = c.vertices;
    j["turning"] = c.turning();
    j["r"] = v.r;
    j["s"] = v.s;
    out.push_back(std::move(j));
  }
  return dump(out);
}

std::string inequalities_json(const InequalitySystem& system) {
  json out;
  out["n"] = system.word.n();
  out["word"] = letters_json(system.word);
  out["family"] = std::string(family_name(system.family));
  out["cone"] = json::array();
  for (const auto& row : system.cone_rows) out["cone"].push_back({{"coeffs", row.coeffs}});
  out["hw"] = json::array();
  for (const auto& row : system.hw_rows)
    out["hw"].push_back({{"coeffs", row.coeffs}, {"lambda_row", row.lambda_row}});
  return dump(out);
}

std::string inequalities_text(const InequalitySystem& system) {
  std::ostringstream out;
  for (const auto& row : system.cone_rows) out << linear_text(row.coeffs, 'x') << " >= 0\n";
  for (const auto& row : system.hw_rows)
    out << linear_text(row.coeffs, 'x') << " <= " << linear_text(row.lambda_row, 'l') << "\n";
  return out.str();
}

std::string points_json(const std::vector<Vec>& points) { return dump(json(points)); }

std::string points_csv(const std::vector<Vec>& points) {
  std::ostringstream out;
  for (const auto& p : points) {
    for (std::size_t k = 0; k < p.size(); ++k) out << (k ? "," : "") << p[k];
    out << "\n";
  }
  return out.str();
}

std::string crystal_json(const CrystalGraph& graph) {
  json out;
  out["family"] = std::string(family_name(graph.family()));
  out["word"] = letters_json(graph.word());
  out["lambda"] = Vec(graph.lambda().coeffs().begin(), graph.lambda().coeffs().end());
  out["nodes"] = json::array();
  for (const auto& node : graph.nodes()) out["nodes"].push_back({{"x", node.x}, {"wt", node.wt}});
  out["edges"] = json::array();
  for (const auto& e : graph.edges()) out["edges"].push_back({e.from, e.a, e.to});
  return dump(out);
}

std::string crystal_dot(const CrystalGraph& graph) {
  std::ostringstream out;
  out << "digraph crystal {\n";
  for (std::size_t i = 0; i < graph.size(); ++i) {
    const auto& node = graph.nodes()[i];
    out << "  n" << i << " [label=\"" << format_vec(node.x) << "\\nwt " << format_vec(node.wt)
        << "\"];\n";
  }
  for (const auto& e : graph.edges())
    out << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.a << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace crystalkit
