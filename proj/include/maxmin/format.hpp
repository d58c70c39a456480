#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "maxmin/maxmin_tree.hpp"
#include "maxmin/min_decomp.hpp"
#include "maxmin/permutation.hpp"
#include "maxmin/polynomial.hpp"

// Canonical machine-readable renderings. Keys keep insertion order.
namespace maxmin::format {

using Json = nlohmann::ordered_json;

inline Json to_json(const Permutation& p) {
  Json out = Json::array();
  for (Label v : p.values()) out.push_back(v);
  return out;
}

inline Json nodes_json(std::size_t node_count) {
  Json nodes = Json::array();
  for (std::size_t v = 1; v <= node_count; ++v) nodes.push_back(v);
  return nodes;
}

/// {"nodes": [...], "edges": [[a, b], ...]} with a < b, sorted.
inline Json to_json(const MaxminTree& t) {
  Json edges = Json::array();
  for (auto [a, b] : t.edges()) edges.push_back({a, b});
  return Json{{"nodes", nodes_json(t.node_count())}, {"edges", edges}};
}

/// Same shape with [parent, child] edges plus "root" and "leaves".
inline Json to_json(const MinDecompTree& t) {
  Json edges = Json::array();
  for (auto [p, c] : t.edges()) edges.push_back({p, c});
  Json leaves = Json::array();
  for (Label v : classify(t).leaves) leaves.push_back(v);
  return Json{{"nodes", nodes_json(t.node_count())},
              {"edges", edges},
              {"root", t.root()},
              {"leaves", leaves}};
}

/// {"n": n, "terms": [{"x": d, "q": w, "c": count}, ...]}, x ascending then
/// q descending.
inline Json to_json(std::size_t n, const BivariatePolynomial& poly) {
  Json terms = Json::array();
  for (const auto& t : poly.terms()) terms.push_back(Json{{"x", t.x}, {"q", t.q}, {"c", t.c}});
  return Json{{"n", n}, {"terms", terms}};
}

inline std::string to_csv(const BivariatePolynomial& poly) {
  std::ostringstream out;
  out << "x,q,c\n";
  for (const auto& t : poly.terms()) out << t.x << ',' << t.q << ',' << t.c << '\n';
  return out.str();
}

/// Undirected DOT graph; node labels are the node names.
inline std::string to_dot(const MaxminTree& t, const std::string& name = "maxweight") {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (std::size_t v = 1; v <= t.node_count(); ++v) out << "  " << v << ";\n";
  for (auto [a, b] : t.edges()) out << "  " << a << " -- " << b << ";\n";
  out << "}\n";
  return out.str();
}

/// Directed parent -> child DOT graph; leaves drawn as boxes.
inline std::string to_dot(const MinDecompTree& t, const std::string& name = "mindecomp") {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (Label v = 1; static_cast<std::size_t>(v) <= t.node_count(); ++v) {
    out << "  " << v << (t.is_leaf(v) ? " [shape=box]" : "") << ";\n";
  }
  for (auto [p, c] : t.edges()) out << "  " << p << " -> " << c << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace maxmin::format
