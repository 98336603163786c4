#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "turan/embedding.hpp"
#include "turan/exponent.hpp"
#include "turan/graph.hpp"
#include "turan/oracle.hpp"

namespace turan {

using json = nlohmann::ordered_json;

// Canonical graph JSON:
//   {"n": int, "edges": [[u,v],...] with u<v sorted lexicographically,
//    "roots": sorted int list, "labels": {"<vertex>": "<tag>"}}
// The labels key is omitted when no vertex carries a tag. Readers accept
// unordered edges/roots and renormalize.
inline json graph_to_json(const RootedGraph& g) {
  json j;
  j["n"] = g.n;
  j["edges"] = json::array();
  for (auto [u, v] : g.edges) j["edges"].push_back({u, v});
  j["roots"] = g.roots;
  if (!g.labels.empty()) {
    json labels = json::object();
    for (const auto& [v, tag] : g.labels) labels[std::to_string(v)] = tag;
    j["labels"] = labels;
  }
  return j;
}

inline RootedGraph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges") || !j.contains("roots"))
    throw Error(ErrorKind::schema_error, "graph JSON needs n, edges, roots");
  if (!j["n"].is_number_integer())
    throw Error(ErrorKind::schema_error, "n must be an integer");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw Error(ErrorKind::schema_error, "each edge must be a pair of integers");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  std::vector<int> roots;
  for (const auto& r : j["roots"]) {
    if (!r.is_number_integer())
      throw Error(ErrorKind::schema_error, "roots must be integers");
    roots.push_back(r.get<int>());
  }
  RootedGraph g = make_graph(j["n"].get<int>(), edges, roots);
  if (j.contains("labels")) {
    if (!j["labels"].is_object())
      throw Error(ErrorKind::schema_error, "labels must be an object");
    for (const auto& [key, value] : j["labels"].items()) {
      int v;
      try {
        v = std::stoi(key);
      } catch (...) {
        throw Error(ErrorKind::schema_error, "label key '" + key + "' is not a vertex");
      }
      if (v < 0 || v >= g.n)
        throw Error(ErrorKind::out_of_range_vertex, "label on missing vertex " + key);
      if (!value.is_string())
        throw Error(ErrorKind::schema_error, "label values must be strings");
      g.labels[v] = value.get<std::string>();
    }
  }
  return g;
}

inline RootedGraph graph_from_json_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw Error(ErrorKind::schema_error, "input is not valid JSON");
  return graph_from_json(j);
}

// Chain JSON:
//   {"steps":[{"kind":"base","k":int}|{"kind":"densify"}|{"kind":"subdivide"}],
//    "exponent":"a/b", "graph": <graph JSON>}
// Theta-based chains mark their base step with "family":"path" (the base k is
// then the rooted path length); star bases stay unmarked.
inline json chain_to_json(const ConstructionChain& chain) {
  json steps = json::array();
  for (const auto& st : chain.steps) {
    json s;
    switch (st.kind) {
      case ConstructionStep::Kind::base:
        s["kind"] = "base";
        s["k"] = st.base_k;
        if (st.base_family == ConstructionStep::BaseFamily::path)
          s["family"] = "path";
        break;
      case ConstructionStep::Kind::densify:
        s["kind"] = "densify";
        break;
      case ConstructionStep::Kind::subdivide:
        s["kind"] = "subdivide";
        break;
    }
    steps.push_back(s);
  }
  json j;
  j["steps"] = steps;
  j["exponent"] = chain.exponent().str();
  j["graph"] = graph_to_json(chain.result);
  return j;
}

inline std::vector<ConstructionStep> steps_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorKind::schema_error, "steps must be an array");
  std::vector<ConstructionStep> steps;
  for (const auto& s : j) {
    if (!s.is_object() || !s.contains("kind") || !s["kind"].is_string())
      throw Error(ErrorKind::schema_error, "each step needs a string kind");
    ConstructionStep st;
    std::string kind = s["kind"].get<std::string>();
    if (kind == "base") {
      st.kind = ConstructionStep::Kind::base;
      if (!s.contains("k") || !s["k"].is_number_integer())
        throw Error(ErrorKind::schema_error, "base step needs integer k");
      st.base_k = s["k"].get<int>();
      if (s.contains("family") && s["family"] == "path")
        st.base_family = ConstructionStep::BaseFamily::path;
    } else if (kind == "densify") {
      st.kind = ConstructionStep::Kind::densify;
    } else if (kind == "subdivide") {
      st.kind = ConstructionStep::Kind::subdivide;
    } else {
      throw Error(ErrorKind::schema_error, "unknown step kind '" + kind + "'");
    }
    steps.push_back(st);
  }
  return steps;
}

// Embedding JSON: a sorted map {"<pattern vertex>": host vertex, ...}.
inline json embedding_to_json(const Embedding& emb) {
  json j = json::object();
  for (size_t v = 0; v < emb.map.size(); ++v)
    j[std::to_string(v)] = emb.map[v];
  return j;
}

// Extremal result JSON: {"n":..., "max_edges":..., "certified":..., "witness":...}
inline json result_to_json(const ExtremalResult& r) {
  json j;
  j["n"] = r.n;
  j["max_edges"] = r.max_edges;
  j["certified"] = r.certified;
  j["witness"] = graph_to_json(r.witness);
  return j;
}

inline json fit_to_json(const FitResult& fit) {
  json points = json::array();
  for (const auto& p : fit.points) {
    json pt;
    pt["n"] = p.n;
    pt["ex"] = p.ex;
    pt["certified"] = p.certified;
    points.push_back(pt);
  }
  json j;
  j["slope"] = fit.slope;
  j["points"] = points;
  j["note"] = fit.note;
  return j;
}

}  // namespace turan
