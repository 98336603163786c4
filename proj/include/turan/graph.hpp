#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "turan/errors.hpp"

namespace turan {

// Simple undirected graph together with a distinguished proper subset of
// "root" vertices. Roots are the vertices that get shared (not duplicated)
// under blow-up. An empty root set is allowed for pattern graphs; density
// operations then treat every vertex as a non-root.
//
// Normal form: edges stored (u,v) with u < v, sorted lexicographically,
// no duplicates; roots sorted. All constructors in the library emit this form,
// so identical inputs yield byte-identical graphs.
struct RootedGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> roots;
  std::map<int, std::string> labels;  // optional role tags: core / centre / cluster:<i>

  bool is_root(int v) const {
    return std::binary_search(roots.begin(), roots.end(), v);
  }
  bool has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
  }
  std::vector<int> non_roots() const {
    std::vector<int> out;
    out.reserve(n - static_cast<int>(roots.size()));
    for (int v = 0; v < n; ++v)
      if (!is_root(v)) out.push_back(v);
    return out;
  }
  int edge_count() const { return static_cast<int>(edges.size()); }
};

inline RootedGraph make_graph(int n,
                              const std::vector<std::pair<int, int>>& edges,
                              const std::vector<int>& roots) {
  if (n < 0) throw Error(ErrorKind::bad_parameters, "negative vertex count");
  RootedGraph g;
  g.n = n;
  g.edges.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw Error(ErrorKind::out_of_range_vertex,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) +
                      ") outside 0.." + std::to_string(n - 1));
    if (u == v)
      throw Error(ErrorKind::loop_edge, "loop at vertex " + std::to_string(u));
    g.edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());

  g.roots = roots;
  std::sort(g.roots.begin(), g.roots.end());
  g.roots.erase(std::unique(g.roots.begin(), g.roots.end()), g.roots.end());
  for (int r : g.roots)
    if (r < 0 || r >= n)
      throw Error(ErrorKind::out_of_range_vertex,
                  "root " + std::to_string(r) + " outside vertex range");
  if (static_cast<int>(g.roots.size()) == n)
    throw Error(ErrorKind::roots_not_proper,
                "root set must be a proper subset of the vertices");
  return g;
}

inline std::vector<std::vector<int>> adjacency(const RootedGraph& g) {
  std::vector<std::vector<int>> adj(g.n);
  for (auto [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

inline std::vector<int> degrees(const RootedGraph& g) {
  std::vector<int> deg(g.n, 0);
  for (auto [u, v] : g.edges) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

inline bool is_connected(const RootedGraph& g) {
  if (g.n <= 1) return true;
  auto adj = adjacency(g);
  std::vector<char> seen(g.n, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int count = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        q.push(w);
      }
  }
  return count == g.n;
}

// 2-coloring by BFS, component by component (lowest-index vertex of each
// component gets color 0). Returns nullopt on an odd cycle.
inline std::optional<std::vector<int>> two_coloring(const RootedGraph& g) {
  auto adj = adjacency(g);
  std::vector<int> color(g.n, -1);
  for (int s = 0; s < g.n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : adj[v]) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          q.push(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

inline bool is_bipartite(const RootedGraph& g) {
  return two_coloring(g).has_value();
}

inline bool roots_independent(const RootedGraph& g) {
  for (auto [u, v] : g.edges)
    if (g.is_root(u) && g.is_root(v)) return false;
  return true;
}

}  // namespace turan
