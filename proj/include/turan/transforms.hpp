#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

// Rooted blow-up F^ell: ell disjoint copies of F glued along the root set.
// Copy 1 keeps the original numbering; each further copy appends the non-root
// vertices in increasing original order. Any root-root edge appears once
// (duplicates collapse; the result stays simple). Non-root copies inherit the
// label of their original, so D-family roles (centre/core/cluster) carry over.
inline RootedGraph blow_up(const RootedGraph& g, int ell) {
  if (ell < 1) throw Error(ErrorKind::bad_parameters, "blow-up multiplicity must be >= 1");
  auto nr = g.non_roots();
  int k = static_cast<int>(nr.size());
  std::vector<int> nr_rank(g.n, -1);
  for (int i = 0; i < k; ++i) nr_rank[nr[i]] = i;

  auto image = [&](int v, int copy) {
    if (g.is_root(v) || copy == 0) return v;
    return g.n + (copy - 1) * k + nr_rank[v];
  };

  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edges.size() * ell);
  for (int c = 0; c < ell; ++c)
    for (auto [u, v] : g.edges)
      edges.emplace_back(image(u, c), image(v, c));

  RootedGraph out = make_graph(g.n + (ell - 1) * k, edges, g.roots);
  for (auto& [v, tag] : g.labels) {
    out.labels[v] = tag;
    if (!g.is_root(v))
      for (int c = 1; c < ell; ++c) out.labels[image(v, c)] = tag;
  }
  return out;
}

// 1-subdivision: every edge becomes a path of length two through a fresh
// non-root vertex. The new vertex for the k-th edge (in normal form order)
// is n + k. Roots are unchanged.
inline RootedGraph subdivide(const RootedGraph& g) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(2 * g.edges.size());
  int next = g.n;
  for (auto [u, v] : g.edges) {
    edges.emplace_back(u, next);
    edges.emplace_back(next, v);
    ++next;
  }
  RootedGraph out = make_graph(next, edges, g.roots);
  out.labels = g.labels;
  return out;
}

// Densification F(t) / F_*(t) of a connected bipartite F with bipartition
// (A,B), where A is the side of vertex 0. Appends two fresh root groups:
// R'_1 = n..n+t-1 joined to all of B, R'_2 = n+t..n+2t-1 joined to all of A,
// plus all R'_1-R'_2 edges. The starred variant then drops every edge with
// both endpoints in the enlarged root set. Starred densification of a graph
// whose roots fill one side leaves isolated new roots; that is the defined
// result, not an error.
inline RootedGraph densify(const RootedGraph& g, int t, bool starred) {
  if (t < 1) throw Error(ErrorKind::bad_parameters, "densify needs t >= 1");
  if (!is_connected(g)) throw Error(ErrorKind::not_connected, "densify needs a connected graph");
  auto coloring = two_coloring(g);
  if (!coloring) throw Error(ErrorKind::not_bipartite, "densify needs a bipartite graph");

  int n = g.n;
  std::vector<std::pair<int, int>> edges = g.edges;
  for (int i = 0; i < t; ++i) {
    int r1 = n + i;      // joined to B (color 1)
    int r2 = n + t + i;  // joined to A (color 0)
    for (int v = 0; v < n; ++v)
      edges.emplace_back((*coloring)[v] == 1 ? r1 : r2, v);
    for (int j = 0; j < t; ++j) edges.emplace_back(r1, n + t + j);
  }
  std::vector<int> roots = g.roots;
  for (int i = 0; i < 2 * t; ++i) roots.push_back(n + i);

  RootedGraph out = make_graph(n + 2 * t, edges, roots);
  if (starred) {
    std::vector<std::pair<int, int>> kept;
    kept.reserve(out.edges.size());
    for (auto [u, v] : out.edges)
      if (!(out.is_root(u) && out.is_root(v))) kept.emplace_back(u, v);
    out.edges = std::move(kept);
  }
  out.labels = g.labels;
  return out;
}

// Merge v into u (both roots or both non-roots). The merged vertex keeps the
// smaller index and the union of the two neighborhoods; indices above the
// removed vertex shift down by one.
inline RootedGraph identify(const RootedGraph& g, int u, int v) {
  if (u < 0 || u >= g.n || v < 0 || v >= g.n)
    throw Error(ErrorKind::out_of_range_vertex, "identify vertex out of range");
  if (u == v) throw Error(ErrorKind::same_vertex, "identify needs two distinct vertices");
  if (g.is_root(u) != g.is_root(v))
    throw Error(ErrorKind::mixed_root_status,
                "cannot identify a root with a non-root");
  int keep = std::min(u, v);
  int drop = std::max(u, v);
  auto remap = [&](int w) {
    if (w == drop) return keep;
    return w > drop ? w - 1 : w;
  };
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edges.size());
  for (auto [a, b] : g.edges) {
    int x = remap(a), y = remap(b);
    if (x != y) edges.emplace_back(x, y);
  }
  std::vector<int> roots;
  for (int r : g.roots)
    if (r != drop) roots.push_back(remap(r));
  RootedGraph out = make_graph(g.n - 1, edges, roots);
  for (auto& [w, tag] : g.labels)
    if (w != drop) out.labels[remap(w)] = tag;
  return out;
}

}  // namespace turan
