#pragma once

#include <algorithm>
#include <queue>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

// Adjacency view of a host graph with the neighborhood calculus used by the
// embedding lemmas: external neighborhood, distance layers, common
// neighborhoods and cross-edge counts. All set arguments and results are
// sorted vertex lists.
struct HostGraph {
  int n = 0;
  std::vector<std::vector<int>> adj;
  std::vector<std::vector<char>> mat;

  HostGraph() = default;
  explicit HostGraph(const RootedGraph& g) : HostGraph(g.n, g.edges) {}
  HostGraph(int n_, const std::vector<std::pair<int, int>>& edges)
      : n(n_), adj(n_), mat(n_, std::vector<char>(n_, 0)) {
    for (auto [u, v] : edges) {
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw Error(ErrorKind::out_of_range_vertex, "host edge out of range");
      if (u == v) throw Error(ErrorKind::loop_edge, "host loop");
      if (!mat[u][v]) {
        mat[u][v] = mat[v][u] = 1;
        adj[u].push_back(v);
        adj[v].push_back(u);
      }
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
  }

  bool has_edge(int u, int v) const { return mat[u][v] != 0; }
  int degree(int v) const { return static_cast<int>(adj[v].size()); }

  void check_set(const std::vector<int>& s) const {
    for (int v : s)
      if (v < 0 || v >= n)
        throw Error(ErrorKind::out_of_range_vertex,
                    "vertex " + std::to_string(v) + " not in host");
  }

  // Distance layer: vertices at distance exactly i from the set A
  // (layer 0 is A itself).
  std::vector<int> layer(const std::vector<int>& a, int i) const {
    check_set(a);
    std::vector<int> dist(n, -1);
    std::queue<int> q;
    for (int v : a)
      if (dist[v] != 0) {
        dist[v] = 0;
        q.push(v);
      }
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : adj[v])
        if (dist[w] == -1) {
          dist[w] = dist[v] + 1;
          q.push(w);
        }
    }
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
      if (dist[v] == i) out.push_back(v);
    return out;
  }

  // External neighborhood: neighbors of A outside A.
  std::vector<int> ext_neighborhood(const std::vector<int>& a) const {
    return layer(a, 1);
  }

  // Common neighborhood of S: vertices adjacent to every member of S.
  std::vector<int> common_neighborhood(const std::vector<int>& s) const {
    check_set(s);
    if (s.empty()) throw Error(ErrorKind::empty_subset, "common neighborhood of empty set");
    std::vector<int> out;
    for (int v = 0; v < n; ++v) {
      bool all = true;
      for (int w : s)
        if (!mat[v][w]) {
          all = false;
          break;
        }
      if (all) out.push_back(v);
    }
    return out;
  }

  int common_degree(const std::vector<int>& s) const {
    return static_cast<int>(common_neighborhood(s).size());
  }

  // e(A,B): number of distinct edges with one endpoint in A and one in B
  // (edge-set semantics, so overlapping A and B count each edge once).
  long long cross_edges(const std::vector<int>& a, const std::vector<int>& b) const {
    check_set(a);
    check_set(b);
    std::vector<char> in_a(n, 0), in_b(n, 0);
    for (int v : a) in_a[v] = 1;
    for (int v : b) in_b[v] = 1;
    long long count = 0;
    for (int u = 0; u < n; ++u)
      for (int v : adj[u]) {
        if (v <= u) continue;
        if ((in_a[u] && in_b[v]) || (in_a[v] && in_b[u])) ++count;
      }
    return count;
  }
};

}  // namespace turan
