#pragma once

#include <string>
#include <vector>

#include "turan/graph.hpp"
#include "turan/transforms.hpp"

namespace turan {

// Named constructors for the graph families the library works with.
// Vertex numbering is fixed (path/star order first, then attached roots in
// attachment order) so that outputs are reproducible byte for byte.

// k-star rooted on its leaves: centre 0, leaves 1..k.
inline RootedGraph construct_star(int k) {
  if (k < 1) throw Error(ErrorKind::bad_parameters, "star needs k >= 1");
  std::vector<std::pair<int, int>> edges;
  std::vector<int> roots;
  for (int i = 1; i <= k; ++i) {
    edges.emplace_back(0, i);
    roots.push_back(i);
  }
  return make_graph(k + 1, edges, roots);
}

// Path of length m (m edges), vertices 0..m in order, rooted at both ends.
inline RootedGraph construct_path(int m) {
  if (m < 2)
    throw Error(ErrorKind::bad_parameters,
                "rooted path needs length >= 2 (both endpoints are roots)");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i) edges.emplace_back(i, i + 1);
  return make_graph(m + 1, edges, {0, m});
}

// Unrooted cycle C_k, vertices in cycle order.
inline RootedGraph construct_cycle(int k) {
  if (k < 3) throw Error(ErrorKind::bad_parameters, "cycle needs k >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
  return make_graph(k, edges, {});
}

// Unrooted K_{s,t}: left side 0..s-1, right side s..s+t-1.
inline RootedGraph construct_complete_bipartite(int s, int t) {
  if (s < 1 || t < 1)
    throw Error(ErrorKind::bad_parameters, "complete bipartite needs s,t >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < t; ++j) edges.emplace_back(i, s + j);
  return make_graph(s + t, edges, {});
}

// Balanced tree T_{a,b}: an a-vertex path 0..a-1 plus b-a+1 root leaves.
// For b in [a-1, 2a-2] the leaves sit at the floor-formula positions
// 1, floor(1 + a/(b-a)), ..., a (1-indexed), with the b = a convention of a
// single leaf at path vertex 1; larger b adds one leaf per path vertex for
// each multiple of a. Leaves are numbered from a, grouped by path vertex.
inline RootedGraph construct_T(int a, int b) {
  if (a < 2 || b < a)
    throw Error(ErrorKind::bad_parameters, "T family needs a >= 2, b >= a");
  int b0 = b;
  int extra = 0;
  while (b0 >= 2 * a - 1) {
    b0 -= a;
    ++extra;
  }
  std::vector<int> leaf_count(a, extra);
  if (b0 == a) {
    leaf_count[0] += 1;
  } else if (b0 > a) {
    for (int j = 0; j <= b0 - a - 1; ++j)
      leaf_count[(b0 - a + j * a) / (b0 - a) - 1] += 1;  // floor(1 + j*a/(b0-a)), 0-indexed
    leaf_count[a - 1] += 1;
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < a; ++i) edges.emplace_back(i, i + 1);
  std::vector<int> roots;
  int next = a;
  for (int p = 0; p < a; ++p)
    for (int c = 0; c < leaf_count[p]; ++c) {
      edges.emplace_back(p, next);
      roots.push_back(next);
      ++next;
    }
  return make_graph(next, edges, roots);
}

// D_{t,s}: a t-star (centre 0, star leaves 1..t) with s root leaves attached
// to each of the t+1 star vertices; rooted on the leaves. Cluster j is the
// group of s roots on star vertex j; cluster 0 sits on the centre and its
// members are the core vertices.
inline RootedGraph construct_D(int t, int s) {
  if (t < 1 || s < 1) throw Error(ErrorKind::bad_parameters, "D family needs s,t >= 1");
  std::vector<std::pair<int, int>> edges;
  std::vector<int> roots;
  for (int i = 1; i <= t; ++i) edges.emplace_back(0, i);
  int next = t + 1;
  for (int j = 0; j <= t; ++j)
    for (int c = 0; c < s; ++c) {
      edges.emplace_back(j, next);
      roots.push_back(next);
      ++next;
    }
  RootedGraph g = make_graph(next, edges, roots);
  g.labels[0] = "centre";
  for (int c = 0; c < s; ++c) g.labels[t + 1 + c] = "core";
  for (int j = 1; j <= t; ++j)
    for (int c = 0; c < s; ++c)
      g.labels[t + 1 + j * s + c] = "cluster:" + std::to_string(j);
  return g;
}

// H_{t,s}: a t-star with every edge subdivided s times and one extra leaf on
// the centre; rooted on the leaves. Centre 0; arm i has internal vertices
// (i-1)s+1..is; arm leaves st+1..st+t; the centre's pendant leaf is last.
inline RootedGraph construct_H(int t, int s) {
  if (t < 1 || s < 1) throw Error(ErrorKind::bad_parameters, "H family needs s,t >= 1");
  std::vector<std::pair<int, int>> edges;
  std::vector<int> roots;
  for (int i = 1; i <= t; ++i) {
    int prev = 0;
    for (int j = 0; j < s; ++j) {
      int v = (i - 1) * s + 1 + j;
      edges.emplace_back(prev, v);
      prev = v;
    }
    int leaf = s * t + i;
    edges.emplace_back(prev, leaf);
    roots.push_back(leaf);
  }
  int pendant = s * t + t + 1;
  edges.emplace_back(0, pendant);
  roots.push_back(pendant);
  return make_graph(pendant + 1, edges, roots);
}

// Theta graph: ell internally disjoint paths of length m between two shared
// endpoints, i.e. the blow-up of the rooted path.
inline RootedGraph construct_theta(int m, int ell) {
  if (ell < 1) throw Error(ErrorKind::bad_parameters, "theta needs ell >= 1");
  return blow_up(construct_path(m), ell);
}

}  // namespace turan
