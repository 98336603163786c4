#pragma once

#include <algorithm>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

// Backtracking isomorphism test with degree / root-status pruning.
// Intended for graphs up to 64 vertices.
inline bool is_isomorphic(const RootedGraph& f, const RootedGraph& g,
                          bool respect_roots) {
  if (f.n > 64 || g.n > 64)
    throw Error(ErrorKind::budget_exceeded, "isomorphism test capped at 64 vertices");
  if (f.n != g.n || f.edges.size() != g.edges.size()) return false;
  if (respect_roots && f.roots.size() != g.roots.size()) return false;

  auto degf = degrees(f);
  auto degg = degrees(g);
  {
    auto a = degf, b = degg;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  auto adjf = adjacency(f);
  auto adjg = adjacency(g);

  // Map vertices of f in order of decreasing degree.
  std::vector<int> order(f.n);
  for (int i = 0; i < f.n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return degf[a] != degf[b] ? degf[a] > degf[b] : a < b; });

  std::vector<int> map(f.n, -1), used(g.n, 0);
  auto backtrack = [&](auto&& self, int pos) -> bool {
    if (pos == f.n) return true;
    int u = order[pos];
    for (int v = 0; v < g.n; ++v) {
      if (used[v] || degf[u] != degg[v]) continue;
      if (respect_roots && f.is_root(u) != g.is_root(v)) continue;
      bool ok = true;
      for (int w : adjf[u]) {
        if (map[w] == -1) continue;
        if (!g.has_edge(v, map[w])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      // mapped f-edges must be exactly matched: also reject v adjacent to an
      // image of a non-neighbour of u
      for (int x = 0; ok && x < f.n; ++x)
        if (map[x] != -1 && g.has_edge(v, map[x]) && !f.has_edge(u, x)) ok = false;
      if (!ok) continue;
      map[u] = v;
      used[v] = 1;
      if (self(self, pos + 1)) return true;
      map[u] = -1;
      used[v] = 0;
    }
    return false;
  };
  return backtrack(backtrack, 0);
}

}  // namespace turan
