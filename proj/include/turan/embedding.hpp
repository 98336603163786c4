#pragma once

#include <vector>

#include "turan/graph.hpp"
#include "turan/host.hpp"

namespace turan {

// Injective, edge-preserving vertex map from a pattern into a host. This is
// the certificate object for every containment claim; verify() is the
// independent check every producer runs before returning one.
struct Embedding {
  std::vector<int> map;  // pattern vertex -> host vertex
};

inline bool verify_embedding(const RootedGraph& pattern, const HostGraph& host,
                             const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != pattern.n) return false;
  std::vector<char> used(host.n, 0);
  for (int img : map) {
    if (img < 0 || img >= host.n) return false;
    if (used[img]) return false;
    used[img] = 1;
  }
  for (auto [u, v] : pattern.edges)
    if (!host.has_edge(map[u], map[v])) return false;
  return true;
}

}  // namespace turan
