#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "turan/embedding.hpp"
#include "turan/graph.hpp"
#include "turan/host.hpp"

namespace turan {

struct SearchBudget {
  long long node_limit = 10'000'000;
  long long time_limit_ms = 60'000;
  std::uint64_t seed = 0;
};

inline SearchBudget exhaustive_budget() {
  SearchBudget b;
  b.node_limit = std::numeric_limits<long long>::max();
  b.time_limit_ms = std::numeric_limits<long long>::max();
  return b;
}

namespace detail {

// Static matching order: start at the highest-degree pattern vertex, then
// greedily prefer vertices with the most already-ordered neighbors (ties by
// degree, then index). Keeps the search connected where the pattern is.
inline std::vector<int> matching_order(const RootedGraph& pattern) {
  int np = pattern.n;
  auto deg = degrees(pattern);
  auto adj = adjacency(pattern);
  std::vector<int> order;
  std::vector<char> placed(np, 0);
  std::vector<int> anchored(np, 0);
  for (int step = 0; step < np; ++step) {
    int best = -1;
    for (int v = 0; v < np; ++v) {
      if (placed[v]) continue;
      if (best == -1 || anchored[v] > anchored[best] ||
          (anchored[v] == anchored[best] && deg[v] > deg[best]))
        best = v;
    }
    placed[best] = 1;
    order.push_back(best);
    for (int w : adj[best]) ++anchored[w];
  }
  return order;
}

}  // namespace detail

// Backtracking subgraph search (plain, not induced; pattern roots are
// ignored). Returns an embedding if one exists, nullopt if the exhaustive
// search finishes without one, and throws BudgetExceeded if the budget runs
// out inconclusively. Deterministic: fixed matching order, host candidates
// in increasing index order.
inline std::optional<Embedding> find_subgraph(const HostGraph& host,
                                              const RootedGraph& pattern,
                                              const SearchBudget& budget = {}) {
  if (pattern.n > host.n) return std::nullopt;
  auto order = detail::matching_order(pattern);
  auto pdeg = degrees(pattern);
  auto padj = adjacency(pattern);

  std::vector<int> map(pattern.n, -1);
  std::vector<char> used(host.n, 0);
  long long nodes = 0;
  const auto start = std::chrono::steady_clock::now();
  bool out_of_budget = false;

  auto expired = [&]() {
    if (nodes > budget.node_limit) return true;
    if ((nodes & 0x3ff) == 0) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
      if (ms > budget.time_limit_ms) return true;
    }
    return false;
  };

  auto backtrack = [&](auto&& self, int pos) -> bool {
    if (pos == pattern.n) return true;
    int u = order[pos];
    for (int v = 0; v < host.n; ++v) {
      if (used[v] || host.degree(v) < pdeg[u]) continue;
      bool ok = true;
      for (int w : padj[u]) {
        if (map[w] != -1 && !host.has_edge(v, map[w])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      ++nodes;
      if (expired()) {
        out_of_budget = true;
        return false;
      }
      map[u] = v;
      used[v] = 1;
      if (self(self, pos + 1)) return true;
      map[u] = -1;
      used[v] = 0;
      if (out_of_budget) return false;
    }
    return false;
  };

  bool found = backtrack(backtrack, 0);
  if (!found && out_of_budget)
    throw Error(ErrorKind::budget_exceeded,
                "subgraph search truncated after " + std::to_string(nodes) + " nodes");
  if (!found) return std::nullopt;
  Embedding emb{map};
  if (!verify_embedding(pattern, host, emb.map))
    throw Error(ErrorKind::internal_stuck, "search produced an invalid embedding");
  return emb;
}

}  // namespace turan
