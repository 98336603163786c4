#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "turan/graph.hpp"
#include "turan/host.hpp"
#include "turan/search.hpp"

namespace turan {

struct ExtremalResult {
  int n = 0;
  long long max_edges = 0;
  RootedGraph witness;
  bool certified = false;  // false: search truncated, max_edges is a lower bound only
};

namespace detail {

// Does the graph given by `mat` contain the pattern using the edge (eu, ev)?
// Only embeddings through the new edge need checking when edges are added one
// at a time, which is what both the greedy packer and the extremal search do.
inline bool contains_through_edge(const std::vector<std::vector<char>>& mat,
                                  const RootedGraph& pattern,
                                  const std::vector<std::vector<int>>& padj,
                                  int eu, int ev) {
  int np = pattern.n;
  int nh = static_cast<int>(mat.size());
  if (np > nh) return false;
  std::vector<int> map(np, -1);
  std::vector<char> used(nh, 0);

  auto extend = [&](auto&& self) -> bool {
    // next unmapped pattern vertex, preferring one with a mapped neighbor
    int u = -1;
    for (int v = 0; v < np; ++v) {
      if (map[v] != -1) continue;
      bool anchored = false;
      for (int w : padj[v]) anchored |= map[w] != -1;
      if (anchored) {
        u = v;
        break;
      }
      if (u == -1) u = v;
    }
    if (u == -1) return true;
    for (int hv = 0; hv < nh; ++hv) {
      if (used[hv]) continue;
      bool ok = true;
      for (int w : padj[u])
        if (map[w] != -1 && !mat[hv][map[w]]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      map[u] = hv;
      used[hv] = 1;
      if (self(self)) return true;
      map[u] = -1;
      used[hv] = 0;
    }
    return false;
  };

  for (auto [p, q] : pattern.edges) {
    for (int flip = 0; flip < 2; ++flip) {
      int hp = flip ? ev : eu;
      int hq = flip ? eu : ev;
      map.assign(np, -1);
      used.assign(nh, 0);
      map[p] = hp;
      map[q] = hq;
      used[hp] = used[hq] = 1;
      if (extend(extend)) return true;
    }
  }
  return false;
}

}  // namespace detail

// True iff the host contains no copy of F; exhaustive by default.
inline bool is_F_free(const HostGraph& host, const RootedGraph& f,
                      const SearchBudget& budget = exhaustive_budget()) {
  return !find_subgraph(host, f, budget).has_value();
}

// Edge count of a randomized maximal F-free graph on n vertices: candidate
// edges are shuffled with the given seed and added whenever they close no
// copy of F. Always a lower bound for the extremal number.
inline long long greedy_lower_bound(int n, const RootedGraph& f, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorKind::bad_parameters, "n must be positive");
  if (f.edges.empty()) return 0;  // an edgeless pattern embeds in anything
  std::vector<std::pair<int, int>> cand;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) cand.emplace_back(u, v);
  // Fisher-Yates with an explicit draw so results are stable across platforms.
  std::uint64_t state = seed ^ 0x9e3779b97f4a7c15ull;
  auto next = [&]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  for (size_t i = cand.size(); i > 1; --i)
    std::swap(cand[i - 1], cand[next() % i]);

  auto padj = adjacency(f);
  std::vector<std::vector<char>> mat(n, std::vector<char>(n, 0));
  long long count = 0;
  for (auto [u, v] : cand) {
    mat[u][v] = mat[v][u] = 1;
    if (detail::contains_through_edge(mat, f, padj, u, v)) {
      mat[u][v] = mat[v][u] = 0;
    } else {
      ++count;
    }
  }
  return count;
}

// Exact extremal number by branch-and-bound over edge subsets: candidate
// edges in lexicographic order, include-first, pruned by (a) the remaining
// candidate count against the incumbent, (b) a vertex-introduction rule that
// admits exactly one labeling per staircase class (every graph has a BFS
// relabeling whose sorted edge list introduces new vertices consecutively),
// and (c) the incremental containment check on each inclusion. The first
// optimum in this order is the witness, so results are deterministic. If the
// budget runs out the best incumbent is returned with certified = false.
inline ExtremalResult extremal_number(int n, const RootedGraph& f,
                                      const SearchBudget& budget = {}) {
  if (n < 1) throw Error(ErrorKind::bad_parameters, "n must be positive");
  if (f.edges.empty())
    throw Error(ErrorKind::bad_parameters,
                "an edgeless pattern is contained in every graph");

  ExtremalResult result;
  result.n = n;
  if (f.n > n) {
    // no injective image fits: the complete graph is trivially F-free
    std::vector<std::pair<int, int>> all;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
    result.max_edges = static_cast<long long>(all.size());
    result.witness = make_graph(n, all, {});
    result.certified = true;
    return result;
  }

  std::vector<std::pair<int, int>> cand;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) cand.emplace_back(u, v);
  const int m = static_cast<int>(cand.size());

  auto padj = adjacency(f);
  std::vector<std::vector<char>> mat(n, std::vector<char>(n, 0));
  std::vector<std::pair<int, int>> chosen;
  long long best = greedy_lower_bound(n, f, budget.seed) - 1;
  std::vector<std::pair<int, int>> best_edges;
  bool have_witness = false;

  long long nodes = 0;
  bool truncated = false;
  const auto start = std::chrono::steady_clock::now();
  auto expired = [&]() {
    if (nodes > budget.node_limit) return true;
    if ((nodes & 0xfff) == 0) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
      if (ms > budget.time_limit_ms) return true;
    }
    return false;
  };

  auto dfs = [&](auto&& self, int idx, int hi) -> void {
    if (truncated) return;
    if (static_cast<long long>(chosen.size()) + (m - idx) <= best) return;
    if (idx == m) {
      best = static_cast<long long>(chosen.size());
      best_edges = chosen;
      have_witness = true;
      return;
    }
    ++nodes;
    if (expired()) {
      truncated = true;
      return;
    }
    auto [u, v] = cand[idx];
    bool staircase_ok = u <= hi + 1 && v <= std::max(hi, u) + 1;
    if (staircase_ok) {
      mat[u][v] = mat[v][u] = 1;
      if (!detail::contains_through_edge(mat, f, padj, u, v)) {
        chosen.push_back(cand[idx]);
        self(self, idx + 1, std::max(hi, v));
        chosen.pop_back();
      }
      mat[u][v] = mat[v][u] = 0;
    }
    self(self, idx + 1, hi);
  };
  dfs(dfs, 0, -1);

  if (!have_witness) {
    // The greedy incumbent was already optimal; rerun it to materialize the
    // witness edges deterministically.
    std::vector<std::pair<int, int>> greedy_edges;
    std::vector<std::vector<char>> gm(n, std::vector<char>(n, 0));
    std::vector<std::pair<int, int>> order = cand;
    std::uint64_t state = budget.seed ^ 0x9e3779b97f4a7c15ull;
    auto next = [&]() {
      state ^= state << 13;
      state ^= state >> 7;
      state ^= state << 17;
      return state;
    };
    for (size_t i = order.size(); i > 1; --i)
      std::swap(order[i - 1], order[next() % i]);
    for (auto [u, v] : order) {
      gm[u][v] = gm[v][u] = 1;
      if (detail::contains_through_edge(gm, f, padj, u, v))
        gm[u][v] = gm[v][u] = 0;
      else
        greedy_edges.emplace_back(u, v);
    }
    best = static_cast<long long>(greedy_edges.size());
    best_edges = std::move(greedy_edges);
  }

  result.max_edges = best;
  result.witness = make_graph(n, best_edges, {});
  result.certified = !truncated;

  // re-verify the witness before returning it
  if (!is_F_free(HostGraph(result.witness), f))
    throw Error(ErrorKind::internal_stuck, "extremal witness contains the pattern");
  return result;
}

struct FitPoint {
  int n = 0;
  long long ex = 0;
  bool certified = false;
};

struct FitResult {
  double slope = 0.0;
  std::vector<FitPoint> points;
  // Desk-scale caveat, attached to every rendering of the fit.
  std::string note = "diagnostic only: asymptotics are not certifiable at desk scale";
};

// Least-squares slope of log(ex) against log(n).
inline FitResult exponent_fit(const RootedGraph& f, const std::vector<int>& n_values,
                              const SearchBudget& budget = {}) {
  if (n_values.size() < 2)
    throw Error(ErrorKind::bad_parameters, "need at least two n values");
  FitResult fit;
  for (int n : n_values) {
    ExtremalResult r = extremal_number(n, f, budget);
    if (r.max_edges == 0)
      throw Error(ErrorKind::degenerate_fit,
                  "ex(" + std::to_string(n) + ", F) = 0 has no log");
    fit.points.push_back({n, r.max_edges, r.certified});
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& p : fit.points) {
    double x = std::log(static_cast<double>(p.n));
    double y = std::log(static_cast<double>(p.ex));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double k = static_cast<double>(fit.points.size());
  fit.slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  return fit;
}

}  // namespace turan
