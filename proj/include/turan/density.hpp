#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "turan/graph.hpp"
#include "turan/maxflow.hpp"
#include "turan/rational.hpp"

namespace turan {

// Density of a vertex subset: (number of edges incident with S) / |S|.
// S must consist of non-root vertices. With an empty root set every vertex
// counts as non-root.
inline Rational rho_subset(const RootedGraph& g, const std::vector<int>& subset) {
  if (subset.empty()) throw Error(ErrorKind::empty_subset, "rho of empty set");
  std::vector<char> in_set(g.n, 0);
  for (int v : subset) {
    if (v < 0 || v >= g.n)
      throw Error(ErrorKind::out_of_range_vertex,
                  "subset vertex " + std::to_string(v));
    if (g.is_root(v))
      throw Error(ErrorKind::subset_touches_roots,
                  "vertex " + std::to_string(v) + " is a root");
    in_set[v] = 1;
  }
  long long incident = 0;
  long long size = 0;
  for (int v = 0; v < g.n; ++v) size += in_set[v];
  for (auto [u, v] : g.edges)
    if (in_set[u] || in_set[v]) ++incident;
  return Rational(incident, size);
}

// rho(F): density of the full non-root set.
inline Rational rho(const RootedGraph& g) {
  return rho_subset(g, g.non_roots());
}

struct BalanceReport {
  bool balanced = false;
  // Present iff not balanced: a set of minimum density together with its rho.
  std::optional<std::pair<std::vector<int>, Rational>> witness;
};

// Exhaustive balancedness test: enumerates every non-empty subset of the
// non-root vertices in Gray-code order, maintaining the incident-edge count
// incrementally. Exact; capped by `budget` non-root vertices.
inline BalanceReport is_balanced(const RootedGraph& g, int budget = 24) {
  auto nr = g.non_roots();
  int k = static_cast<int>(nr.size());
  if (k > budget || k >= 63)
    throw Error(ErrorKind::budget_exceeded,
                std::to_string(k) + " non-root vertices exceed enumeration budget " +
                    std::to_string(budget));

  // Index the non-roots; precompute degree and non-root adjacency masks.
  std::vector<int> index(g.n, -1);
  for (int i = 0; i < k; ++i) index[nr[i]] = i;
  std::vector<int> deg(k, 0);
  std::vector<std::uint64_t> adj_mask(k, 0);
  for (auto [u, v] : g.edges) {
    if (index[u] >= 0) ++deg[index[u]];
    if (index[v] >= 0) ++deg[index[v]];
    if (index[u] >= 0 && index[v] >= 0) {
      adj_mask[index[u]] |= std::uint64_t{1} << index[v];
      adj_mask[index[v]] |= std::uint64_t{1} << index[u];
    }
  }

  long long whole_edges = 0;
  for (auto [u, v] : g.edges)
    if (index[u] >= 0 || index[v] >= 0) ++whole_edges;
  const Rational whole(whole_edges, k);

  // Gray-code enumeration: step i toggles bit ctz(i).
  std::uint64_t cur = 0;
  long long e_cur = 0;
  long long best_e = whole_edges;
  long long best_size = k;
  std::uint64_t best_mask = 0;  // 0 = "the whole set", only replaced by strictly denser-below sets
  const std::uint64_t total = std::uint64_t{1} << k;
  for (std::uint64_t i = 1; i < total; ++i) {
    int b = std::countr_zero(i);
    std::uint64_t bit = std::uint64_t{1} << b;
    if (cur & bit) {
      cur ^= bit;
      e_cur -= deg[b] - std::popcount(adj_mask[b] & cur);
    } else {
      e_cur += deg[b] - std::popcount(adj_mask[b] & cur);
      cur ^= bit;
    }
    long long size = std::popcount(cur);
    // strict fraction compare: e_cur/size < best_e/best_size
    if (e_cur * best_size < best_e * size) {
      best_e = e_cur;
      best_size = size;
      best_mask = cur;
    }
  }

  BalanceReport rep;
  if (best_mask == 0) {
    rep.balanced = true;
    return rep;
  }
  std::vector<int> witness_set;
  for (int i = 0; i < k; ++i)
    if (best_mask & (std::uint64_t{1} << i)) witness_set.push_back(nr[i]);
  rep.balanced = false;
  rep.witness = {witness_set, Rational(best_e, best_size)};
  return rep;
}

namespace detail {

// For fixed lambda = p/q, maximizes q*e(S) + sum_{v in S} (p - q*deg(v)) over
// subsets S of the non-roots, via min-cut on the usual selection network.
// Returns {max value, a maximizer}.
inline std::pair<long long, std::vector<int>> best_violator(
    const RootedGraph& g, const std::vector<int>& nr,
    const std::vector<int>& deg, long long p, long long q) {
  int k = static_cast<int>(nr.size());
  std::vector<int> index(g.n, -1);
  for (int i = 0; i < k; ++i) index[nr[i]] = i;
  std::vector<std::pair<int, int>> inner;  // edges with both ends non-root
  for (auto [u, v] : g.edges)
    if (index[u] >= 0 && index[v] >= 0) inner.emplace_back(index[u], index[v]);

  int m = static_cast<int>(inner.size());
  // nodes: 0 = source, 1 = sink, 2..2+k-1 vertices, then edge nodes
  Dinic net(2 + k + m);
  const long long inf = std::numeric_limits<long long>::max() / 4;
  long long positive_total = 0;
  for (int i = 0; i < k; ++i) {
    long long w = p - q * deg[nr[i]];
    if (w > 0) {
      net.add_edge(0, 2 + i, w);
      positive_total += w;
    } else if (w < 0) {
      net.add_edge(2 + i, 1, -w);
    }
  }
  for (int j = 0; j < m; ++j) {
    net.add_edge(0, 2 + k + j, q);
    positive_total += q;
    net.add_edge(2 + k + j, 2 + inner[j].first, inf);
    net.add_edge(2 + k + j, 2 + inner[j].second, inf);
  }
  long long cut = net.max_flow(0, 1);
  auto side = net.min_cut_side(0);
  std::vector<int> chosen;
  for (int i = 0; i < k; ++i)
    if (side[2 + i]) chosen.push_back(nr[i]);
  return {positive_total - cut, chosen};
}

}  // namespace detail

// Exact minimum of rho_F(S) over all non-empty subsets of the non-roots,
// with an attaining set. Dinkelbach iteration over the min-cut oracle above;
// no subset enumeration, so it handles graphs the budget of is_balanced
// cannot. This is the parametric min-ratio extension; is_balanced stays the
// reference enumeration.
inline std::pair<Rational, std::vector<int>> min_density(const RootedGraph& g) {
  auto nr = g.non_roots();
  if (nr.empty()) throw Error(ErrorKind::empty_subset, "graph has no non-root vertices");
  auto deg = degrees(g);

  Rational lambda = rho(g);
  std::vector<int> best = nr;
  for (;;) {
    auto [value, set] = detail::best_violator(g, nr, deg, lambda.num, lambda.den);
    if (value <= 0 || set.empty()) return {lambda, best};
    Rational r = rho_subset(g, set);
    // The oracle found a set with rho < lambda; tighten and repeat.
    if (!(r < lambda))
      throw Error(ErrorKind::internal_stuck, "min-ratio iteration failed to descend");
    lambda = r;
    best = std::move(set);
  }
}

}  // namespace turan
