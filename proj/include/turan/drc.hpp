#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "turan/host.hpp"

namespace turan {

struct DrcResult {
  int u = -1;                // the selected vertex of B
  std::vector<int> a_prime;  // subset of Gamma(u) n A, sorted
};

namespace detail {

// Enumerates s-subsets of `pool` and calls fn(subset); fn returns false to
// stop early.
template <typename Fn>
inline bool for_each_subset(const std::vector<int>& pool, int s, Fn&& fn) {
  int n = static_cast<int>(pool.size());
  if (s > n) return true;
  std::vector<int> idx(s);
  for (int i = 0; i < s; ++i) idx[i] = i;
  std::vector<int> subset(s);
  for (;;) {
    for (int i = 0; i < s; ++i) subset[i] = pool[idx[i]];
    if (!fn(subset)) return false;
    int i = s - 1;
    while (i >= 0 && idx[i] == n - s + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

// Dependent random choice, derandomised. Works in the bipartite cross graph
// host[A,B]: every vertex of A must have degree >= d into B, with
// d * s! >= 2 t |A|^(s-1). Scans the vertices of B in index order; for each
// candidate u it greedily deletes, from Gamma(u) n A, the vertex lying in the
// most s-subsets with fewer than t common neighbors in B (ties to the lowest
// index) until none remain, and returns the first u whose surviving set
// reaches ceil(d|A| / (2|B|)). The averaging argument guarantees some u
// qualifies, so a full scan replaces the random choice.
inline DrcResult dependent_random_choice(const HostGraph& host,
                                         const std::vector<int>& a_in,
                                         const std::vector<int>& b_in,
                                         long long d, int s, int t) {
  host.check_set(a_in);
  host.check_set(b_in);
  if (a_in.empty() || b_in.empty())
    throw Error(ErrorKind::bad_parameters, "A and B must be non-empty");
  if (d < 1 || s < 1 || t < 1)
    throw Error(ErrorKind::bad_parameters, "d, s, t must be positive");
  std::vector<int> a = a_in, b = b_in;
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  std::vector<char> in_a(host.n, 0), in_b(host.n, 0);
  for (int v : a) in_a[v] = 1;
  for (int v : b) {
    if (in_a[v]) throw Error(ErrorKind::bad_parameters, "A and B must be disjoint");
    in_b[v] = 1;
  }

  // degree hypothesis
  for (int v : a) {
    long long deg_b = 0;
    for (int w : host.adj[v]) deg_b += in_b[w];
    if (deg_b < d)
      throw Error(ErrorKind::hypothesis_violated,
                  "vertex " + std::to_string(v) + " has degree " +
                      std::to_string(deg_b) + " < d = " + std::to_string(d),
                  {v});
  }
  // threshold hypothesis: d * s! >= 2 t |A|^(s-1), in exact integers
  {
    __int128 lhs = d;
    for (int i = 2; i <= s; ++i) lhs *= i;
    __int128 rhs = 2 * static_cast<__int128>(t);
    for (int i = 0; i < s - 1; ++i) rhs *= static_cast<long long>(a.size());
    if (lhs < rhs)
      throw Error(ErrorKind::hypothesis_violated,
                  "d = " + std::to_string(d) + " below the 2t|A|^(s-1)/s! threshold");
  }

  auto common_degree_in_b = [&](const std::vector<int>& set) {
    int count = 0;
    for (int v : b) {
      bool all = true;
      for (int w : set)
        if (!host.has_edge(v, w)) {
          all = false;
          break;
        }
      count += all;
    }
    return count;
  };

  // acceptance bound: |A'| >= d|A| / (2|B|)  <=>  2|B||A'| >= d|A|
  const long long need_lhs = d * static_cast<long long>(a.size());

  for (int u : b) {
    std::vector<int> cand;
    for (int v : a)
      if (host.has_edge(u, v)) cand.push_back(v);

    for (;;) {
      if (static_cast<int>(cand.size()) < s) break;  // no s-subsets left
      std::vector<long long> bad_count(cand.size(), 0);
      long long bad_total = 0;
      detail::for_each_subset(cand, s, [&](const std::vector<int>& sub) {
        if (common_degree_in_b(sub) < t) {
          ++bad_total;
          for (int v : sub) {
            auto it = std::lower_bound(cand.begin(), cand.end(), v);
            ++bad_count[it - cand.begin()];
          }
        }
        return true;
      });
      if (bad_total == 0) break;
      int victim = 0;
      for (size_t i = 1; i < cand.size(); ++i)
        if (bad_count[i] > bad_count[victim]) victim = static_cast<int>(i);
      cand.erase(cand.begin() + victim);
    }

    if (2 * static_cast<long long>(b.size()) * static_cast<long long>(cand.size()) >=
        need_lhs)
      return {u, cand};
  }
  throw Error(ErrorKind::internal_stuck,
              "no vertex of B met the averaging bound despite valid hypotheses");
}

}  // namespace turan
