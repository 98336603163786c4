#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "turan/host.hpp"

namespace turan {

struct Star {
  int centre = 0;
  std::vector<int> leaves;
};

namespace detail {

// Kuhn augmenting-path matching on the k-fold clone of A: clone i*k+c of
// A-vertex i competes for the neighbors of i in B. A perfect matching of all
// clones exists iff |Gamma(S)| >= k|S| for every S (Hall), and then the
// clones of each vertex form its k-star.
struct CloneMatcher {
  int k;
  std::vector<std::vector<int>> nbr;  // A-index -> B-indices
  std::vector<int> match_clone;       // B-index -> clone or -1
  std::vector<int> match_b;           // clone -> B-index or -1
  std::vector<int> visit;
  int stamp = 0;

  bool augment(int clone) {
    int a = clone / k;
    for (int b : nbr[a]) {
      if (visit[b] == stamp) continue;
      visit[b] = stamp;
      if (match_clone[b] == -1 || augment(match_clone[b])) {
        match_clone[b] = clone;
        match_b[clone] = b;
        return true;
      }
    }
    return false;
  }
};

}  // namespace detail

// Vertex-disjoint k-stars with centres covering A and leaves in B, built
// from the cross edges of host[A,B]. If the expansion condition
// k|S| <= |Gamma(S) n B| fails, throws ExpansionFails carrying a violating
// set S as payload.
inline std::vector<Star> star_matching(const HostGraph& host,
                                       const std::vector<int>& a,
                                       const std::vector<int>& b, int k) {
  if (k < 1) throw Error(ErrorKind::bad_parameters, "star size must be >= 1");
  host.check_set(a);
  host.check_set(b);
  std::vector<char> in_a(host.n, 0), in_b(host.n, 0);
  for (int v : a) in_a[v] = 1;
  for (int v : b) {
    if (in_a[v])
      throw Error(ErrorKind::bad_parameters, "A and B must be disjoint");
    in_b[v] = 1;
  }

  int na = static_cast<int>(a.size());
  int nb = static_cast<int>(b.size());
  std::vector<int> b_index(host.n, -1);
  for (int i = 0; i < nb; ++i) b_index[b[i]] = i;

  detail::CloneMatcher m;
  m.k = k;
  m.nbr.resize(na);
  for (int i = 0; i < na; ++i)
    for (int w : host.adj[a[i]])
      if (b_index[w] >= 0) m.nbr[i].push_back(b_index[w]);
  m.match_clone.assign(nb, -1);
  m.match_b.assign(na * k, -1);
  m.visit.assign(nb, -1);

  for (int clone = 0; clone < na * k; ++clone) {
    ++m.stamp;
    if (!m.augment(clone)) {
      // Hall violator: A-vertices whose clones are reachable by alternating
      // paths from the failed clone. All their neighbors were visited, and
      // those neighbors biject with strictly fewer matched clones.
      std::vector<char> in_s(na, 0);
      in_s[clone / k] = 1;
      for (int bi = 0; bi < nb; ++bi)
        if (m.visit[bi] == m.stamp && m.match_clone[bi] != -1)
          in_s[m.match_clone[bi] / k] = 1;
      std::vector<int> violator;
      for (int i = 0; i < na; ++i)
        if (in_s[i]) violator.push_back(a[i]);
      throw Error(ErrorKind::expansion_fails,
                  "no k-star cover: |Gamma(S)| < " + std::to_string(k) +
                      "|S| for |S| = " + std::to_string(violator.size()),
                  violator);
    }
  }

  std::vector<Star> stars(na);
  for (int i = 0; i < na; ++i) stars[i].centre = a[i];
  for (int clone = 0; clone < na * k; ++clone)
    stars[clone / k].leaves.push_back(b[m.match_b[clone]]);
  for (auto& st : stars) std::sort(st.leaves.begin(), st.leaves.end());
  return stars;
}

}  // namespace turan
