#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "turan/drc.hpp"
#include "turan/embedding.hpp"
#include "turan/families.hpp"
#include "turan/host.hpp"
#include "turan/transforms.hpp"

namespace turan {

struct LemmaEmbedding {
  RootedGraph pattern;
  Embedding embedding;
};

// Constructive embedding of D_{t,s}^ell, with s = |W|. Sets A = N(W) \ W and
// checks the two hypotheses exhaustively: |A| >= st + ell, and every
// (s+1)-subset S of A has |N(S) \ (A u W)| >= ell*t. Then embeds exactly as
// the hypotheses allow: cores onto W, centres and non-core roots into A, and
// each remaining vertex greedily into the common neighborhood of its already
// embedded neighbors, keeping the map injective. The counting guarantees the
// greedy step never runs dry; if it does, that is a bug (InternalStuck).
inline LemmaEmbedding embed_D_blowup(const HostGraph& host,
                                     const std::vector<int>& w_in, int ell,
                                     int t) {
  host.check_set(w_in);
  if (w_in.empty() || ell < 1 || t < 1)
    throw Error(ErrorKind::bad_parameters, "need non-empty W and ell, t >= 1");
  std::vector<int> w = w_in;
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  const int s = static_cast<int>(w.size());

  std::vector<int> a;
  {
    auto common = host.common_neighborhood(w);
    std::vector<char> in_w(host.n, 0);
    for (int v : w) in_w[v] = 1;
    for (int v : common)
      if (!in_w[v]) a.push_back(v);
  }
  if (static_cast<int>(a.size()) < s * t + ell)
    throw Error(ErrorKind::hypothesis_violated,
                "|N(W)| = " + std::to_string(a.size()) + " < st + ell = " +
                    std::to_string(s * t + ell),
                a);

  std::vector<char> in_aw(host.n, 0);
  for (int v : a) in_aw[v] = 1;
  for (int v : w) in_aw[v] = 1;
  bool subsets_ok = detail::for_each_subset(a, s + 1, [&](const std::vector<int>& sub) {
    int outside = 0;
    for (int v = 0; v < host.n; ++v) {
      if (in_aw[v]) continue;
      bool all = true;
      for (int x : sub)
        if (!host.has_edge(v, x)) {
          all = false;
          break;
        }
      outside += all;
    }
    if (outside < ell * t)
      throw Error(ErrorKind::hypothesis_violated,
                  "an (s+1)-subset of N(W) has only " + std::to_string(outside) +
                      " common neighbors outside A u W (needs " +
                      std::to_string(ell * t) + ")",
                  sub);
    return true;
  });
  (void)subsets_ok;

  // Pattern layout (see construct_D and blow_up): centre of copy c is
  // n0 + (c-1)(t+1) for c >= 1 and 0 for copy 0; star leaf j of copy c
  // shifts by j; cluster j occupies roots t+1+js .. t+(j+1)s.
  RootedGraph pattern = blow_up(construct_D(t, s), ell);
  const int n0 = (t + 1) * (s + 1);
  auto centre_of = [&](int c) { return c == 0 ? 0 : n0 + (c - 1) * (t + 1); };
  auto leaf_of = [&](int c, int j) { return centre_of(c) + j; };
  auto cluster_vertex = [&](int j, int i) { return t + 1 + j * s + i; };

  std::vector<int> map(pattern.n, -1);
  std::vector<char> used(host.n, 0);
  auto assign = [&](int pv, int hv) {
    map[pv] = hv;
    used[hv] = 1;
  };

  for (int i = 0; i < s; ++i) assign(cluster_vertex(0, i), w[i]);  // cores
  int next_a = 0;
  for (int c = 0; c < ell; ++c) assign(centre_of(c), a[next_a++]);
  for (int j = 1; j <= t; ++j)
    for (int i = 0; i < s; ++i) assign(cluster_vertex(j, i), a[next_a++]);

  for (int c = 0; c < ell; ++c)
    for (int j = 1; j <= t; ++j) {
      std::vector<int> anchors{map[centre_of(c)]};
      for (int i = 0; i < s; ++i) anchors.push_back(map[cluster_vertex(j, i)]);
      int pick = -1;
      for (int v = 0; v < host.n && pick == -1; ++v) {
        if (in_aw[v] || used[v]) continue;
        bool all = true;
        for (int x : anchors)
          if (!host.has_edge(v, x)) {
            all = false;
            break;
          }
        if (all) pick = v;
      }
      if (pick == -1)
        throw Error(ErrorKind::internal_stuck,
                    "greedy image choice ran dry; the counting argument forbids this");
      assign(leaf_of(c, j), pick);
    }

  Embedding emb{map};
  if (!verify_embedding(pattern, host, emb.map))
    throw Error(ErrorKind::internal_stuck, "constructed embedding failed verification");
  return {std::move(pattern), std::move(emb)};
}

// Constructive embedding of T_{4,7}^ell from an expanding bipartite-ish
// configuration: A inside the neighborhood of u1, B inside Gamma(A) \ {u1},
// with e(A,B) >= 4 ell |A|^2 and |B| <= e(A,B) / (10 ell). Follows the
// averaging proof deterministically: restrict to B' (vertices of B with at
// least 2ell+2 neighbors in A), scan B' for a vertex u3 whose neighborhood
// in A survives bad-pair deletion with 2ell+2 vertices, then lay the four
// root images u1..u4 and fill the three path layers greedily.
inline LemmaEmbedding expand_T47(const HostGraph& host, int u1,
                                 const std::vector<int>& a_in,
                                 const std::vector<int>& b_in, int ell) {
  host.check_set(a_in);
  host.check_set(b_in);
  if (u1 < 0 || u1 >= host.n)
    throw Error(ErrorKind::out_of_range_vertex, "u1 not in host");
  if (ell < 1) throw Error(ErrorKind::bad_parameters, "ell must be >= 1");
  std::vector<int> a = a_in, b = b_in;
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  if (a.empty() || b.empty())
    throw Error(ErrorKind::bad_parameters, "A and B must be non-empty");

  std::vector<char> in_a(host.n, 0), in_b(host.n, 0);
  for (int v : a) in_a[v] = 1;
  for (int v : b) in_b[v] = 1;
  for (int v : a)
    if (!host.has_edge(u1, v) || in_b[v])
      throw Error(ErrorKind::hypothesis_violated,
                  "A must lie in Gamma(u1) and avoid B", {v});
  for (int v : b) {
    if (v == u1)
      throw Error(ErrorKind::hypothesis_violated, "B must avoid u1", {v});
    bool touches_a = false;
    for (int x : host.adj[v]) touches_a |= in_a[x];
    if (!touches_a)
      throw Error(ErrorKind::hypothesis_violated,
                  "B must lie in Gamma(A)", {v});
  }
  if (in_a[u1])
    throw Error(ErrorKind::hypothesis_violated, "u1 cannot lie in A", {u1});

  const long long asz = static_cast<long long>(a.size());
  const long long e_ab = host.cross_edges(a, b);
  if (e_ab < 4 * ell * asz * asz)
    throw Error(ErrorKind::hypothesis_violated,
                "e(A,B) = " + std::to_string(e_ab) + " < 4 ell |A|^2 = " +
                    std::to_string(4 * ell * asz * asz));
  if (10 * static_cast<long long>(ell) * static_cast<long long>(b.size()) > e_ab)
    throw Error(ErrorKind::hypothesis_violated,
                "|B| = " + std::to_string(b.size()) + " > e(A,B) / (10 ell)");

  // B': vertices of B with at least 2ell+2 neighbors in A.
  std::vector<int> b_prime;
  std::vector<char> in_bp(host.n, 0);
  for (int v : b) {
    int deg_a = 0;
    for (int x : host.adj[v]) deg_a += in_a[x];
    if (deg_a >= 2 * ell + 2) {
      b_prime.push_back(v);
      in_bp[v] = 1;
    }
  }

  auto pair_support = [&](int x, int y) {
    int count = 0;
    for (int v : b_prime) count += host.has_edge(v, x) && host.has_edge(v, y);
    return count;
  };

  int u3 = -1;
  std::vector<int> x_prime;
  for (int cand : b_prime) {
    std::vector<int> x;
    for (int v : a)
      if (host.has_edge(cand, v)) x.push_back(v);
    for (;;) {
      if (x.size() < 2) break;
      std::vector<int> bad(x.size(), 0);
      long long bad_total = 0;
      for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = i + 1; j < x.size(); ++j)
          if (pair_support(x[i], x[j]) <= 2 * ell) {
            ++bad_total;
            ++bad[i];
            ++bad[j];
          }
      if (bad_total == 0) break;
      size_t victim = 0;
      for (size_t i = 1; i < x.size(); ++i)
        if (bad[i] > bad[victim]) victim = i;
      x.erase(x.begin() + victim);
    }
    if (static_cast<int>(x.size()) >= 2 * ell + 2) {
      u3 = cand;
      x_prime = std::move(x);
      break;
    }
  }
  if (u3 == -1)
    throw Error(ErrorKind::internal_stuck,
                "no vertex of B' survived bad-pair deletion; the averaging "
                "argument forbids this");

  const int u2 = x_prime[0];
  const int u4 = x_prime[1];
  std::vector<int> u3_layer(x_prime.begin() + 2, x_prime.begin() + 2 + ell);

  // Pattern layout: T_{4,7} is the 4-path 0..3 with root leaf 4+i on path
  // vertex i; blown-up copy c >= 1 maps path vertex i to 8 + (c-1)*4 + i.
  RootedGraph pattern = blow_up(construct_T(4, 7), ell);
  auto path_vertex = [&](int c, int i) { return c == 0 ? i : 8 + (c - 1) * 4 + i; };

  std::vector<int> map(pattern.n, -1);
  std::vector<char> used(host.n, 0);
  auto assign = [&](int pv, int hv) {
    map[pv] = hv;
    used[hv] = 1;
  };
  assign(4, u1);
  assign(5, u2);
  assign(6, u3);
  assign(7, u4);
  for (int c = 0; c < ell; ++c) assign(path_vertex(c, 2), u3_layer[c]);

  // middle neighbors of the second and fourth root: common neighbors in B'
  // of {u_i, image of the adjacent third-layer vertex}
  for (int root_i : {1, 3}) {
    int anchor = root_i == 1 ? u2 : u4;
    for (int c = 0; c < ell; ++c) {
      int mid = map[path_vertex(c, 2)];
      int pick = -1;
      for (int v : b_prime) {
        if (used[v] || v == u3) continue;
        if (host.has_edge(v, anchor) && host.has_edge(v, mid)) {
          pick = v;
          break;
        }
      }
      if (pick == -1)
        throw Error(ErrorKind::internal_stuck, "layer fill ran dry at a good pair");
      assign(path_vertex(c, root_i), pick);
    }
  }

  // first layer: neighbors in A of the already placed second-layer images
  for (int c = 0; c < ell; ++c) {
    int second = map[path_vertex(c, 1)];
    int pick = -1;
    for (int v : a) {
      if (used[v]) continue;
      if (host.has_edge(v, second)) {
        pick = v;
        break;
      }
    }
    if (pick == -1)
      throw Error(ErrorKind::internal_stuck, "first-layer fill ran dry");
    assign(path_vertex(c, 0), pick);
  }

  Embedding emb{map};
  if (!verify_embedding(pattern, host, emb.map))
    throw Error(ErrorKind::internal_stuck, "constructed embedding failed verification");
  return {std::move(pattern), std::move(emb)};
}

}  // namespace turan
