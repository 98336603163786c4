#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "turan/families.hpp"
#include "turan/isomorphism.hpp"
#include "turan/transforms.hpp"

TEST_CASE("family identities inside the D/T zoo") {
  // D_{1,s} = T_{2,2s+1} and D_{2,s} = T_{3,3s+2}, as rooted graphs
  for (int s = 1; s <= 4; ++s) {
    INFO("s = " << s);
    CHECK(turan::is_isomorphic(turan::construct_D(1, s),
                               turan::construct_T(2, 2 * s + 1), true));
    CHECK(turan::is_isomorphic(turan::construct_D(2, s),
                               turan::construct_T(3, 3 * s + 2), true));
  }
  CHECK(turan::is_isomorphic(turan::construct_D(2, 1), turan::construct_T(3, 5), true));
}

TEST_CASE("negative cases") {
  CHECK_FALSE(turan::is_isomorphic(turan::construct_path(3), turan::construct_star(3), false));
  // same shape, different root sets
  auto p = turan::construct_path(3);
  auto q = turan::make_graph(4, {{0, 1}, {1, 2}, {2, 3}}, {0, 1});
  CHECK_FALSE(turan::is_isomorphic(p, q, true));
  CHECK(turan::is_isomorphic(p, q, false));
}

TEST_CASE("identity and relabeling") {
  oracles::Rng rng(314);
  for (int round = 0; round < 40; ++round) {
    auto g = oracles::random_graph(rng, 8, 0.4);
    CHECK(turan::is_isomorphic(g, g, true));
    // random relabeling
    std::vector<int> perm(g.n);
    for (int i = 0; i < g.n; ++i) perm[i] = i;
    for (int i = g.n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges) edges.emplace_back(perm[u], perm[v]);
    std::vector<int> roots;
    for (int r : g.roots) roots.push_back(perm[r]);
    auto h = turan::make_graph(g.n, edges, roots);
    CHECK(turan::is_isomorphic(g, h, true));
  }
}

TEST_CASE("size guard") {
  auto big = turan::construct_complete_bipartite(40, 30);
  CHECK_THROWS_AS(turan::is_isomorphic(big, big, false), turan::Error);
}
