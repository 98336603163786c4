#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "turan/density.hpp"
#include "turan/families.hpp"
#include "turan/transforms.hpp"

using turan::make_graph;
using turan::Rational;

TEST_CASE("rho_subset matches the direct edge scan") {
  SECTION("star centre carries all edges") {
    auto star = turan::construct_star(5);
    CHECK(turan::rho_subset(star, {0}) == Rational(5, 1));
    CHECK(turan::rho(star) == Rational(5, 1));
  }
  SECTION("T_{3,5} non-root set") {
    auto t35 = turan::construct_T(3, 5);
    CHECK(turan::rho_subset(t35, {0, 1, 2}) == Rational(5, 3));
  }
  SECTION("D_{2,2} centre has degree s + t") {
    auto d = turan::construct_D(2, 2);
    CHECK(turan::rho_subset(d, {0}) == Rational(4, 1));
  }
  SECTION("errors") {
    auto star = turan::construct_star(3);
    CHECK_THROWS_AS(turan::rho_subset(star, {}), turan::Error);
    CHECK_THROWS_AS(turan::rho_subset(star, {1}), turan::Error);  // a root
  }
}

TEST_CASE("rho treats an empty root set as all-vertices") {
  auto c4 = turan::construct_cycle(4);
  CHECK(turan::rho(c4) == Rational(1, 1));
}

TEST_CASE("exactness invariant: rho * |S| = incident edge count") {
  oracles::Rng rng(1234);
  for (int round = 0; round < 100; ++round) {
    auto g = oracles::random_graph(rng, 8, 0.4);
    auto nr = g.non_roots();
    if (nr.empty()) continue;
    // random non-empty subset
    std::vector<int> s;
    for (int v : nr)
      if (rng.chance(0.5)) s.push_back(v);
    if (s.empty()) s.push_back(nr[rng.below(static_cast<int>(nr.size()))]);
    Rational r = turan::rho_subset(g, s);
    std::vector<char> in_s(g.n, 0);
    for (int v : s) in_s[v] = 1;
    long long e = 0;
    for (auto [u, v] : g.edges)
      if (in_s[u] || in_s[v]) ++e;
    CHECK(r == Rational(e, static_cast<long long>(s.size())));
  }
}

TEST_CASE("balancedness of the D family (small corner by hand)") {
  for (int t = 1; t <= 4; ++t)
    for (int s = 1; s <= 4; ++s) {
      auto d = turan::construct_D(t, s);
      auto rep = turan::is_balanced(d);
      INFO("D(" << t << "," << s << ")");
      CHECK(rep.balanced);
    }
}

TEST_CASE("unbalanced witness: star with a pendant on the centre") {
  // S_3 rooted on its leaves plus one extra non-root pendant on the centre:
  // the pendant alone has density 1 < rho = 2.
  auto g = make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}, {1, 2, 3});
  CHECK(turan::rho(g) == Rational(2, 1));
  auto rep = turan::is_balanced(g);
  REQUIRE_FALSE(rep.balanced);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->first == std::vector<int>{4});
  CHECK(rep.witness->second == Rational(1, 1));
}

TEST_CASE("identified T_{3,5} stays balanced with rho 5/3") {
  auto t35 = turan::construct_T(3, 5);
  auto glued = turan::identify(t35, 3, 5);
  CHECK(oracles::balanced_naive(glued));
  auto rep = turan::is_balanced(glued);
  CHECK(rep.balanced);
  CHECK(turan::rho(glued) == Rational(5, 3));
}

TEST_CASE("enumeration budget is enforced") {
  auto big = turan::construct_complete_bipartite(5, 6);  // 11 non-roots
  CHECK_THROWS_MATCHES(turan::is_balanced(big, 10), turan::Error,
                       Catch::Matchers::Predicate<turan::Error>([](const turan::Error& e) {
                         return e.kind() == turan::ErrorKind::budget_exceeded;
                       }));
}

TEST_CASE("is_balanced agrees with the naive subset scan") {
  oracles::Rng rng(77);
  int checked = 0;
  for (int round = 0; round < 200; ++round) {
    auto g = oracles::random_graph(rng, 9, 0.35);
    if (g.non_roots().empty()) continue;
    ++checked;
    CHECK(turan::is_balanced(g).balanced == oracles::balanced_naive(g));
  }
  CHECK(checked > 150);
}

TEST_CASE("min_density (flow) equals the naive minimum") {
  oracles::Rng rng(424242);
  for (int round = 0; round < 200; ++round) {
    auto g = oracles::random_graph(rng, 10, 0.3);
    if (g.non_roots().empty()) continue;
    auto [naive_min, naive_set] = oracles::min_density_naive(g);
    auto [flow_min, flow_set] = turan::min_density(g);
    INFO("round " << round);
    CHECK(flow_min == naive_min);
    REQUIRE_FALSE(flow_set.empty());
    CHECK(turan::rho_subset(g, flow_set) == flow_min);
  }
}

TEST_CASE("min_density witnesses unbalancedness consistently with is_balanced") {
  oracles::Rng rng(5150);
  for (int round = 0; round < 120; ++round) {
    auto g = oracles::random_graph(rng, 9, 0.3);
    if (g.non_roots().empty()) continue;
    bool balanced = turan::is_balanced(g).balanced;
    auto [mn, _] = turan::min_density(g);
    CHECK(balanced == !(mn < turan::rho(g)));
  }
}
