#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "turan/families.hpp"
#include "turan/search.hpp"
#include "turan/transforms.hpp"

using turan::HostGraph;

TEST_CASE("blow-up containments from the small-case study") {
  SECTION("D_{2,1}^2 contains a 6-cycle") {
    HostGraph host(turan::blow_up(turan::construct_D(2, 1), 2));
    auto emb = turan::find_subgraph(host, turan::construct_cycle(6));
    REQUIRE(emb.has_value());
    CHECK(turan::verify_embedding(turan::construct_cycle(6), host, emb->map));
  }
  SECTION("sub(K_{2,3}) embeds in D_{2,1}^3") {
    HostGraph host(turan::blow_up(turan::construct_D(2, 1), 3));
    auto pattern = turan::subdivide(turan::construct_complete_bipartite(2, 3));
    auto emb = turan::find_subgraph(host, pattern);
    REQUIRE(emb.has_value());
    CHECK(turan::verify_embedding(pattern, host, emb->map));
  }
  SECTION("C4 inside the root-identified T_{3,5}") {
    auto glued = turan::identify(turan::construct_T(3, 5), 3, 5);
    auto emb = turan::find_subgraph(HostGraph(glued), turan::construct_cycle(4));
    REQUIRE(emb.has_value());
  }
}

TEST_CASE("odd cycles contain no C4 (exhaustive absence)") {
  HostGraph c5(turan::construct_cycle(5));
  CHECK_FALSE(turan::find_subgraph(c5, turan::construct_cycle(4)).has_value());
}

TEST_CASE("budget exhaustion is distinct from absence") {
  // a hopeless dense search with a 1-node budget
  HostGraph host(turan::construct_complete_bipartite(6, 6));
  turan::SearchBudget tiny;
  tiny.node_limit = 1;
  CHECK_THROWS_MATCHES(
      turan::find_subgraph(host, turan::construct_cycle(6), tiny), turan::Error,
      Catch::Matchers::Predicate<turan::Error>([](const turan::Error& e) {
        return e.kind() == turan::ErrorKind::budget_exceeded;
      }));
}

TEST_CASE("search agrees with the all-injections oracle on fuzzed pairs") {
  oracles::Rng rng(20240);
  int found = 0, absent = 0;
  for (int round = 0; round < 400; ++round) {
    auto host_g = oracles::random_graph(rng, 8, 0.45, false);
    auto pattern = oracles::random_graph(rng, 5, 0.5, false);
    HostGraph host(host_g);
    auto emb = turan::find_subgraph(host, pattern);
    bool expected = oracles::contains_naive(host, pattern);
    CHECK(emb.has_value() == expected);
    if (emb) {
      CHECK(turan::verify_embedding(pattern, host, emb->map));
      ++found;
    } else {
      ++absent;
    }
  }
  CHECK(found > 50);
  CHECK(absent > 50);
}

TEST_CASE("patterns larger than the host are absent immediately") {
  HostGraph small(turan::construct_cycle(3));
  CHECK_FALSE(turan::find_subgraph(small, turan::construct_cycle(4)).has_value());
}

TEST_CASE("search is deterministic") {
  HostGraph host(turan::blow_up(turan::construct_D(2, 1), 2));
  auto a = turan::find_subgraph(host, turan::construct_cycle(6));
  auto b = turan::find_subgraph(host, turan::construct_cycle(6));
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  CHECK(a->map == b->map);
}
