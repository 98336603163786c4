#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "oracles.hpp"
#include "turan/density.hpp"
#include "turan/exponent.hpp"
#include "turan/isomorphism.hpp"

using turan::ConstructionStep;
using turan::Rational;

TEST_CASE("realise base case: a = 1 is a star") {
  auto chain = turan::realise(1, 5);
  REQUIRE(chain.steps.size() == 1);
  CHECK(chain.steps[0].kind == ConstructionStep::Kind::base);
  CHECK(chain.steps[0].base_k == 5);
  CHECK(turan::is_isomorphic(chain.result, turan::construct_star(5), true));
  CHECK(chain.density() == Rational(5, 1));
  CHECK(chain.exponent() == Rational(9, 5));
}

TEST_CASE("realise(2,3) subdivides a 3-star") {
  auto chain = turan::realise(2, 3);
  REQUIRE(chain.steps.size() == 2);
  CHECK(chain.steps[0].base_k == 3);
  CHECK(chain.steps[1].kind == ConstructionStep::Kind::subdivide);
  CHECK(turan::is_isomorphic(chain.result, turan::subdivide(turan::construct_star(3)), true));
  CHECK(turan::rho(chain.result) == Rational(3, 2));
}

TEST_CASE("realise(3,7) = base(2), subdivide, densify") {
  auto chain = turan::realise(3, 7);
  REQUIRE(chain.steps.size() == 3);
  CHECK(chain.steps[0].kind == ConstructionStep::Kind::base);
  CHECK(chain.steps[0].base_k == 2);
  CHECK(chain.steps[1].kind == ConstructionStep::Kind::subdivide);
  CHECK(chain.steps[2].kind == ConstructionStep::Kind::densify);
  CHECK(chain.steps[1].rho_after == Rational(4, 3));
  CHECK(turan::rho(chain.result) == Rational(7, 3));
  CHECK(turan::is_balanced(chain.result).balanced);
  CHECK(chain.exponent() == Rational(11, 7));
}

TEST_CASE("realise reduces non-coprime input by gcd") {
  auto chain = turan::realise(2, 6);
  REQUIRE(chain.steps.size() == 1);
  CHECK(chain.steps[0].base_k == 3);
  auto chain2 = turan::realise(4, 6);
  CHECK(chain2.density() == Rational(3, 2));
}

TEST_CASE("realise rejects bad fractions") {
  CHECK_THROWS_AS(turan::realise(3, 3), turan::Error);
  CHECK_THROWS_AS(turan::realise(5, 3), turan::Error);
  CHECK_THROWS_AS(turan::realise(0, 3), turan::Error);
}

TEST_CASE("realise: full contract for every coprime a < b <= 10") {
  for (long long a = 1; a <= 9; ++a)
    for (long long b = a + 1; b <= 10; ++b) {
      if (std::gcd(a, b) != 1) continue;
      INFO("a/b = " << a << "/" << b);
      auto chain = turan::realise(a, b);
      const auto& g = chain.result;
      CHECK(turan::is_connected(g));
      CHECK(turan::is_bipartite(g));
      CHECK(turan::roots_independent(g));
      CHECK(turan::rho(g) == Rational(b, a));
      CHECK(turan::exponent_of(g) == Rational(2) - Rational(a, b));
      CHECK_FALSE(turan::min_density(g).first < Rational(b, a));
      // every step annotation ties exponent and density together
      for (const auto& st : chain.steps)
        CHECK(st.exponent_after ==
              Rational(2) - Rational(st.rho_after.den, st.rho_after.num));
    }
}

TEST_CASE("chain replay reproduces the result byte for byte") {
  for (auto [a, b] : std::vector<std::pair<long long, long long>>{
           {3, 7}, {4, 7}, {5, 8}, {7, 9}, {9, 10}}) {
    auto chain = turan::realise(a, b);
    auto replayed = turan::replay(chain.steps);
    CHECK(replayed.n == chain.result.n);
    CHECK(replayed.edges == chain.result.edges);
    CHECK(replayed.roots == chain.result.roots);
  }
}

TEST_CASE("realise terminates because a + b strictly decreases") {
  // worst cases in the acceptance range run in microseconds; just confirm
  // the recursion depth equals the step count and stays modest
  auto chain = turan::realise(9, 10);
  CHECK(chain.steps.size() <= 12);
}

TEST_CASE("realise_D picks the right family member") {
  SECTION("(2,3) gives the 4-vertex rooted path, alias D_{1,1}") {
    auto g = turan::realise_D(2, 3);
    CHECK(turan::is_isomorphic(g, turan::construct_T(2, 3), true));
    CHECK(turan::rho(g) == Rational(3, 2));
  }
  SECTION("(3,5) gives D_{2,1} with exponent 7/5") {
    auto g = turan::realise_D(3, 5);
    CHECK(turan::is_isomorphic(g, turan::construct_D(2, 1), true));
    CHECK(turan::rho(g) == Rational(5, 3));
    CHECK(turan::exponent_of(g) == Rational(7, 5));
  }
  SECTION("(2,5): 5 = -1 mod 2, gives D_{1,2} = T_{2,5}") {
    auto g = turan::realise_D(2, 5);
    CHECK(static_cast<int>(g.non_roots().size()) == 2);
    CHECK(g.edge_count() == 5);
    CHECK(turan::is_isomorphic(g, turan::construct_T(2, 5), true));
  }
  SECTION("congruence errors") {
    CHECK_THROWS_MATCHES(turan::realise_D(3, 7), turan::Error,
                         Catch::Matchers::Predicate<turan::Error>([](const turan::Error& e) {
                           return e.kind() == turan::ErrorKind::bad_congruence;
                         }));
    CHECK_THROWS_AS(turan::realise_D(1, 3), turan::Error);
  }
}

TEST_CASE("realise_D agrees with realise on density whenever applicable") {
  for (long long a = 2; a <= 9; ++a)
    for (long long b = a + 1; b <= 10; ++b) {
      if ((b + 1) % a != 0 || std::gcd(a, b) != 1) continue;
      INFO("a/b = " << a << "/" << b);
      auto d = turan::realise_D(a, b);
      auto chain = turan::realise(a, b);
      CHECK(turan::rho(d) == turan::rho(chain.result));
      CHECK(turan::is_balanced(d).balanced);
    }
}

TEST_CASE("theta-based chain for b = 1 mod a") {
  SECTION("(2,5): one densification after the length-3 path") {
    auto chain = turan::realise_mod1_chain(2, 5);
    REQUIRE(chain.steps.size() == 2);
    CHECK(chain.steps[0].base_family == ConstructionStep::BaseFamily::path);
    CHECK(chain.steps[0].base_k == 3);
    CHECK(chain.steps[1].kind == ConstructionStep::Kind::densify);
    CHECK(turan::rho(chain.result) == Rational(5, 2));
    CHECK(turan::is_balanced(chain.result).balanced);
  }
  SECTION("(3,4): the bare rooted path") {
    auto chain = turan::realise_mod1_chain(3, 4);
    REQUIRE(chain.steps.size() == 1);
    CHECK(turan::is_isomorphic(chain.result, turan::construct_path(4), true));
    CHECK(chain.exponent() == Rational(2) - Rational(3, 4));
  }
  SECTION("(2,4) has the wrong congruence") {
    CHECK_THROWS_MATCHES(turan::realise_mod1_chain(2, 4), turan::Error,
                         Catch::Matchers::Predicate<turan::Error>([](const turan::Error& e) {
                           return e.kind() == turan::ErrorKind::bad_congruence;
                         }));
  }
}

TEST_CASE("exponent functional on the named families") {
  CHECK(turan::exponent_of(turan::construct_D(3, 1)) == Rational(10, 7));
  CHECK(turan::exponent_of(turan::construct_star(7)) == Rational(2) - Rational(1, 7));
  CHECK(turan::exponent_of(turan::construct_path(4)) == Rational(1) + Rational(1, 4));
  auto empty = turan::make_graph(3, {}, {0});
  CHECK_THROWS_MATCHES(turan::exponent_of(empty), turan::Error,
                       Catch::Matchers::Predicate<turan::Error>([](const turan::Error& e) {
                         return e.kind() == turan::ErrorKind::zero_density;
                       }));
}
