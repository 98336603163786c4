#include <catch2/catch_amalgamated.hpp>

#include "turan/density.hpp"
#include "turan/families.hpp"

using turan::Rational;

TEST_CASE("star, path, cycle, complete bipartite shapes") {
  auto s5 = turan::construct_star(5);
  CHECK(s5.n == 6);
  CHECK(s5.roots == std::vector<int>{1, 2, 3, 4, 5});

  auto p4 = turan::construct_path(4);
  CHECK(p4.n == 5);
  CHECK(p4.roots == std::vector<int>{0, 4});
  CHECK(turan::rho(p4) == Rational(4, 3));

  auto c6 = turan::construct_cycle(6);
  CHECK(c6.n == 6);
  CHECK(c6.edge_count() == 6);
  CHECK(c6.roots.empty());

  auto k23 = turan::construct_complete_bipartite(2, 3);
  CHECK(k23.n == 5);
  CHECK(k23.edge_count() == 6);
}

TEST_CASE("T family: a non-root path vertices, b edges, balanced") {
  for (int a = 2; a <= 5; ++a)
    for (int b = a + 1; b <= 12; ++b) {
      auto t = turan::construct_T(a, b);
      INFO("T(" << a << "," << b << ")");
      CHECK(static_cast<int>(t.non_roots().size()) == a);
      CHECK(t.edge_count() == b);
      CHECK(t.n == a + (b - a + 1));
      CHECK(turan::rho(t) == Rational(b, a));
      CHECK(turan::is_balanced(t).balanced);
    }
}

TEST_CASE("T leaf placement at the base cases") {
  // T(3,4): leaves at both path endpoints
  auto t34 = turan::construct_T(3, 4);
  CHECK(t34.edges ==
        std::vector<std::pair<int, int>>{{0, 1}, {0, 3}, {1, 2}, {2, 4}});
  // b = a convention: a single leaf on the first path vertex
  auto t22 = turan::construct_T(2, 2);
  CHECK(t22.edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});
  CHECK(t22.roots == std::vector<int>{2});
}

TEST_CASE("T family rejects bad parameters") {
  CHECK_THROWS_AS(turan::construct_T(1, 3), turan::Error);
  CHECK_THROWS_AS(turan::construct_T(3, 2), turan::Error);
}

TEST_CASE("D family: counts, density formula, labels") {
  auto d43 = turan::construct_D(4, 3);
  CHECK(static_cast<int>(d43.non_roots().size()) == 5);
  CHECK(d43.edge_count() == 19);  // (s+1)(t+1) - 1
  CHECK(turan::rho(d43) == Rational(19, 5));

  for (int t = 1; t <= 4; ++t)
    for (int s = 1; s <= 4; ++s) {
      auto d = turan::construct_D(t, s);
      INFO("D(" << t << "," << s << ")");
      CHECK(d.edge_count() == (s + 1) * (t + 1) - 1);
      CHECK(turan::rho(d) == Rational((t + 1) * (s + 1) - 1, t + 1));
    }

  CHECK(d43.labels.at(0) == "centre");
  for (int c = 0; c < 3; ++c) CHECK(d43.labels.at(5 + c) == "core");
  CHECK(d43.labels.at(5 + 3) == "cluster:1");
}

TEST_CASE("H family: 1 + st non-roots and the density formula") {
  auto h21 = turan::construct_H(2, 1);
  CHECK(static_cast<int>(h21.non_roots().size()) == 3);
  CHECK(turan::rho(h21) == Rational(5, 3));

  for (int t = 1; t <= 3; ++t)
    for (int s = 1; s <= 3; ++s) {
      auto h = turan::construct_H(t, s);
      INFO("H(" << t << "," << s << ")");
      CHECK(static_cast<int>(h.non_roots().size()) == 1 + s * t);
      CHECK(h.edge_count() == t * (s + 1) + 1);
      CHECK(turan::rho(h) == Rational(1 + (s + 1) * t, 1 + s * t));
      CHECK(turan::is_balanced(h).balanced);
    }
}

TEST_CASE("constructors are deterministic") {
  auto a = turan::construct_D(3, 2);
  auto b = turan::construct_D(3, 2);
  CHECK(a.edges == b.edges);
  CHECK(a.roots == b.roots);
  CHECK(a.labels == b.labels);
}
