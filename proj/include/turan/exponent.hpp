#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "turan/density.hpp"
#include "turan/families.hpp"
#include "turan/graph.hpp"
#include "turan/rational.hpp"
#include "turan/transforms.hpp"

namespace turan {

// One step of a realisation chain. The first step is always a base graph:
// a k-star rooted on its leaves, or (for the theta-based chains) the path of
// length k rooted at both endpoints. Densify applies the starred
// 1-densification, Subdivide the 1-subdivision. Every step satisfies
// exponent_after = 2 - 1/rho_after exactly.
struct ConstructionStep {
  enum class Kind { base, densify, subdivide };
  enum class BaseFamily { star, path };
  Kind kind = Kind::base;
  BaseFamily base_family = BaseFamily::star;
  int base_k = 0;
  Rational rho_after;
  Rational exponent_after;
};

struct ConstructionChain {
  std::vector<ConstructionStep> steps;
  RootedGraph result;
  Rational exponent() const { return steps.back().exponent_after; }
  Rational density() const { return steps.back().rho_after; }
};

inline RootedGraph replay(const std::vector<ConstructionStep>& steps) {
  if (steps.empty() || steps.front().kind != ConstructionStep::Kind::base)
    throw Error(ErrorKind::bad_parameters, "chain must start with a base step");
  RootedGraph g = steps.front().base_family == ConstructionStep::BaseFamily::star
                      ? construct_star(steps.front().base_k)
                      : construct_path(steps.front().base_k);
  for (size_t i = 1; i < steps.size(); ++i) {
    switch (steps[i].kind) {
      case ConstructionStep::Kind::base:
        throw Error(ErrorKind::bad_parameters, "base step allowed only first");
      case ConstructionStep::Kind::densify:
        g = densify(g, 1, /*starred=*/true);
        break;
      case ConstructionStep::Kind::subdivide:
        g = subdivide(g);
        break;
    }
  }
  return g;
}

namespace detail {

inline ConstructionStep annotated(ConstructionStep::Kind kind, int base_k,
                                  long long a, long long b,
                                  ConstructionStep::BaseFamily fam =
                                      ConstructionStep::BaseFamily::star) {
  ConstructionStep st;
  st.kind = kind;
  st.base_family = fam;
  st.base_k = base_k;
  st.rho_after = Rational(b, a);
  st.exponent_after = Rational(2) - Rational(a, b);
  return st;
}

inline void realise_steps(long long a, long long b,
                          std::vector<ConstructionStep>& steps) {
  long long g = std::gcd(a, b);
  a /= g;
  b /= g;
  if (a == 1) {
    steps.push_back(annotated(ConstructionStep::Kind::base,
                              static_cast<int>(b), 1, b));
    return;
  }
  if (b > 2 * a) {
    // densification raises rho by one: (a, b-a) -> (a, b)
    realise_steps(a, b - a, steps);
    steps.push_back(annotated(ConstructionStep::Kind::densify, 0, a, b));
    return;
  }
  // a < b < 2a: subdivision maps rho = b'/a' to 2b'/(a'+b'), so the
  // preimage of b/a is b/(2a-b)
  realise_steps(2 * a - b, b, steps);
  steps.push_back(annotated(ConstructionStep::Kind::subdivide, 0, a, b));
}

}  // namespace detail

// Builds a balanced connected rooted bipartite graph with density b/a (and
// hence candidate extremal exponent 2 - a/b) by recursing on a + b:
// a = 1 is a star; b > 2a densifies the graph realising (a, b-a); a < b < 2a
// subdivides the graph realising (2a-b, b). Non-coprime input reduces by gcd
// at every entry, so the recursion strictly shrinks a + b and b = 2a cannot
// deadlock the case split.
inline ConstructionChain realise(long long a, long long b) {
  if (a <= 0 || b <= 0 || a >= b)
    throw Error(ErrorKind::bad_fraction,
                "realise needs 0 < a < b, got " + std::to_string(a) + "/" +
                    std::to_string(b));
  ConstructionChain chain;
  detail::realise_steps(a, b, chain.steps);
  chain.result = replay(chain.steps);
  return chain;
}

// Direct single-graph realisation of 2 - a/b when b = -1 (mod a): the tree
// D_{t-1,s-1} with t = a, s = (b+1)/a has exactly t non-root vertices,
// st - 1 = b edges and density b/a.
inline RootedGraph realise_D(long long a, long long b) {
  if (a < 2 || b <= a)
    throw Error(ErrorKind::bad_parameters, "realise_D needs 2 <= a < b");
  if ((b + 1) % a != 0)
    throw Error(ErrorKind::bad_congruence,
                std::to_string(b) + " is not -1 mod " + std::to_string(a));
  long long s = (b + 1) / a;
  if (s < 2)
    throw Error(ErrorKind::bad_congruence, "realise_D needs b >= 2a - 1");
  return construct_D(static_cast<int>(a) - 1, static_cast<int>(s) - 1);
}

// Theta-based chain for b = 1 (mod a): start from the path of length a+1
// rooted at its endpoints (density (a+1)/a) and densify (b-a-1)/a times.
inline ConstructionChain realise_mod1_chain(long long a, long long b) {
  if (a < 2 || b <= a)
    throw Error(ErrorKind::bad_parameters, "realise_mod1_chain needs 2 <= a < b");
  if (b % a != 1)
    throw Error(ErrorKind::bad_congruence,
                std::to_string(b) + " is not 1 mod " + std::to_string(a));
  ConstructionChain chain;
  chain.steps.push_back(detail::annotated(ConstructionStep::Kind::base,
                                          static_cast<int>(a) + 1, a, a + 1,
                                          ConstructionStep::BaseFamily::path));
  long long steps = (b - a - 1) / a;
  for (long long i = 1; i <= steps; ++i)
    chain.steps.push_back(detail::annotated(ConstructionStep::Kind::densify, 0,
                                            a, a + 1 + i * a));
  chain.result = replay(chain.steps);
  return chain;
}

// The exponent functional 2 - 1/rho(F).
inline Rational exponent_of(const RootedGraph& g) {
  Rational r = rho(g);
  if (r.num == 0) throw Error(ErrorKind::zero_density, "rho(F) = 0 has no exponent");
  return Rational(2) - Rational(r.den, r.num);
}

}  // namespace turan
