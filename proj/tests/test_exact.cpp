#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "bcast2/exact.hpp"
#include "bcast2/families.hpp"
#include "bcast2/treedp.hpp"
#include "support.hpp"

using namespace bcast2;

namespace {

/// Rotations and reflections of an assignment on C_n.
std::set<std::vector<std::uint8_t>> dihedral_images(const BroadcastAssignment& f) {
  const auto n = static_cast<std::size_t>(f.size());
  std::set<std::vector<std::uint8_t>> out;
  for (std::size_t shift = 0; shift < n; ++shift) {
    std::vector<std::uint8_t> rot(n);
    std::vector<std::uint8_t> ref(n);
    for (std::size_t i = 0; i < n; ++i) {
      rot[(i + shift) % n] = f[static_cast<Vertex>(i)];
      ref[(n - i + shift) % n] = f[static_cast<Vertex>(i)];
    }
    out.insert(rot);
    out.insert(ref);
  }
  return out;
}

Graph with_universal_vertex(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
  for (Vertex v = 1; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, std::move(edges));
}

}  // namespace

TEST_CASE("exact solvers on C_7") {
  const Graph c7 = cycle_graph(7);
  const SolveResult bnb = solve_exact(c7);
  const SolveResult brute = solve_bruteforce(c7);
  CHECK(bnb.optimum == 3);
  CHECK(brute.optimum == 3);
  CHECK(bnb.method == SolveMethod::branch_and_bound);
  CHECK(brute.method == SolveMethod::bruteforce);
  CHECK(is_dominating(c7, bnb.witness));
  CHECK(is_dominating(c7, brute.witness));
}

TEST_CASE("exact solvers on named graphs") {
  CHECK(solve_exact(t9_graph()).optimum == 4);
  CHECK(solve_exact(star_graph(12)).optimum == 1);
  CHECK(solve_exact(family_f_graph(2)).optimum == 8);
  CHECK(solve_bruteforce(path_graph(4)).optimum == 2);
  CHECK(solve_bruteforce(path_graph(1)).optimum == 1);
  CHECK(solve_exact(path_graph(1)).optimum == 1);
  CHECK(solve_bruteforce(with_universal_vertex(9)).optimum == 1);
  CHECK(solve_exact(with_universal_vertex(9)).optimum == 1);
}

TEST_CASE("size guards") {
  CHECK_THROWS_AS(solve_bruteforce(path_graph(17)), GuardError);
  CHECK_THROWS_AS(solve_exact(path_graph(41)), GuardError);
  CHECK_THROWS_AS(enumerate_optima(path_graph(13)), GuardError);
  CHECK_THROWS_AS(domination_oracles(path_graph(13)), GuardError);
  CHECK(solve_exact(path_graph(41), 50).optimum == 14);
  CHECK_THROWS_AS(solve_exact(path_graph(65), 100), GuardError);
}

TEST_CASE("guard overrides are clamped") {
  const SizeLimits l = clamp_limits(SizeLimits{100, 5, 1000});
  CHECK(l.bruteforce == kHardLimits.bruteforce);
  CHECK(l.enumerate == 5);
  CHECK(l.branch_and_bound == kHardLimits.branch_and_bound);
}

TEST_CASE("optima of C_7") {
  const Graph c7 = cycle_graph(7);
  const OptimaReport r = enumerate_optima(c7);
  CHECK(r.optimum == 3);
  CHECK(r.optima.size() == 28);
  CHECK(r.efficient_count() == 0);
  CHECK(r.orbit_count == 3);

  // Orbit ids agree with the dihedral action computed directly.
  std::map<std::size_t, std::set<std::vector<std::uint8_t>>> by_orbit;
  for (const auto& o : r.optima) by_orbit[o.orbit].insert(o.assignment.values());
  for (const auto& o : r.optima) {
    CHECK(dihedral_images(o.assignment) == by_orbit[o.orbit]);
  }
}

TEST_CASE("optima of K_1 and P_4") {
  const OptimaReport k1 = enumerate_optima(path_graph(1));
  REQUIRE(k1.optima.size() == 1);
  CHECK(k1.optima[0].assignment == BroadcastAssignment({1}));
  CHECK(k1.optima[0].efficient);

  const OptimaReport p4 = enumerate_optima(path_graph(4));
  CHECK(p4.optimum == 2);
  CHECK(p4.optima.size() == 6);
  CHECK(p4.orbit_count == 4);
  CHECK(p4.efficient_count() == 3);
}

TEST_CASE("optima enumeration agrees with exhaustion over all assignments") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 40; ++i) {
    const Graph g = testing::random_graph(rng, 1, 8);
    const OptimaReport r = enumerate_optima(g);
    std::vector<BroadcastAssignment> expected;
    testing::for_each_assignment(g.order(), [&](const BroadcastAssignment& f) {
      if (f.cost() == r.optimum && is_dominating(g, f)) expected.push_back(f);
    });
    std::sort(expected.begin(), expected.end());
    REQUIRE(r.optima.size() == expected.size());
    for (std::size_t k = 0; k < expected.size(); ++k) {
      CHECK(r.optima[k].assignment == expected[k]);
      const auto rep = validate(g, expected[k]);
      bool efficient = true;
      for (const auto& d : rep.dominators) efficient = efficient && d.size() == 1;
      CHECK(r.optima[k].efficient == efficient);
    }
    CHECK(r.optimum == testing::optimum_by_exhaustion(g));
  }
}

TEST_CASE("orbit ids match automorphism equivalence") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 20; ++i) {
    const Graph g = testing::random_graph(rng, 2, 8);
    const OptimaReport r = enumerate_optima(g);
    for (std::size_t a = 0; a < r.optima.size(); ++a) {
      for (std::size_t b = a + 1; b < r.optima.size(); ++b) {
        CHECK((r.optima[a].orbit == r.optima[b].orbit) ==
              equivalent_under_automorphism(g, r.optima[a].assignment, r.optima[b].assignment));
      }
    }
  }
}

TEST_CASE("automorphism equivalence on cycles") {
  const Graph c6 = cycle_graph(6);
  CHECK(equivalent_under_automorphism(c6, BroadcastAssignment({1, 0, 0, 1, 0, 0}),
                                      BroadcastAssignment({0, 1, 0, 0, 1, 0})));
  CHECK_FALSE(equivalent_under_automorphism(c6, BroadcastAssignment({1, 0, 0, 1, 0, 0}),
                                            BroadcastAssignment({1, 1, 0, 0, 0, 0})));
}

TEST_CASE("the solver witness is among the enumerated optima") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 30; ++i) {
    const Graph g = testing::random_graph(rng, 1, 10);
    const auto w = solve_exact(g).witness;
    const OptimaReport r = enumerate_optima(g);
    bool found = false;
    for (const auto& o : r.optima) found = found || o.assignment == w;
    CHECK(found);
  }
}

TEST_CASE("domination oracles") {
  const DominationNumbers star = domination_oracles(star_graph(7));
  CHECK(star.gamma == 1);
  CHECK(star.gamma_b == 1);
  const DominationNumbers c7 = domination_oracles(cycle_graph(7));
  CHECK(c7.gamma == 3);
  CHECK(c7.gamma_b == 3);
  const DominationNumbers p4 = domination_oracles(path_graph(4));
  CHECK(p4.gamma == 2);
  CHECK(p4.gamma_b == 2);
  CHECK(domination_oracles(path_graph(9)).gamma_b == 3);
  CHECK(domination_oracles(path_graph(5)).gamma_b == 2);
}

TEST_CASE("branch and bound agrees with brute force and with the chain") {
  std::mt19937_64 rng(44);
  for (int i = 0; i < 80; ++i) {
    const Graph g = testing::random_graph(rng, 1, 11);
    const std::int64_t opt = solve_exact(g).optimum;
    CHECK(opt == solve_bruteforce(g).optimum);
    const DominationNumbers d = domination_oracles(g);
    CHECK(d.gamma_b <= opt);
    CHECK(opt <= d.gamma);
    CHECK(opt * 9 <= 4 * g.order() + 8);
  }
}

TEST_CASE("some small graph separates all three parameters") {
  std::mt19937_64 rng(45);
  bool found = false;
  for (int i = 0; i < 4000 && !found; ++i) {
    const Graph g = testing::random_graph(rng, 6, 12);
    const DominationNumbers d = domination_oracles(g);
    const std::int64_t opt = solve_exact(g).optimum;
    found = d.gamma_b < opt && opt < d.gamma;
  }
  CHECK(found);
}
