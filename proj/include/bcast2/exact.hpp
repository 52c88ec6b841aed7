#pragma once

#include <cstdint>
#include <vector>

#include "bcast2/broadcast.hpp"
#include "bcast2/graph.hpp"
#include "bcast2/solve_result.hpp"

namespace bcast2 {

/// Default size guards for the exponential routines.
struct SizeLimits {
  Vertex bruteforce = 16;
  Vertex enumerate = 12;
  Vertex branch_and_bound = 40;
};

/// Hard ceilings; overrides are clamped to these.
inline constexpr SizeLimits kHardLimits{24, 16, 64};

/// Clamps every field of `requested` to kHardLimits.
SizeLimits clamp_limits(SizeLimits requested);

/// Branch-and-bound over the weighted set-cover formulation (ball(v,1) at
/// weight 1, ball(v,2) at weight 2). Throws GuardError above the guard.
SolveResult solve_exact(const Graph& g, Vertex max_order = SizeLimits{}.branch_and_bound);

/// Exhaustive search by increasing cost k over disjoint (S2, S1) with
/// 2|S2| + |S1| = k.
SolveResult solve_bruteforce(const Graph& g, Vertex max_order = SizeLimits{}.bruteforce);

struct OptimalBroadcast {
  BroadcastAssignment assignment;
  /// Every vertex hears exactly one positive vertex.
  bool efficient = false;
  /// Index of its orbit under Aut(G); equal ids mean isomorphic broadcasts.
  std::size_t orbit = 0;
};

struct OptimaReport {
  std::int64_t optimum = 0;
  /// Sorted lexicographically by value vector.
  std::vector<OptimalBroadcast> optima;
  std::size_t orbit_count = 0;

  std::size_t efficient_count() const;
};

/// All optimal dominating 2-broadcasts, each flagged efficient or not and
/// grouped into orbits under the automorphism group of g.
OptimaReport enumerate_optima(const Graph& g, Vertex max_order = SizeLimits{}.enumerate);

struct DominationNumbers {
  std::int64_t gamma = 0;    ///< classical domination number
  std::int64_t gamma_b = 0;  ///< unlimited broadcast domination number
};

DominationNumbers domination_oracles(const Graph& g, Vertex max_order = SizeLimits{}.enumerate);

/// Whether some automorphism of g maps `a` onto `b` (values as colors).
bool equivalent_under_automorphism(const Graph& g, const BroadcastAssignment& a,
                                   const BroadcastAssignment& b);

}  // namespace bcast2
