#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bcast2/broadcast.hpp"
#include "bcast2/graph.hpp"

namespace bcast2 {

/// Literal: +k for variable k, -k for its negation (1-indexed, DIMACS style).
using Literal = std::int32_t;
using Clause = std::array<Literal, 3>;

struct CnfFormula {
  std::int32_t num_vars = 0;
  std::vector<Clause> clauses;

  bool satisfied_by(const std::vector<bool>& assignment) const;
};

/// DIMACS CNF ("p cnf n m", zero-terminated clauses). Every clause must
/// carry exactly three literals.
CnfFormula parse_dimacs(std::string_view text);

/// Vertex roles in the gadget graph, indexed by variable / clause.
struct ReductionMap {
  std::vector<Vertex> u, u_prime, s, s_prime, l, l_prime;
  std::vector<Vertex> clause, clause_hat;

  /// Gadget vertex for a literal: u_k for +k, u'_k for -k.
  Vertex literal_vertex(Literal lit) const;
  /// {"u", "u_prime", "s", "s_prime", "l", "l_prime", "C", "C_hat"}.
  std::string to_json() const;
};

struct Reduction {
  Graph graph;
  ReductionMap map;
};

/// One 6-vertex gadget per variable (u, u' each joined to both supports
/// s, s'; leaf l on s, leaf l' on s') and a pendant pair C - C^ per
/// clause, with C^ joined to its literal vertices. Repeated literals in a
/// clause share one edge, so the edge count is 6n + 4m exactly when every
/// clause names three distinct literal vertices. The graph must be
/// connected, so every variable has to be linked to every other one through
/// shared clauses (see connected_components); otherwise InputError.
Reduction build_reduction(const CnfFormula& cnf);

/// The standalone 6-vertex gadget of one variable, with the vertex layout
/// u, u', s, s', l, l' = 0..5.
Graph variable_gadget();

/// Splits a formula along the connected components of its variable/clause
/// incidence graph, renumbering variables from 1 inside each part. A
/// variable that occurs in no clause becomes a part with one variable and
/// no clauses. build_reduction accepts exactly the parts that have clauses.
std::vector<CnfFormula> connected_components(const CnfFormula& cnf);

/// Value 2 on u_i for a true variable, on u'_i for a false one.
BroadcastAssignment assignment_to_broadcast(const CnfFormula& cnf, const ReductionMap& map,
                                            const std::vector<bool>& assignment);

/// Variable i is true iff f(u_i) = 2. Requires a dominating f of cost <= 2n.
std::vector<bool> broadcast_to_assignment(const Graph& g, const ReductionMap& map,
                                          const BroadcastAssignment& f);

inline constexpr std::int32_t kSatOracleMaxVars = 20;

/// Exhaustive search over all 2^n truth assignments.
std::optional<std::vector<bool>> sat_oracle(const CnfFormula& cnf,
                                            std::int32_t max_vars = kSatOracleMaxVars);

}  // namespace bcast2
