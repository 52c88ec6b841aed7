#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "bcast2/broadcast.hpp"

namespace bcast2 {

enum class SolveMethod { bruteforce, branch_and_bound, tree_dp };

std::string_view method_name(SolveMethod m);

struct SolveResult {
  std::int64_t optimum = 0;
  BroadcastAssignment witness;
  SolveMethod method = SolveMethod::bruteforce;
  std::int64_t nodes_explored = 0;
};

/// Certificate JSON extended with "method" and "nodes_explored".
std::string result_json(const Graph& g, const SolveResult& r);

}  // namespace bcast2
