#include "bcast2/solve_result.hpp"

#include <json.hpp>

namespace bcast2 {

std::string_view method_name(SolveMethod m) {
  switch (m) {
    case SolveMethod::bruteforce:
      return "bruteforce";
    case SolveMethod::branch_and_bound:
      return "branch_and_bound";
    case SolveMethod::tree_dp:
      return "tree_dp";
  }
  return "unknown";
}

std::string result_json(const Graph& g, const SolveResult& r) {
  auto j = nlohmann::ordered_json::parse(certificate_json(g, r.witness));
  j["method"] = method_name(r.method);
  j["nodes_explored"] = r.nodes_explored;
  return j.dump();
}

}  // namespace bcast2
