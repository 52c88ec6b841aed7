#include "bcast2/reduction.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

namespace bcast2 {

bool CnfFormula::satisfied_by(const std::vector<bool>& assignment) const {
  for (const Clause& c : clauses) {
    bool sat = false;
    for (Literal lit : c) {
      const bool value = assignment[static_cast<std::size_t>(std::abs(lit) - 1)];
      sat = sat || (lit > 0 ? value : !value);
    }
    if (!sat) return false;
  }
  return true;
}

CnfFormula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<std::pair<long long, long long>> header;
  std::vector<long long> pending;
  CnfFormula cnf;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream tokens(line);
    if (line[0] == 'p') {
      std::string p;
      std::string kind;
      long long n = -1;
      long long m = -1;
      std::string extra;
      if (header || !(tokens >> p >> kind >> n >> m) || p != "p" || kind != "cnf" ||
          (tokens >> extra) || n < 1 || m < 0) {
        throw InputError("line " + std::to_string(line_no) + ": malformed header");
      }
      header = {n, m};
      cnf.num_vars = static_cast<std::int32_t>(n);
      continue;
    }
    if (!header) throw InputError("line " + std::to_string(line_no) + ": clause before header");
    std::string token;
    while (tokens >> token) {
      long long lit = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), lit);
      if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw InputError("line " + std::to_string(line_no) + ": expected integer, got '" + token + "'");
      }
      if (lit == 0) {
        if (pending.size() != 3) {
          throw InputError("line " + std::to_string(line_no) + ": clause has " +
                           std::to_string(pending.size()) + " literals, expected 3");
        }
        cnf.clauses.push_back({static_cast<Literal>(pending[0]), static_cast<Literal>(pending[1]),
                               static_cast<Literal>(pending[2])});
        pending.clear();
        continue;
      }
      if (std::llabs(lit) > header->first) {
        throw InputError("line " + std::to_string(line_no) + ": variable out of range");
      }
      pending.push_back(lit);
    }
  }
  if (!header) throw InputError("missing 'p cnf' header");
  if (!pending.empty()) throw InputError("unterminated clause at end of input");
  if (static_cast<long long>(cnf.clauses.size()) != header->second) {
    throw InputError("header declares " + std::to_string(header->second) + " clauses, found " +
                     std::to_string(cnf.clauses.size()));
  }
  return cnf;
}

Vertex ReductionMap::literal_vertex(Literal lit) const {
  const auto var = static_cast<std::size_t>(std::abs(lit) - 1);
  return lit > 0 ? u.at(var) : u_prime.at(var);
}

std::string ReductionMap::to_json() const {
  nlohmann::ordered_json j;
  j["u"] = u;
  j["u_prime"] = u_prime;
  j["s"] = s;
  j["s_prime"] = s_prime;
  j["l"] = l;
  j["l_prime"] = l_prime;
  j["C"] = clause;
  j["C_hat"] = clause_hat;
  return j.dump();
}

Reduction build_reduction(const CnfFormula& cnf) {
  if (cnf.num_vars < 1) throw InputError("formula needs at least one variable");
  if (cnf.clauses.empty()) throw InputError("formula needs at least one clause");
  const auto n = static_cast<Vertex>(cnf.num_vars);
  const auto m = static_cast<Vertex>(cnf.clauses.size());

  ReductionMap map;
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    const Vertex base = 6 * i;
    map.u.push_back(base);
    map.u_prime.push_back(base + 1);
    map.s.push_back(base + 2);
    map.s_prime.push_back(base + 3);
    map.l.push_back(base + 4);
    map.l_prime.push_back(base + 5);
    edges.insert(edges.end(), {{base, base + 2},
                               {base + 1, base + 2},
                               {base, base + 3},
                               {base + 1, base + 3},
                               {base + 2, base + 4},
                               {base + 3, base + 5}});
  }
  for (Vertex j = 0; j < m; ++j) {
    const Vertex hat = 6 * n + 2 * j;
    const Vertex pendant = hat + 1;
    map.clause_hat.push_back(hat);
    map.clause.push_back(pendant);
    edges.emplace_back(hat, pendant);
    std::vector<Vertex> seen;
    for (Literal lit : cnf.clauses[static_cast<std::size_t>(j)]) {
      if (lit == 0 || std::abs(lit) > cnf.num_vars) throw InputError("literal out of range");
      const Vertex x = map.literal_vertex(lit);
      if (std::find(seen.begin(), seen.end(), x) != seen.end()) continue;
      seen.push_back(x);
      edges.emplace_back(x, hat);
    }
  }
  if (connected_components(cnf).size() != 1) {
    throw InputError("variable/clause incidence is disconnected, so the gadget graph would be too");
  }
  return Reduction{Graph(6 * n + 2 * m, std::move(edges)), std::move(map)};
}

Graph variable_gadget() {
  return Graph(6, {{0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 4}, {3, 5}});
}

std::vector<CnfFormula> connected_components(const CnfFormula& cnf) {
  const auto n = static_cast<std::size_t>(cnf.num_vars);
  std::vector<std::size_t> root(n);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](std::size_t x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (const Clause& c : cnf.clauses) {
    for (Literal lit : c) root[find(static_cast<std::size_t>(std::abs(lit) - 1))] =
        find(static_cast<std::size_t>(std::abs(c[0]) - 1));
  }
  // Parts ordered by their smallest variable.
  std::vector<std::int32_t> part_of_root(n, -1);
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t r = find(v);
    if (part_of_root[r] < 0) {
      part_of_root[r] = static_cast<std::int32_t>(members.size());
      members.emplace_back();
    }
    members[static_cast<std::size_t>(part_of_root[r])].push_back(v);
  }
  std::vector<CnfFormula> parts(members.size());
  std::vector<std::int32_t> local(n, 0);
  for (std::size_t p = 0; p < members.size(); ++p) {
    parts[p].num_vars = static_cast<std::int32_t>(members[p].size());
    for (std::size_t i = 0; i < members[p].size(); ++i) {
      local[members[p][i]] = static_cast<std::int32_t>(i) + 1;
    }
  }
  for (const Clause& c : cnf.clauses) {
    const auto p = static_cast<std::size_t>(part_of_root[find(static_cast<std::size_t>(std::abs(c[0]) - 1))]);
    Clause renamed{};
    for (std::size_t k = 0; k < 3; ++k) {
      const Literal var = local[static_cast<std::size_t>(std::abs(c[k]) - 1)];
      renamed[k] = c[k] > 0 ? var : -var;
    }
    parts[p].clauses.push_back(renamed);
  }
  return parts;
}

BroadcastAssignment assignment_to_broadcast(const CnfFormula& cnf, const ReductionMap& map,
                                            const std::vector<bool>& assignment) {
  if (static_cast<std::int32_t>(assignment.size()) != cnf.num_vars) {
    throw InputError("truth assignment must cover every variable");
  }
  const auto order = static_cast<Vertex>(6 * map.u.size() + 2 * map.clause.size());
  auto f = BroadcastAssignment::zeros(order);
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    f.set(assignment[i] ? map.u[i] : map.u_prime[i], 2);
  }
  return f;
}

std::vector<bool> broadcast_to_assignment(const Graph& g, const ReductionMap& map,
                                          const BroadcastAssignment& f) {
  if (!is_dominating(g, f)) throw InputError("broadcast is not dominating");
  const auto budget = static_cast<std::int64_t>(2 * map.u.size());
  if (f.cost() > budget) {
    throw InputError("broadcast cost " + std::to_string(f.cost()) + " exceeds 2n = " +
                     std::to_string(budget));
  }
  std::vector<bool> out(map.u.size());
  for (std::size_t i = 0; i < map.u.size(); ++i) out[i] = f[map.u[i]] == 2;
  return out;
}

std::optional<std::vector<bool>> sat_oracle(const CnfFormula& cnf, std::int32_t max_vars) {
  if (cnf.num_vars > max_vars) {
    throw GuardError("SAT oracle: " + std::to_string(cnf.num_vars) + " variables exceeds guard " +
                     std::to_string(max_vars));
  }
  const auto n = static_cast<std::size_t>(cnf.num_vars);
  std::vector<bool> assignment(n);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    for (std::size_t i = 0; i < n; ++i) assignment[i] = (bits >> i & 1) != 0;
    if (cnf.satisfied_by(assignment)) return assignment;
  }
  return std::nullopt;
}

}  // namespace bcast2
