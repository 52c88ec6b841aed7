#include "bcast2/broadcast.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

namespace bcast2 {

BroadcastAssignment::BroadcastAssignment(std::vector<std::uint8_t> values)
    : values_(std::move(values)) {
  for (auto v : values_) {
    if (v > 2) throw InputError("broadcast value " + std::to_string(v) + " outside {0,1,2}");
  }
}

BroadcastAssignment BroadcastAssignment::zeros(Vertex n) {
  return BroadcastAssignment(std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0));
}

void BroadcastAssignment::set(Vertex v, std::uint8_t value) {
  if (value > 2) throw InputError("broadcast value " + std::to_string(value) + " outside {0,1,2}");
  values_.at(static_cast<std::size_t>(v)) = value;
}

std::int64_t BroadcastAssignment::cost() const {
  return std::accumulate(values_.begin(), values_.end(), std::int64_t{0});
}

std::vector<Vertex> BroadcastAssignment::positive_support() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < size(); ++v) {
    if (values_[v] > 0) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> BroadcastAssignment::zero_set() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < size(); ++v) {
    if (values_[v] == 0) out.push_back(v);
  }
  return out;
}

namespace {

void check_length(const Graph& g, const BroadcastAssignment& f) {
  if (f.size() != g.order()) {
    throw InputError("assignment has " + std::to_string(f.size()) + " values, graph has " +
                     std::to_string(g.order()) + " vertices");
  }
}

}  // namespace

CoverageReport validate(const Graph& g, const BroadcastAssignment& f) {
  check_length(g, f);
  CoverageReport report;
  report.dominators.resize(static_cast<std::size_t>(g.order()));
  // Epoch-stamped marks keep each ball enumeration proportional to its size.
  std::vector<std::int32_t> mark(static_cast<std::size_t>(g.order()), -1);
  std::vector<Vertex> frontier;
  std::vector<Vertex> next;
  for (Vertex v = 0; v < g.order(); ++v) {
    const int power = f[v];
    if (power == 0) continue;
    mark[v] = v;
    report.dominators[v].push_back(v);
    frontier.assign(1, v);
    for (int depth = 1; depth <= power; ++depth) {
      next.clear();
      for (Vertex x : frontier) {
        for (Vertex w : g.neighbors(x)) {
          if (mark[w] != v) {
            mark[w] = v;
            report.dominators[w].push_back(v);
            next.push_back(w);
          }
        }
      }
      frontier.swap(next);
    }
  }
  for (Vertex u = 0; u < g.order(); ++u) {
    if (report.dominators[u].empty()) report.uncovered.push_back(u);
  }
  report.is_valid = report.uncovered.empty();
  return report;
}

bool is_dominating(const Graph& g, const BroadcastAssignment& f) {
  check_length(g, f);
  // reach[u] = max over positive v of f(v) - d(u, v), computed level by level.
  std::vector<std::int8_t> reach(static_cast<std::size_t>(g.order()), -1);
  std::vector<Vertex> level[3];
  for (Vertex v = 0; v < g.order(); ++v) {
    if (f[v] > 0) {
      reach[v] = static_cast<std::int8_t>(f[v]);
      level[f[v]].push_back(v);
    }
  }
  for (int r = 2; r >= 1; --r) {
    for (Vertex x : level[r]) {
      if (reach[x] != r) continue;
      for (Vertex w : g.neighbors(x)) {
        if (reach[w] < r - 1) {
          reach[w] = static_cast<std::int8_t>(r - 1);
          level[r - 1].push_back(w);
        }
      }
    }
  }
  return std::all_of(reach.begin(), reach.end(), [](std::int8_t r) { return r >= 0; });
}

BroadcastAssignment normalize_leaves(const Graph& g, const BroadcastAssignment& f) {
  if (!is_dominating(g, f)) throw InputError("normalize_leaves requires a dominating 2-broadcast");
  BroadcastAssignment out = f;
  if (g.order() < 3) return out;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (g.degree(u) != 1 || out[u] == 0) continue;
    const Vertex support = g.neighbors(u)[0];
    out.set(support, std::max(out[u], out[support]));
    out.set(u, 0);
  }
  return out;
}

std::string certificate_json(const Graph& g, const BroadcastAssignment& f) {
  nlohmann::ordered_json j;
  j["n"] = g.order();
  j["values"] = f.values();
  j["cost"] = f.cost();
  j["valid"] = f.size() == g.order() && is_dominating(g, f);
  return j.dump();
}

}  // namespace bcast2
