#include "bcast2/treedp.hpp"

#include <algorithm>

namespace bcast2 {

namespace {

using Cost = std::int32_t;
constexpr Cost kUnreachable = -1;
constexpr std::uint8_t kNoChoice = 0xFF;

using CostVector = std::array<Cost, kNumClasses>;

constexpr CostVector primitive_costs() {
  CostVector v{};
  v.fill(kUnreachable);
  v[index(DpClass::C1)] = 2;
  v[index(DpClass::C2)] = 1;
  v[index(DpClass::C6)] = 0;
  return v;
}

void require_tree(const Graph& t) {
  if (!t.is_tree()) throw InputError("graph is not a tree");
}

}  // namespace

std::string_view class_name(DpClass c) {
  static constexpr std::string_view names[] = {"C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8"};
  return names[index(c)];
}

const ClassTable& class_table() { return detail::kClassTable; }

DpClass classify(const Graph& t, Vertex root, const BroadcastAssignment& f) {
  require_tree(t);
  if (root < 0 || root >= t.order()) throw InputError("root out of range");
  const CoverageReport cover = validate(t, f);
  if (cover.is_valid) {
    if (f[root] == 2) return DpClass::C1;
    if (f[root] == 1) return DpClass::C2;
    std::uint8_t best = 0;
    for (Vertex w : t.neighbors(root)) best = std::max(best, f[w]);
    return best == 2 ? DpClass::C5 : best == 1 ? DpClass::C4 : DpClass::C3;
  }
  const auto& s = cover.uncovered;
  if (s.size() == 1 && s[0] == root) return DpClass::C6;
  const bool inside = std::all_of(s.begin(), s.end(), [&](Vertex v) {
    return v == root || t.has_edge(root, v);
  });
  return inside ? DpClass::C7 : DpClass::C8;
}

SolveResult solve_tree(const Graph& t) {
  require_tree(t);
  const auto n = static_cast<std::size_t>(t.order());

  // BFS from vertex 0. Children of the vertex at position i occupy the
  // contiguous positions [first[i], first[i + 1]) in adjacency order, so the
  // bottom-up pass streams through memory.
  std::vector<Vertex> order;
  order.reserve(n);
  std::vector<std::size_t> first(n + 1, 0);
  {
    std::vector<char> seen(n, 0);
    order.push_back(0);
    seen[0] = 1;
    for (std::size_t i = 0; i < order.size(); ++i) {
      first[i] = order.size();
      for (Vertex w : t.neighbors(order[i])) {
        if (seen[w]) continue;
        seen[w] = 1;
        order.push_back(w);
      }
    }
    first[n] = n;
  }

  std::vector<CostVector> cost(n);
  // choice[j * 8 + k]: packed (parent class << 3 | child class) that produced
  // class k when the child at position j was absorbed into its parent.
  std::vector<std::uint8_t> choice(n * kNumClasses, kNoChoice);

  for (std::size_t i = n; i-- > 0;) {
    CostVector acc = primitive_costs();
    for (std::size_t j = first[i]; j < first[i + 1]; ++j) {
      const CostVector& child = cost[j];
      CostVector next;
      next.fill(kUnreachable);
      std::uint8_t* pick = &choice[j * kNumClasses];
      for (std::size_t p = 0; p < kNumClasses; ++p) {
        if (acc[p] == kUnreachable) continue;
        for (std::size_t q = 0; q < kNumClasses; ++q) {
          if (child[q] == kUnreachable) continue;
          const std::size_t k = index(compose_classes(class_at(p), class_at(q)));
          const Cost total = acc[p] + child[q];
          if (next[k] == kUnreachable || total < next[k]) {
            next[k] = total;
            pick[k] = static_cast<std::uint8_t>(p << 3 | q);
          }
        }
      }
      acc = next;
    }
    cost[i] = acc;
  }

  std::size_t best = kNumClasses;
  for (std::size_t k = 0; k <= index(DpClass::C5); ++k) {
    if (cost[0][k] == kUnreachable) continue;
    if (best == kNumClasses || cost[0][k] < cost[0][best]) best = k;
  }

  SolveResult result;
  result.method = SolveMethod::tree_dp;
  result.optimum = cost[0][best];
  result.nodes_explored = static_cast<std::int64_t>(n);

  // Top-down: undo the absorptions of each vertex from its last child back.
  std::vector<std::uint8_t> cls(n, 0);
  cls[0] = static_cast<std::uint8_t>(best);
  std::vector<std::uint8_t> values(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint8_t k = cls[i];
    for (std::size_t j = first[i + 1]; j-- > first[i];) {
      const std::uint8_t packed = choice[j * kNumClasses + k];
      cls[j] = static_cast<std::uint8_t>(packed & 7);
      k = static_cast<std::uint8_t>(packed >> 3);
    }
    values[static_cast<std::size_t>(order[i])] =
        k == index(DpClass::C1) ? 2 : k == index(DpClass::C2) ? 1 : 0;
  }
  result.witness = BroadcastAssignment(std::move(values));
  return result;
}

}  // namespace bcast2
