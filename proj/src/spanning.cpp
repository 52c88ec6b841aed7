#include "bcast2/spanning.hpp"

#include <algorithm>
#include <numeric>

#include "bcast2/exact.hpp"
#include "bcast2/treedp.hpp"

namespace bcast2 {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

class SpanningTreeEnumerator {
 public:
  SpanningTreeEnumerator(const Graph& g, std::size_t cap) : g_(g), cap_(cap) {}

  std::vector<Graph> run() {
    std::vector<Edge> chosen;
    recurse(0, chosen);
    return std::move(trees_);
  }

 private:
  bool forest_ok(const std::vector<Edge>& chosen, const Edge& extra) const {
    DisjointSets ds(static_cast<std::size_t>(g_.order()));
    for (const auto& [u, v] : chosen) ds.unite(u, v);
    return ds.find(extra.first) != ds.find(extra.second);
  }

  // Can chosen ∪ edges[from..] still connect the graph?
  bool still_connects(const std::vector<Edge>& chosen, std::size_t from) const {
    DisjointSets ds(static_cast<std::size_t>(g_.order()));
    std::size_t components = static_cast<std::size_t>(g_.order());
    for (const auto& [u, v] : chosen) components -= ds.unite(u, v) ? 1 : 0;
    const auto& edges = g_.edges();
    for (std::size_t i = from; i < edges.size(); ++i) {
      components -= ds.unite(edges[i].first, edges[i].second) ? 1 : 0;
    }
    return components == 1;
  }

  void recurse(std::size_t i, std::vector<Edge>& chosen) {
    if (chosen.size() + 1 == static_cast<std::size_t>(g_.order())) {
      if (trees_.size() == cap_) {
        throw GuardError("spanning tree count exceeds cap " + std::to_string(cap_));
      }
      trees_.emplace_back(g_.order(), chosen);
      return;
    }
    const auto& edges = g_.edges();
    if (i == edges.size()) return;
    // Contract: keep edge i.
    if (forest_ok(chosen, edges[i])) {
      chosen.push_back(edges[i]);
      recurse(i + 1, chosen);
      chosen.pop_back();
    }
    // Delete: drop edge i, if the rest can still span.
    if (still_connects(chosen, i + 1)) recurse(i + 1, chosen);
  }

  const Graph& g_;
  std::size_t cap_;
  std::vector<Graph> trees_;
};

}  // namespace

std::vector<Graph> enumerate_spanning_trees(const Graph& g, std::size_t cap) {
  return SpanningTreeEnumerator(g, cap).run();
}

std::int64_t min_over_spanning_trees(const Graph& g, std::size_t cap) {
  std::int64_t best = -1;
  for (const Graph& t : enumerate_spanning_trees(g, cap)) {
    const std::int64_t value = solve_tree(t).optimum;
    if (best < 0 || value < best) best = value;
  }
  return best;
}

PartitionCover partition_cover(const Graph& g, const BroadcastAssignment& f) {
  if (!is_dominating(g, f)) throw InputError("assignment is not a dominating 2-broadcast");
  const auto n = static_cast<std::size_t>(g.order());
  PartitionCover cover;
  cover.roots = f.positive_support();
  std::stable_sort(cover.roots.begin(), cover.roots.end(),
                   [&](Vertex a, Vertex b) { return f[a] > f[b]; });

  std::vector<std::int32_t> owner(n, -1);
  for (std::size_t i = 0; i < cover.roots.size(); ++i) {
    const Vertex v = cover.roots[i];
    owner[v] = static_cast<std::int32_t>(i);
    for (Vertex w : g.neighbors(v)) {
      if (f[w] == 0 && owner[w] < 0) owner[w] = static_cast<std::int32_t>(i);
    }
  }
  // Leftover zero vertices hear a value-2 root at distance 2 through a zero
  // neighbour owned by a value-2 block; join the smallest such neighbour's block.
  const std::vector<std::int32_t> first_pass = owner;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (first_pass[v] >= 0) continue;
    for (Vertex u : g.neighbors(v)) {
      const std::int32_t j = first_pass[u];
      if (f[u] == 0 && j >= 0 && f[cover.roots[static_cast<std::size_t>(j)]] == 2) {
        owner[v] = j;
        break;
      }
    }
    if (owner[v] < 0) throw InputError("vertex " + std::to_string(v) + " cannot be placed in a block");
  }

  cover.blocks.resize(cover.roots.size());
  for (Vertex v = 0; v < g.order(); ++v) cover.blocks[static_cast<std::size_t>(owner[v])].push_back(v);

  cover.block_edges.resize(cover.roots.size());
  std::vector<char> seen(n, 0);
  for (std::size_t i = 0; i < cover.roots.size(); ++i) {
    const auto block = static_cast<std::int32_t>(i);
    std::vector<Vertex> queue{cover.roots[i]};
    seen[cover.roots[i]] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex x = queue[head];
      for (Vertex w : g.neighbors(x)) {
        if (owner[w] != block || seen[w]) continue;
        seen[w] = 1;
        cover.block_edges[i].emplace_back(std::min(x, w), std::max(x, w));
        queue.push_back(w);
      }
    }
    if (queue.size() != cover.blocks[i].size()) {
      throw InputError("block of vertex " + std::to_string(cover.roots[i]) + " is not connected");
    }
  }
  return cover;
}

namespace {

Graph join_blocks(const Graph& g, const PartitionCover& cover) {
  std::vector<Edge> edges;
  DisjointSets ds(static_cast<std::size_t>(g.order()));
  for (const auto& block : cover.block_edges) {
    for (const auto& [u, v] : block) {
      ds.unite(u, v);
      edges.emplace_back(u, v);
    }
  }
  for (const auto& [u, v] : g.edges()) {
    if (ds.unite(u, v)) edges.emplace_back(u, v);
  }
  return Graph(g.order(), std::move(edges));
}

}  // namespace

Graph dominating_spanning_tree(const Graph& g, const BroadcastAssignment& f) {
  return join_blocks(g, partition_cover(g, f));
}

SpanningExtraction extract_optimal_spanning_tree(const Graph& g, const BroadcastAssignment& f) {
  if (f.size() != g.order()) throw InputError("assignment length does not match graph order");
  if (!is_dominating(g, f)) throw InputError("assignment is not a dominating 2-broadcast");
  bool verified = false;
  if (g.order() <= SizeLimits{}.branch_and_bound) {
    if (solve_exact(g).optimum != f.cost()) throw InputError("assignment is not optimal");
    verified = true;
  }
  PartitionCover cover = partition_cover(g, f);
  Graph tree = join_blocks(g, cover);
  return SpanningExtraction{std::move(tree), std::move(cover), verified};
}

}  // namespace bcast2
