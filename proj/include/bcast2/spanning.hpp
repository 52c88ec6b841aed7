#pragma once

#include <cstdint>
#include <vector>

#include "bcast2/broadcast.hpp"
#include "bcast2/graph.hpp"

namespace bcast2 {

inline constexpr std::size_t kDefaultSpanningTreeCap = 1'000'000;

/// Every spanning tree of g exactly once (edge include/exclude recursion).
/// Throws GuardError once more than `cap` trees have been produced.
std::vector<Graph> enumerate_spanning_trees(const Graph& g,
                                            std::size_t cap = kDefaultSpanningTreeCap);

/// min over spanning trees T of the tree optimum of T.
std::int64_t min_over_spanning_trees(const Graph& g, std::size_t cap = kDefaultSpanningTreeCap);

/// Blocks L(v_1)..L(v_m) built from an assignment: positive vertices in
/// non-increasing value order, each block rooted at its positive vertex.
struct PartitionCover {
  std::vector<Vertex> roots;
  std::vector<std::vector<Vertex>> blocks;
  /// BFS tree edges inside each block, preserving distances to its root.
  std::vector<std::vector<Edge>> block_edges;
};

struct SpanningExtraction {
  Graph tree;
  PartitionCover cover;
  /// Whether optimality of the input was confirmed by the exact solver.
  bool optimality_verified = false;
};

/// Block partition for a dominating 2-broadcast `f` on g. Throws
/// InputError if `f` is not dominating.
PartitionCover partition_cover(const Graph& g, const BroadcastAssignment& f);

/// Block trees joined by greedily chosen edges of g (smallest endpoints
/// first). Works for any dominating `f`, which still dominates the result.
Graph dominating_spanning_tree(const Graph& g, const BroadcastAssignment& f);

/// A spanning tree on which `f` still dominates. When g is small enough for
/// the exact solver, optimality of `f` is checked first and a non-optimal
/// `f` is rejected with InputError.
SpanningExtraction extract_optimal_spanning_tree(const Graph& g, const BroadcastAssignment& f);

}  // namespace bcast2
