#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bcast2/error.hpp"

namespace bcast2 {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected connected graph on vertices 0..n-1.
///
/// Construction normalizes every edge to (min, max), sorts the edge list and
/// rejects self-loops, duplicates, out-of-range ids and disconnected input.
class Graph {
 public:
  Graph(Vertex n, std::vector<Edge> edges);

  Vertex order() const { return static_cast<Vertex>(adjacency_.size()); }
  std::size_t size() const { return edges_.size(); }

  /// Sorted neighbor list of `v`.
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool has_edge(Vertex u, Vertex v) const;

  /// Canonical edge list, each (u, v) with u < v, lexicographically sorted.
  const std::vector<Edge>& edges() const { return edges_; }

  bool is_tree() const { return edges_.size() + 1 == adjacency_.size(); }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
};

/// Parses the line-oriented "p edge n m" / "e u v" format (1-indexed ids).
Graph parse_graph(std::string_view text);

/// Canonical serialization: header, then edges in sorted order, 1-indexed.
std::string serialize_graph(const Graph& g);

Graph read_graph_file(const std::string& path);

/// Hop distances from `source`; -1 never occurs since graphs are connected.
std::vector<std::int32_t> bfs_distances(const Graph& g, Vertex source);

/// Vertices within distance `radius` of `center`, in BFS order.
std::vector<Vertex> ball(const Graph& g, Vertex center, int radius);

/// Dense all-pairs distances are kept only up to this order.
inline constexpr Vertex kDenseDistanceLimit = 1 << 12;

struct MetricsReport {
  /// Row-major n*n hop distances; empty when n > kDenseDistanceLimit.
  std::vector<std::int32_t> dist;
  std::vector<std::int32_t> ecc;
  std::int32_t radius = 0;
  std::int32_t diameter = 0;
  std::vector<Vertex> centers;

  bool has_dense_distances() const { return !dist.empty(); }
  std::int32_t distance(Vertex u, Vertex v) const {
    return dist[static_cast<std::size_t>(u) * ecc.size() + v];
  }
};

MetricsReport metrics(const Graph& g);

/// Components of g - e. `first` contains e.first; the maps send each local
/// vertex id back to its id in g.
struct EdgeSplit {
  Graph first;
  Graph second;
  std::vector<Vertex> first_to_original;
  std::vector<Vertex> second_to_original;
};

EdgeSplit split_at_edge(const Graph& g, Edge e);

struct StructureReport {
  bool is_tree = false;
  bool is_caterpillar = false;
  std::vector<Vertex> leaves;
  std::vector<Vertex> support_vertices;
  std::vector<Edge> cut_edges;
};

StructureReport structure(const Graph& g);

/// Induced subgraph on `vertices` (must be connected). Vertex i of the
/// result corresponds to vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

}  // namespace bcast2
