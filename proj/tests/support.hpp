#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "bcast2/broadcast.hpp"
#include "bcast2/families.hpp"
#include "bcast2/graph.hpp"

namespace bcast2::testing {

/// Copy of g where old vertex v becomes perm[v].
inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph(g.order(), std::move(edges));
}

inline std::vector<Vertex> random_permutation(std::mt19937_64& rng, Vertex n) {
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

inline Vertex uniform(std::mt19937_64& rng, Vertex lo, Vertex hi) {
  return std::uniform_int_distribution<Vertex>(lo, hi)(rng);
}

/// Connected graph of order in [lo, hi], edge density drawn per graph.
inline Graph random_graph(std::mt19937_64& rng, Vertex lo, Vertex hi) {
  const Vertex n = uniform(rng, lo, hi);
  const double p = std::uniform_real_distribution<double>(0.0, 0.6)(rng);
  return random_connected_graph(n, p, rng());
}

inline Graph random_small_tree(std::mt19937_64& rng, Vertex lo, Vertex hi) {
  return random_tree(uniform(rng, lo, hi), rng());
}

/// Values drawn with P(0) = p_zero and the rest split evenly over 1 and 2.
inline BroadcastAssignment random_assignment(std::mt19937_64& rng, Vertex n, double p_zero) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::uint8_t> values(static_cast<std::size_t>(n));
  for (auto& v : values) {
    const double x = coin(rng);
    v = x < p_zero ? 0 : (x < p_zero + (1.0 - p_zero) / 2 ? 1 : 2);
  }
  return BroadcastAssignment(std::move(values));
}

struct RootedTriple {
  Graph tree;
  Vertex root;
  BroadcastAssignment f;
};

inline RootedTriple random_triple(std::mt19937_64& rng, Vertex max_n) {
  Graph t = random_small_tree(rng, 1, max_n);
  const Vertex root = uniform(rng, 0, t.order() - 1);
  const double p_zero = std::uniform_real_distribution<double>(0.4, 0.95)(rng);
  BroadcastAssignment f = random_assignment(rng, t.order(), p_zero);
  return {std::move(t), root, std::move(f)};
}

/// (T1, r1, f1) o (T2, r2, f2): disjoint union plus the edge r1 r2, rooted at r1.
inline RootedTriple compose(const RootedTriple& a, const RootedTriple& b) {
  const Vertex shift = a.tree.order();
  std::vector<Edge> edges = a.tree.edges();
  for (const auto& [u, v] : b.tree.edges()) edges.emplace_back(u + shift, v + shift);
  edges.emplace_back(a.root, b.root + shift);
  std::vector<std::uint8_t> values = a.f.values();
  values.insert(values.end(), b.f.values().begin(), b.f.values().end());
  return {Graph(shift + b.tree.order(), std::move(edges)), a.root,
          BroadcastAssignment(std::move(values))};
}

/// Calls fn on every assignment V -> {0, 1, 2}.
template <typename Fn>
void for_each_assignment(Vertex n, Fn&& fn) {
  std::vector<std::uint8_t> values(static_cast<std::size_t>(n), 0);
  for (;;) {
    fn(BroadcastAssignment(values));
    std::size_t i = 0;
    while (i < values.size() && values[i] == 2) values[i++] = 0;
    if (i == values.size()) return;
    ++values[i];
  }
}

/// Minimum cost over all 3^n assignments, by exhaustion.
inline std::int64_t optimum_by_exhaustion(const Graph& g) {
  std::int64_t best = -1;
  for_each_assignment(g.order(), [&](const BroadcastAssignment& f) {
    if ((best < 0 || f.cost() < best) && is_dominating(g, f)) best = f.cost();
  });
  return best;
}

inline std::string temp_path(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "bcast2_tests";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

}  // namespace bcast2::testing
