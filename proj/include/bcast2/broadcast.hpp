#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bcast2/graph.hpp"

namespace bcast2 {

/// A function V -> {0, 1, 2}. Values outside that range are rejected on
/// construction.
class BroadcastAssignment {
 public:
  BroadcastAssignment() = default;
  explicit BroadcastAssignment(std::vector<std::uint8_t> values);
  /// All-zero assignment on n vertices.
  static BroadcastAssignment zeros(Vertex n);

  Vertex size() const { return static_cast<Vertex>(values_.size()); }
  std::uint8_t operator[](Vertex v) const { return values_[v]; }
  void set(Vertex v, std::uint8_t value);
  const std::vector<std::uint8_t>& values() const { return values_; }

  std::int64_t cost() const;
  /// Vertices with a positive value.
  std::vector<Vertex> positive_support() const;
  /// Vertices with value zero.
  std::vector<Vertex> zero_set() const;

  friend bool operator==(const BroadcastAssignment&, const BroadcastAssignment&) = default;
  friend auto operator<=>(const BroadcastAssignment&, const BroadcastAssignment&) = default;

 private:
  std::vector<std::uint8_t> values_;
};

struct CoverageReport {
  bool is_valid = false;
  std::vector<Vertex> uncovered;
  /// dominators[u]: every positive v with d(u, v) <= f(v), ascending.
  std::vector<std::vector<Vertex>> dominators;
};

/// Full coverage report. Throws InputError on a length mismatch.
CoverageReport validate(const Graph& g, const BroadcastAssignment& f);

/// Linear-time validity check without the per-vertex dominator lists.
bool is_dominating(const Graph& g, const BroadcastAssignment& f);

/// Moves every positive leaf value onto its support vertex (taking the
/// maximum with what is already there). The result is valid, no more
/// expensive than `f`, and zero on every leaf when n >= 3. On K_2 both
/// vertices are leaves of each other and `f` is returned unchanged.
BroadcastAssignment normalize_leaves(const Graph& g, const BroadcastAssignment& f);

/// {"n", "values", "cost", "valid"} in that order.
std::string certificate_json(const Graph& g, const BroadcastAssignment& f);

}  // namespace bcast2
