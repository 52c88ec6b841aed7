#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bcast2/graph.hpp"

namespace bcast2 {

enum class FamilyKind { path, cycle, star, spider, t9, family_f, random_tree, random_caterpillar };

/// Parses "path", "cycle", "star", "spider", "t9", "f" / "family_f",
/// "random_tree", "random_caterpillar".
FamilyKind parse_family_kind(std::string_view name);

struct FamilySpec {
  FamilyKind kind = FamilyKind::path;
  Vertex n = 0;            ///< order for path, cycle, star, random_*
  std::int32_t m = 1;      ///< number of T_9 copies for family_f
  std::int32_t legs = 0;   ///< spider
  std::int32_t leg_length = 0;
  /// random_* draws; for family_f a seed switches the center-joining tree
  /// from a path to a random tree.
  std::optional<std::uint64_t> seed;
};

/// Throws InputError on invalid parameters.
Graph generate(const FamilySpec& spec);

Graph path_graph(Vertex n);
Graph cycle_graph(Vertex n);
/// Star on n vertices: center 0 and n - 1 leaves.
Graph star_graph(Vertex n);
/// Center 0 with `legs` paths of `leg_length` vertices each.
Graph spider_graph(std::int32_t legs, std::int32_t leg_length);

/// Named vertices of T_9 as laid out by t9_graph().
struct T9Layout {
  static constexpr Vertex center = 0;
  static constexpr Vertex supports[4] = {2, 1, 3, 4};  ///< s1, s2, s3, s4
  static constexpr Vertex leaves[4] = {5, 6, 7, 8};    ///< leaf of s1..s4
};

/// Caterpillar with spine s1 - s2 - x - s3 - s4 and one leaf on every s_i.
Graph t9_graph();

/// m copies of T_9 (copy k on vertices 9k..9k+8, center 9k) whose centers
/// are joined by a path, or by a random tree when a seed is given.
Graph family_f_graph(std::int32_t m, std::optional<std::uint64_t> seed = std::nullopt);

/// Tree from a Prüfer sequence of length n - 2 (linear-time decode).
Graph pruefer_decode(const std::vector<Vertex>& sequence);

/// Uniform labeled tree.
Graph random_tree(Vertex n, std::uint64_t seed);
/// Random spine, remaining vertices hung on it as leaves, labels shuffled.
Graph random_caterpillar(Vertex n, std::uint64_t seed);
/// Random tree plus every other pair independently with probability p.
Graph random_connected_graph(Vertex n, double p, std::uint64_t seed);

inline constexpr Vertex kMaxFreeTreeOrder = 10;

/// AHU encoding rooted at the center (smaller of the two for bicentral
/// trees); equal strings iff isomorphic trees.
std::string canonical_tree_form(const Graph& t);

/// One representative per isomorphism class of trees of order n.
std::vector<Graph> enumerate_free_trees(Vertex n);

struct FamilyDecomposition {
  std::vector<Vertex> centers;
  /// copies[k]: the 9 vertices of the k-th T_9, center first.
  std::vector<std::vector<Vertex>> copies;
  std::vector<Edge> center_edges;
};

/// Decomposition into T_9 copies joined center to center, if t is in F.
std::optional<FamilyDecomposition> recognize_family_f(const Graph& t);

struct AuditReport {
  Vertex n = 0;
  std::int64_t gamma_b2 = 0;
  std::int64_t tree_bound = 0;
  /// Present when the tree is a caterpillar.
  std::optional<std::int64_t> caterpillar_bound;
  bool tight_tree_bound = false;
  bool in_extremal_family = false;

  bool violates_tree_bound() const { return gamma_b2 > tree_bound; }
  bool violates_caterpillar_bound() const {
    return caterpillar_bound && gamma_b2 > *caterpillar_bound;
  }
  std::string to_json() const;
};

AuditReport audit_bounds(const Graph& t);

/// ceil(a / b) for b > 0 and any sign of a.
std::int64_t ceil_div(std::int64_t a, std::int64_t b);

/// Evaluates a + ceil(c(n - b)/d) <= ceil(cn/d). Requires b, d > 0 and
/// a/b <= c/d (InputError otherwise).
bool ceiling_lemma_check(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                         std::int64_t n);

}  // namespace bcast2
