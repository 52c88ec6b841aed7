#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "bcast2/broadcast.hpp"
#include "bcast2/graph.hpp"
#include "bcast2/solve_result.hpp"

namespace bcast2 {

/// The eight situations a rooted partial 2-broadcast (T, r, f) can be in.
///
///   C1  dominating, f(r) = 2
///   C2  dominating, f(r) = 1
///   C3  dominating, f(r) = 0, every neighbor of r has value 0
///   C4  dominating, f(r) = 0, some neighbor has value 1, none has 2
///   C5  dominating, f(r) = 0, some neighbor has value 2
///   C6  exactly {r} is undominated
///   C7  the undominated set S is nonempty, S in N[r] and S != {r}
///   C8  the undominated set reaches outside N[r]
enum class DpClass : std::uint8_t { C1, C2, C3, C4, C5, C6, C7, C8 };

inline constexpr std::size_t kNumClasses = 8;

constexpr std::size_t index(DpClass c) { return static_cast<std::size_t>(c); }
constexpr DpClass class_at(std::size_t i) { return static_cast<DpClass>(i); }
constexpr bool is_accepting(DpClass c) { return index(c) <= index(DpClass::C5); }
std::string_view class_name(DpClass c);

using ClassTable = std::array<std::array<DpClass, kNumClasses>, kNumClasses>;

/// Row = class of the parent-side triple, column = class of the attached
/// child triple.
const ClassTable& class_table();

constexpr DpClass compose_classes(DpClass parent, DpClass child);

/// Class of (t, root, f) computed directly from coverage, independent of
/// the composition table. Throws InputError if t is not a tree.
DpClass classify(const Graph& t, Vertex root, const BroadcastAssignment& f);

/// Minimum-cost dominating 2-broadcast of a tree in O(n), with witness.
/// Rooted at vertex 0; children are absorbed in adjacency order.
SolveResult solve_tree(const Graph& t);

// ---------------------------------------------------------------------------

namespace detail {
using enum DpClass;
inline constexpr ClassTable kClassTable{{
    {C1, C1, C1, C1, C1, C1, C1, C8},
    {C2, C2, C2, C2, C2, C2, C8, C8},
    {C5, C4, C3, C3, C3, C7, C8, C8},
    {C5, C4, C4, C4, C4, C7, C8, C8},
    {C5, C5, C5, C5, C5, C5, C8, C8},
    {C5, C4, C6, C6, C3, C7, C8, C8},
    {C5, C7, C7, C7, C7, C7, C8, C8},
    {C8, C8, C8, C8, C8, C8, C8, C8},
}};
}  // namespace detail

constexpr DpClass compose_classes(DpClass parent, DpClass child) {
  return detail::kClassTable[index(parent)][index(child)];
}

}  // namespace bcast2
