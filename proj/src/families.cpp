#include "bcast2/families.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <set>

#include <json.hpp>

#include "bcast2/error.hpp"
#include "bcast2/treedp.hpp"

namespace bcast2 {

FamilyKind parse_family_kind(std::string_view name) {
  if (name == "path") return FamilyKind::path;
  if (name == "cycle") return FamilyKind::cycle;
  if (name == "star") return FamilyKind::star;
  if (name == "spider") return FamilyKind::spider;
  if (name == "t9") return FamilyKind::t9;
  if (name == "f" || name == "family_f") return FamilyKind::family_f;
  if (name == "random_tree") return FamilyKind::random_tree;
  if (name == "random_caterpillar") return FamilyKind::random_caterpillar;
  throw InputError("unknown family '" + std::string(name) + "'");
}

Graph path_graph(Vertex n) {
  if (n < 1) throw InputError("path needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, std::move(edges));
}

Graph cycle_graph(Vertex n) {
  if (n < 3) throw InputError("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, std::move(edges));
}

Graph star_graph(Vertex n) {
  if (n < 1) throw InputError("star needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph(n, std::move(edges));
}

Graph spider_graph(std::int32_t legs, std::int32_t leg_length) {
  if (legs < 1 || leg_length < 1) throw InputError("spider needs legs >= 1 and leg length >= 1");
  std::vector<Edge> edges;
  Vertex next = 1;
  for (std::int32_t leg = 0; leg < legs; ++leg) {
    Vertex prev = 0;
    for (std::int32_t k = 0; k < leg_length; ++k) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Graph(next, std::move(edges));
}

Graph t9_graph() {
  using L = T9Layout;
  const auto [s1, s2, s3, s4] = L::supports;
  return Graph(9, {{L::center, s2},
                   {s2, s1},
                   {L::center, s3},
                   {s3, s4},
                   {s1, L::leaves[0]},
                   {s2, L::leaves[1]},
                   {s3, L::leaves[2]},
                   {s4, L::leaves[3]}});
}

Graph pruefer_decode(const std::vector<Vertex>& sequence) {
  const auto n = static_cast<Vertex>(sequence.size() + 2);
  std::vector<Vertex> degree(static_cast<std::size_t>(n), 1);
  for (Vertex v : sequence) {
    if (v < 0 || v >= n) throw InputError("Prüfer entry out of range");
    ++degree[v];
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) - 1);
  Vertex ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  Vertex leaf = ptr;
  for (Vertex v : sequence) {
    edges.emplace_back(leaf, v);
    if (--degree[v] == 1 && v < ptr) {
      leaf = v;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n - 1);
  return Graph(n, std::move(edges));
}

Graph random_tree(Vertex n, std::uint64_t seed) {
  if (n < 1) throw InputError("random tree needs n >= 1");
  if (n == 1) return Graph(1, {});
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  std::vector<Vertex> sequence(static_cast<std::size_t>(n) - 2);
  for (auto& v : sequence) v = pick(rng);
  return pruefer_decode(sequence);
}

Graph random_caterpillar(Vertex n, std::uint64_t seed) {
  if (n < 1) throw InputError("random caterpillar needs n >= 1");
  std::mt19937_64 rng(seed);
  const Vertex spine = std::uniform_int_distribution<Vertex>(1, n)(rng);
  std::vector<Vertex> label(static_cast<std::size_t>(n));
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < spine; ++v) edges.emplace_back(label[v], label[v + 1]);
  std::uniform_int_distribution<Vertex> on_spine(0, spine - 1);
  for (Vertex v = spine; v < n; ++v) edges.emplace_back(label[v], label[on_spine(rng)]);
  return Graph(n, std::move(edges));
}

Graph random_connected_graph(Vertex n, double p, std::uint64_t seed) {
  const Graph tree = random_tree(n, seed);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::bernoulli_distribution extra(p);
  std::vector<Edge> edges = tree.edges();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!tree.has_edge(u, v) && extra(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

Graph family_f_graph(std::int32_t m, std::optional<std::uint64_t> seed) {
  if (m < 1) throw InputError("family F needs m >= 1");
  const Graph base = t9_graph();
  std::vector<Edge> edges;
  for (std::int32_t k = 0; k < m; ++k) {
    for (const auto& [u, v] : base.edges()) edges.emplace_back(9 * k + u, 9 * k + v);
  }
  if (m > 1) {
    const Graph joins = seed ? random_tree(m, *seed) : path_graph(m);
    for (const auto& [a, b] : joins.edges()) {
      edges.emplace_back(9 * a + T9Layout::center, 9 * b + T9Layout::center);
    }
  }
  return Graph(9 * m, std::move(edges));
}

Graph generate(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::path:
      return path_graph(spec.n);
    case FamilyKind::cycle:
      return cycle_graph(spec.n);
    case FamilyKind::star:
      return star_graph(spec.n);
    case FamilyKind::spider:
      return spider_graph(spec.legs, spec.leg_length);
    case FamilyKind::t9:
      return t9_graph();
    case FamilyKind::family_f:
      return family_f_graph(spec.m, spec.seed);
    case FamilyKind::random_tree:
      return random_tree(spec.n, spec.seed.value_or(0));
    case FamilyKind::random_caterpillar:
      return random_caterpillar(spec.n, spec.seed.value_or(0));
  }
  throw InputError("unknown family");
}

namespace {

std::string ahu(const Graph& t, Vertex v, Vertex parent) {
  std::vector<std::string> parts;
  for (Vertex w : t.neighbors(v)) {
    if (w != parent) parts.push_back(ahu(t, w, v));
  }
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (const auto& p : parts) out += p;
  out += ")";
  return out;
}

std::vector<Vertex> tree_centers(const Graph& t) {
  const auto n = static_cast<std::size_t>(t.order());
  std::vector<std::size_t> degree(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < t.order(); ++v) {
    degree[v] = t.degree(v);
    if (degree[v] <= 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex v : layer) {
      for (Vertex w : t.neighbors(v)) {
        if (--degree[w] == 1) next.push_back(w);
      }
    }
    layer.swap(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

}  // namespace

std::string canonical_tree_form(const Graph& t) {
  if (!t.is_tree()) throw InputError("graph is not a tree");
  std::string best;
  for (Vertex c : tree_centers(t)) {
    std::string form = ahu(t, c, -1);
    if (best.empty() || form < best) best = std::move(form);
  }
  return best;
}

std::vector<Graph> enumerate_free_trees(Vertex n) {
  if (n < 1 || n > kMaxFreeTreeOrder) {
    throw InputError("free-tree enumeration supports 1 <= n <= " + std::to_string(kMaxFreeTreeOrder));
  }
  // Every tree on k + 1 vertices is some tree on k vertices plus a leaf.
  std::vector<Graph> current{Graph(1, {})};
  for (Vertex k = 1; k < n; ++k) {
    std::set<std::string> seen;
    std::vector<Graph> next;
    for (const Graph& t : current) {
      for (Vertex v = 0; v < k; ++v) {
        std::vector<Edge> edges = t.edges();
        edges.emplace_back(v, k);
        Graph grown(k + 1, std::move(edges));
        if (seen.insert(canonical_tree_form(grown)).second) next.push_back(std::move(grown));
      }
    }
    current = std::move(next);
  }
  return current;
}

namespace {

bool is_leaf(const Graph& t, Vertex v) { return t.degree(v) == 1; }

// Subtree hanging from `a` away from `x` is: a with one leaf child and one
// child b that itself has exactly one leaf child.
std::optional<std::array<Vertex, 4>> arm(const Graph& t, Vertex x, Vertex a) {
  if (t.degree(a) != 3) return std::nullopt;
  Vertex leaf = -1;
  Vertex b = -1;
  for (Vertex w : t.neighbors(a)) {
    if (w == x) continue;
    if (is_leaf(t, w) && leaf < 0) {
      leaf = w;
    } else if (t.degree(w) == 2) {
      b = w;
    }
  }
  if (leaf < 0 || b < 0) return std::nullopt;
  const auto nb = t.neighbors(b);
  const Vertex tip = nb[0] == a ? nb[1] : nb[0];
  if (!is_leaf(t, tip)) return std::nullopt;
  return std::array<Vertex, 4>{a, leaf, b, tip};
}

}  // namespace

std::optional<FamilyDecomposition> recognize_family_f(const Graph& t) {
  if (!t.is_tree()) throw InputError("graph is not a tree");
  const Vertex n = t.order();
  if (n % 9 != 0) return std::nullopt;

  std::vector<char> candidate(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<Vertex>> pieces(static_cast<std::size_t>(n));
  for (Vertex x = 0; x < n; ++x) {
    std::vector<Vertex> piece{x};
    int arms = 0;
    for (Vertex a : t.neighbors(x)) {
      if (auto found = arm(t, x, a)) {
        ++arms;
        piece.insert(piece.end(), found->begin(), found->end());
      }
    }
    if (arms == 2) {
      candidate[x] = 1;
      pieces[x] = std::move(piece);
    }
  }

  FamilyDecomposition out;
  std::vector<char> covered(static_cast<std::size_t>(n), 0);
  for (Vertex x = 0; x < n; ++x) {
    if (!candidate[x]) continue;
    for (Vertex v : pieces[x]) {
      if (covered[v]) return std::nullopt;
      covered[v] = 1;
    }
    for (Vertex w : t.neighbors(x)) {
      const bool in_piece = std::find(pieces[x].begin(), pieces[x].end(), w) != pieces[x].end();
      if (in_piece) continue;
      if (!candidate[w]) return std::nullopt;
      if (x < w) out.center_edges.emplace_back(x, w);
    }
    out.centers.push_back(x);
    out.copies.push_back(pieces[x]);
  }
  if (static_cast<Vertex>(out.centers.size()) * 9 != n) return std::nullopt;
  if (!std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; })) return std::nullopt;
  return out;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if (a % b != 0 && ((a > 0) == (b > 0))) ++q;
  return q;
}

std::string AuditReport::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["gamma_b2"] = gamma_b2;
  j["tree_bound"] = tree_bound;
  j["caterpillar_bound"] = caterpillar_bound ? nlohmann::ordered_json(*caterpillar_bound)
                                             : nlohmann::ordered_json(nullptr);
  j["tight_tree_bound"] = tight_tree_bound;
  j["in_extremal_family"] = in_extremal_family;
  return j.dump();
}

AuditReport audit_bounds(const Graph& t) {
  if (!t.is_tree()) throw InputError("graph is not a tree");
  const StructureReport shape = structure(t);
  AuditReport report;
  report.n = t.order();
  report.gamma_b2 = solve_tree(t).optimum;
  report.tree_bound = ceil_div(4 * static_cast<std::int64_t>(report.n), 9);
  if (shape.is_caterpillar) report.caterpillar_bound = ceil_div(2 * static_cast<std::int64_t>(report.n), 5);
  report.tight_tree_bound = report.gamma_b2 == report.tree_bound;

  bool is_path = true;
  for (Vertex v = 0; v < t.order(); ++v) is_path = is_path && t.degree(v) <= 2;
  const bool small_path = is_path && (report.n == 1 || report.n == 2 || report.n == 4);
  report.in_extremal_family = small_path || recognize_family_f(t).has_value();
  return report;
}

bool ceiling_lemma_check(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                         std::int64_t n) {
  if (b <= 0 || d <= 0) throw InputError("ceiling lemma needs b > 0 and d > 0");
  if (a * d > c * b) throw InputError("ceiling lemma needs a/b <= c/d");
  return a + ceil_div(c * (n - b), d) <= ceil_div(c * n, d);
}

}  // namespace bcast2
