#include "bcast2/exact.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>

#include "bcast2/treedp.hpp"

namespace bcast2 {

namespace {

using Mask = std::uint64_t;

void guard(const Graph& g, Vertex max_order, Vertex hard_cap, const char* what) {
  const Vertex limit = std::min(max_order, hard_cap);
  if (g.order() > limit) {
    throw GuardError(std::string(what) + ": graph order " + std::to_string(g.order()) +
                     " exceeds size guard " + std::to_string(limit));
  }
}

Mask full_mask(Vertex n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

/// balls[r][v] = vertices within distance r of v, for r = 0..max_radius.
std::vector<std::vector<Mask>> ball_masks(const Graph& g, int max_radius) {
  const Vertex n = g.order();
  std::vector<std::vector<Mask>> balls(static_cast<std::size_t>(max_radius) + 1,
                                       std::vector<Mask>(static_cast<std::size_t>(n), 0));
  for (Vertex v = 0; v < n; ++v) {
    const auto dist = bfs_distances(g, v);
    for (Vertex u = 0; u < n; ++u) {
      for (int r = dist[u]; r <= max_radius; ++r) balls[r][v] |= Mask{1} << u;
    }
  }
  return balls;
}

/// Spanning tree by BFS from vertex 0, as a Graph on the same vertex ids.
Graph bfs_tree(const Graph& g) {
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> queue{0};
  std::vector<Edge> edges;
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        edges.emplace_back(v, w);
        queue.push_back(w);
      }
    }
  }
  return Graph(g.order(), std::move(edges));
}

class BranchAndBound {
 public:
  explicit BranchAndBound(const Graph& g) : n_(g.order()), full_(full_mask(g.order())) {
    const auto balls = ball_masks(g, 4);
    ball1_ = balls[1];
    ball2_ = balls[2];
    within4_ = balls[4];
    options_.resize(static_cast<std::size_t>(n_));
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v = 0; v < n_; ++v) {
        if (ball2_[v] >> u & 1) options_[u].push_back({v, 2});
      }
      for (Vertex v = 0; v < n_; ++v) {
        if (ball1_[v] >> u & 1) options_[u].push_back({v, 1});
      }
    }
    values_.assign(static_cast<std::size_t>(n_), 0);
  }

  SolveResult run(const BroadcastAssignment& incumbent) {
    best_cost_ = incumbent.cost();
    best_ = incumbent.values();
    search(0, 0);
    SolveResult result;
    result.optimum = best_cost_;
    result.witness = BroadcastAssignment(best_);
    result.method = SolveMethod::branch_and_bound;
    result.nodes_explored = nodes_;
    return result;
  }

 private:
  struct Option {
    Vertex center;
    std::uint8_t radius;
  };

  // Vertices pairwise more than 4 apart need disjoint sets of payers.
  std::int64_t lower_bound(Mask uncovered) const {
    std::int64_t count = 0;
    while (uncovered) {
      const int u = std::countr_zero(uncovered);
      ++count;
      uncovered &= ~within4_[u];
    }
    return count;
  }

  void search(Mask covered, std::int64_t cost) {
    ++nodes_;
    const Mask uncovered = full_ & ~covered;
    if (uncovered == 0) {
      if (cost < best_cost_) {
        best_cost_ = cost;
        best_ = values_;
      }
      return;
    }
    if (cost + lower_bound(uncovered) >= best_cost_) return;
    const int u = std::countr_zero(uncovered);
    for (const Option& opt : options_[u]) {
      const std::uint8_t before = values_[opt.center];
      if (before >= opt.radius) continue;
      const std::int64_t delta = opt.radius - before;
      if (cost + delta >= best_cost_) continue;
      values_[opt.center] = opt.radius;
      const Mask gained = opt.radius == 2 ? ball2_[opt.center] : ball1_[opt.center];
      search(covered | gained, cost + delta);
      values_[opt.center] = before;
    }
  }

  Vertex n_;
  Mask full_;
  std::vector<Mask> ball1_;
  std::vector<Mask> ball2_;
  std::vector<Mask> within4_;
  std::vector<std::vector<Option>> options_;
  std::vector<std::uint8_t> values_;
  std::vector<std::uint8_t> best_;
  std::int64_t best_cost_ = 0;
  std::int64_t nodes_ = 0;
};

/// Calls visit(S2, S1) for every disjoint pair with 2|S2| + |S1| = k.
/// Stops early when visit returns true; returns whether it did.
bool for_each_cost_k(Vertex n, std::int64_t k, const std::function<bool(Mask, Mask)>& visit) {
  for (std::int64_t s2 = 0; 2 * s2 <= k; ++s2) {
    const std::int64_t s1 = k - 2 * s2;
    if (s1 + s2 > n) continue;
    // Choose S2 first, then S1 from the remaining vertices.
    std::function<bool(Vertex, std::int64_t, Mask)> choose_s1;
    std::function<bool(Vertex, std::int64_t, Mask)> choose_s2;
    Mask chosen2 = 0;
    choose_s1 = [&](Vertex from, std::int64_t left, Mask acc) -> bool {
      if (left == 0) return visit(chosen2, acc);
      for (Vertex v = from; v + left <= n; ++v) {
        if (chosen2 >> v & 1) continue;
        if (choose_s1(v + 1, left - 1, acc | Mask{1} << v)) return true;
      }
      return false;
    };
    choose_s2 = [&](Vertex from, std::int64_t left, Mask acc) -> bool {
      if (left == 0) {
        chosen2 = acc;
        return choose_s1(0, s1, 0);
      }
      for (Vertex v = from; v + left <= n; ++v) {
        if (choose_s2(v + 1, left - 1, acc | Mask{1} << v)) return true;
      }
      return false;
    };
    if (choose_s2(0, s2, 0)) return true;
  }
  return false;
}

Mask union_of(const std::vector<Mask>& balls, Mask set) {
  Mask out = 0;
  while (set) {
    out |= balls[std::countr_zero(set)];
    set &= set - 1;
  }
  return out;
}

BroadcastAssignment assignment_from(Vertex n, Mask s2, Mask s1) {
  std::vector<std::uint8_t> values(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) {
    if (s2 >> v & 1) values[v] = 2;
    if (s1 >> v & 1) values[v] = 1;
  }
  return BroadcastAssignment(std::move(values));
}

/// Joint colour refinement of (g, a) and (g, b); returns the stable colours
/// of both copies, indexed [copy * n + v].
std::vector<int> refine_colors(const Graph& g, const BroadcastAssignment& a,
                               const BroadcastAssignment& b) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> color(2 * n);
  for (std::size_t v = 0; v < n; ++v) {
    color[v] = a[static_cast<Vertex>(v)];
    color[n + v] = b[static_cast<Vertex>(v)];
  }
  std::size_t classes = 0;
  while (true) {
    std::map<std::pair<int, std::vector<int>>, int> ids;
    std::vector<int> next(2 * n);
    for (std::size_t i = 0; i < 2 * n; ++i) {
      const std::size_t copy = i / n;
      const auto v = static_cast<Vertex>(i % n);
      std::vector<int> around;
      for (Vertex w : g.neighbors(v)) around.push_back(color[copy * n + static_cast<std::size_t>(w)]);
      std::sort(around.begin(), around.end());
      auto [it, fresh] = ids.emplace(std::make_pair(color[i], std::move(around)),
                                     static_cast<int>(ids.size()));
      next[i] = it->second;
    }
    color.swap(next);
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return color;
}

}  // namespace

SizeLimits clamp_limits(SizeLimits requested) {
  requested.bruteforce = std::clamp<Vertex>(requested.bruteforce, 1, kHardLimits.bruteforce);
  requested.enumerate = std::clamp<Vertex>(requested.enumerate, 1, kHardLimits.enumerate);
  requested.branch_and_bound =
      std::clamp<Vertex>(requested.branch_and_bound, 1, kHardLimits.branch_and_bound);
  return requested;
}

SolveResult solve_exact(const Graph& g, Vertex max_order) {
  guard(g, max_order, kHardLimits.branch_and_bound, "branch-and-bound");
  // Any 2-broadcast of a spanning tree dominates g, so it seeds the incumbent.
  const SolveResult seed = solve_tree(bfs_tree(g));
  BranchAndBound search(g);
  return search.run(seed.witness);
}

SolveResult solve_bruteforce(const Graph& g, Vertex max_order) {
  guard(g, max_order, kHardLimits.bruteforce, "brute force");
  const Vertex n = g.order();
  const auto balls = ball_masks(g, 2);
  const Mask full = full_mask(n);
  SolveResult result;
  result.method = SolveMethod::bruteforce;
  for (std::int64_t k = 1;; ++k) {
    Mask found2 = 0;
    Mask found1 = 0;
    const bool hit = for_each_cost_k(n, k, [&](Mask s2, Mask s1) {
      ++result.nodes_explored;
      if ((union_of(balls[2], s2) | union_of(balls[1], s1)) != full) return false;
      found2 = s2;
      found1 = s1;
      return true;
    });
    if (hit) {
      result.optimum = k;
      result.witness = assignment_from(n, found2, found1);
      return result;
    }
  }
}

std::size_t OptimaReport::efficient_count() const {
  return static_cast<std::size_t>(
      std::count_if(optima.begin(), optima.end(), [](const auto& o) { return o.efficient; }));
}

OptimaReport enumerate_optima(const Graph& g, Vertex max_order) {
  guard(g, max_order, kHardLimits.enumerate, "optimum enumeration");
  const Vertex n = g.order();
  const auto balls = ball_masks(g, 2);
  const Mask full = full_mask(n);

  OptimaReport report;
  report.optimum = solve_bruteforce(g, n).optimum;
  for_each_cost_k(n, report.optimum, [&](Mask s2, Mask s1) {
    if ((union_of(balls[2], s2) | union_of(balls[1], s1)) != full) return false;
    OptimalBroadcast opt;
    opt.assignment = assignment_from(n, s2, s1);
    opt.efficient = true;
    for (Vertex u = 0; u < n && opt.efficient; ++u) {
      int heard = 0;
      for (Vertex v = 0; v < n; ++v) {
        const Mask b = (s2 >> v & 1) ? balls[2][v] : (s1 >> v & 1) ? balls[1][v] : 0;
        heard += static_cast<int>(b >> u & 1);
      }
      opt.efficient = heard == 1;
    }
    report.optima.push_back(std::move(opt));
    return false;
  });
  std::sort(report.optima.begin(), report.optima.end(),
            [](const auto& x, const auto& y) { return x.assignment < y.assignment; });

  std::vector<std::size_t> representatives;
  for (std::size_t i = 0; i < report.optima.size(); ++i) {
    auto& opt = report.optima[i];
    auto same = std::find_if(representatives.begin(), representatives.end(), [&](std::size_t r) {
      return equivalent_under_automorphism(g, report.optima[r].assignment, opt.assignment);
    });
    if (same == representatives.end()) {
      opt.orbit = representatives.size();
      representatives.push_back(i);
    } else {
      opt.orbit = static_cast<std::size_t>(same - representatives.begin());
    }
  }
  report.orbit_count = representatives.size();
  return report;
}

DominationNumbers domination_oracles(const Graph& g, Vertex max_order) {
  guard(g, max_order, kHardLimits.enumerate, "domination oracles");
  const Vertex n = g.order();
  const Mask full = full_mask(n);
  const MetricsReport m = metrics(g);
  const auto balls = ball_masks(g, std::max(m.diameter, 1));
  DominationNumbers out;

  // gamma: smallest k with a k-subset whose closed neighbourhoods cover V.
  for (std::int64_t k = 1; out.gamma == 0; ++k) {
    std::function<bool(Vertex, std::int64_t, Mask)> pick = [&](Vertex from, std::int64_t left,
                                                                Mask acc) -> bool {
      if (left == 0) return acc == full;
      for (Vertex v = from; v + left <= n; ++v) {
        if (pick(v + 1, left - 1, acc | balls[1][v])) return true;
      }
      return false;
    };
    if (pick(0, k, 0)) out.gamma = k;
  }

  // gamma_b: values up to max(ecc(v), 1) (larger values only add cost).
  for (std::int64_t k = 1; out.gamma_b == 0; ++k) {
    std::function<bool(Vertex, std::int64_t, Mask)> assign = [&](Vertex v, std::int64_t left,
                                                                  Mask acc) -> bool {
      if (left == 0) return acc == full;
      if (v == n) return false;
      const std::int64_t top = std::min<std::int64_t>(left, std::max<std::int64_t>(m.ecc[v], 1));
      for (std::int64_t r = top; r >= 1; --r) {
        if (assign(v + 1, left - r, acc | balls[static_cast<std::size_t>(r)][v])) return true;
      }
      return assign(v + 1, left, acc);
    };
    if (assign(0, k, 0)) out.gamma_b = k;
  }
  return out;
}

bool equivalent_under_automorphism(const Graph& g, const BroadcastAssignment& a,
                                   const BroadcastAssignment& b) {
  if (a.size() != g.order() || b.size() != g.order()) {
    throw InputError("assignment length does not match graph order");
  }
  const Vertex n = g.order();
  const auto color = refine_colors(g, a, b);
  const auto un = static_cast<std::size_t>(n);
  {
    std::vector<int> ca(color.begin(), color.begin() + n);
    std::vector<int> cb(color.begin() + n, color.end());
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    if (ca != cb) return false;
  }

  // Map vertices of copy a in BFS order so each new vertex has a mapped
  // neighbour (except the first).
  std::vector<Vertex> order;
  {
    std::vector<char> seen(un, 0);
    order.push_back(0);
    seen[0] = 1;
    for (std::size_t head = 0; head < order.size(); ++head) {
      for (Vertex w : g.neighbors(order[head])) {
        if (!seen[w]) {
          seen[w] = 1;
          order.push_back(w);
        }
      }
    }
  }
  std::vector<Vertex> image(un, -1);
  std::vector<char> used(un, 0);
  std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
    if (depth == un) return true;
    const Vertex x = order[depth];
    for (Vertex y = 0; y < n; ++y) {
      if (used[y] || color[x] != color[un + static_cast<std::size_t>(y)]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < depth && ok; ++j) {
        const Vertex px = order[j];
        ok = g.has_edge(x, px) == g.has_edge(y, image[px]);
      }
      if (!ok) continue;
      image[x] = y;
      used[y] = 1;
      if (extend(depth + 1)) return true;
      used[y] = 0;
      image[x] = -1;
    }
    return false;
  };
  return extend(0);
}

}  // namespace bcast2
