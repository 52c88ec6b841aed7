#include "bcast2/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>
#include <unordered_set>

namespace bcast2 {

namespace {

bool connected(const std::vector<std::vector<Vertex>>& adj) {
  if (adj.empty()) return false;
  std::vector<char> seen(adj.size(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == adj.size();
}

std::vector<std::string_view> split_spaces(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(' ', start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

long long parse_int(std::string_view token, std::size_t line_no) {
  long long value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
    throw InputError("line " + std::to_string(line_no) + ": expected integer, got '" +
                     std::string(token) + "'");
  }
  return value;
}

}  // namespace

Graph::Graph(Vertex n, std::vector<Edge> edges) {
  if (n < 1) throw InputError("graph must have at least one vertex");
  adjacency_.resize(static_cast<std::size_t>(n));
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") has a vertex out of range");
    }
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw InputError("duplicate edge (" + std::to_string(dup->first) + ", " +
                     std::to_string(dup->second) + ")");
  }
  for (const auto& [u, v] : edges) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
  if (!connected(adjacency_)) throw InputError("graph is disconnected");
  edges_ = std::move(edges);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= order() || v >= order()) return false;
  const auto& nb = adjacency_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph parse_graph(std::string_view text) {
  std::vector<std::string_view> lines;
  {
    std::size_t start = 0;
    while (start < text.size()) {
      const std::size_t pos = text.find('\n', start);
      if (pos == std::string_view::npos) {
        lines.push_back(text.substr(start));
        break;
      }
      lines.push_back(text.substr(start, pos - start));
      start = pos + 1;
    }
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();

  std::optional<std::pair<long long, long long>> header;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const std::string_view line = lines[i];
    if (line.empty()) throw InputError("line " + std::to_string(line_no) + ": empty line");
    if (line[0] == 'c' && (line.size() == 1 || line[1] == ' ')) continue;
    const auto tokens = split_spaces(line);
    if (tokens[0] == "p") {
      if (header) throw InputError("line " + std::to_string(line_no) + ": second header");
      if (tokens.size() != 4 || tokens[1] != "edge") {
        throw InputError("line " + std::to_string(line_no) + ": malformed header");
      }
      const long long n = parse_int(tokens[2], line_no);
      const long long m = parse_int(tokens[3], line_no);
      if (n < 1 || n > std::numeric_limits<Vertex>::max() || m < 0) {
        throw InputError("line " + std::to_string(line_no) + ": invalid header counts");
      }
      header = {n, m};
    } else if (tokens[0] == "e") {
      if (!header) throw InputError("line " + std::to_string(line_no) + ": edge before header");
      if (tokens.size() != 3) {
        throw InputError("line " + std::to_string(line_no) + ": malformed edge line");
      }
      const long long u = parse_int(tokens[1], line_no);
      const long long v = parse_int(tokens[2], line_no);
      if (u < 1 || v < 1 || u > header->first || v > header->first) {
        throw InputError("line " + std::to_string(line_no) + ": vertex id out of range");
      }
      if (u == v) throw InputError("line " + std::to_string(line_no) + ": self-loop");
      edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    } else {
      throw InputError("line " + std::to_string(line_no) + ": unrecognized line");
    }
  }
  if (!header) throw InputError("missing 'p edge' header");
  if (static_cast<long long>(edges.size()) != header->second) {
    throw InputError("header declares " + std::to_string(header->second) + " edges, found " +
                     std::to_string(edges.size()));
  }
  return Graph(static_cast<Vertex>(header->first), std::move(edges));
}

std::string serialize_graph(const Graph& g) {
  std::string out = "p edge " + std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const auto& [u, v] : g.edges()) {
    out += "e ";
    out += std::to_string(u + 1);
    out += ' ';
    out += std::to_string(v + 1);
    out += '\n';
  }
  return out;
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open graph file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::vector<std::int32_t> bfs_distances(const Graph& g, Vertex source) {
  std::vector<std::int32_t> dist(static_cast<std::size_t>(g.order()), -1);
  std::vector<Vertex> queue;
  queue.reserve(dist.size());
  queue.push_back(source);
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<Vertex> ball(const Graph& g, Vertex center, int radius) {
  std::vector<Vertex> out{center};
  std::vector<std::int32_t> depth{0};
  std::unordered_set<Vertex> seen{center};
  for (std::size_t head = 0; head < out.size(); ++head) {
    if (depth[head] == radius) continue;
    for (Vertex w : g.neighbors(out[head])) {
      if (seen.insert(w).second) {
        out.push_back(w);
        depth.push_back(depth[head] + 1);
      }
    }
  }
  return out;
}

MetricsReport metrics(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  MetricsReport report;
  report.ecc.resize(n);
  const bool dense = g.order() <= kDenseDistanceLimit;
  if (dense) report.dist.resize(n * n);
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto row = bfs_distances(g, v);
    report.ecc[v] = *std::max_element(row.begin(), row.end());
    if (dense) std::copy(row.begin(), row.end(), report.dist.begin() + static_cast<std::ptrdiff_t>(v * n));
  }
  report.radius = *std::min_element(report.ecc.begin(), report.ecc.end());
  report.diameter = *std::max_element(report.ecc.begin(), report.ecc.end());
  for (Vertex v = 0; v < g.order(); ++v) {
    if (report.ecc[v] == report.radius) report.centers.push_back(v);
  }
  return report;
}

EdgeSplit split_at_edge(const Graph& g, Edge e) {
  auto [a, b] = e;
  if (!g.has_edge(a, b)) throw InputError("edge is not in the graph");
  // Flood from a without crossing e.
  std::vector<char> side(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> stack{a};
  side[a] = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if ((v == a && w == b) || (v == b && w == a)) continue;
      if (!side[w]) {
        side[w] = 1;
        stack.push_back(w);
      }
    }
  }
  if (side[b]) throw InputError("edge is not a cut-edge");

  std::vector<Vertex> first_ids;
  std::vector<Vertex> second_ids;
  for (Vertex v = 0; v < g.order(); ++v) (side[v] ? first_ids : second_ids).push_back(v);
  return EdgeSplit{induced_subgraph(g, first_ids), induced_subgraph(g, second_ids),
                   std::move(first_ids), std::move(second_ids)};
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    if (local[u] >= 0 && local[v] >= 0) edges.emplace_back(local[u], local[v]);
  }
  return Graph(static_cast<Vertex>(vertices.size()), std::move(edges));
}

namespace {

std::vector<Edge> bridges(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<std::int32_t> disc(n, -1);
  std::vector<std::int32_t> low(n, 0);
  std::vector<Edge> out;
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  std::int32_t timer = 0;
  std::vector<Frame> stack;
  stack.push_back({0, -1, 0});
  disc[0] = low[0] = timer++;
  while (!stack.empty()) {
    Frame& top = stack.back();
    const auto nb = g.neighbors(top.v);
    if (top.next < nb.size()) {
      const Vertex w = nb[top.next++];
      if (w == top.parent) continue;
      if (disc[w] < 0) {
        disc[w] = low[w] = timer++;
        stack.push_back({w, top.v, 0});
      } else {
        low[top.v] = std::min(low[top.v], disc[w]);
      }
    } else {
      const Frame done = top;
      stack.pop_back();
      if (!stack.empty()) {
        const Vertex p = stack.back().v;
        low[p] = std::min(low[p], low[done.v]);
        if (low[done.v] > disc[p]) out.emplace_back(std::min(p, done.v), std::max(p, done.v));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

StructureReport structure(const Graph& g) {
  StructureReport report;
  report.is_tree = g.is_tree();
  std::vector<char> is_support(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) {
      report.leaves.push_back(v);
      is_support[g.neighbors(v)[0]] = 1;
    }
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (is_support[v]) report.support_vertices.push_back(v);
  }
  report.cut_edges = bridges(g);

  if (report.is_tree) {
    // The internal vertices of a tree induce a subtree; it is a path iff no
    // internal vertex has three internal neighbors.
    report.is_caterpillar = true;
    for (Vertex v = 0; v < g.order() && report.is_caterpillar; ++v) {
      if (g.degree(v) < 2) continue;
      int internal = 0;
      for (Vertex w : g.neighbors(v)) internal += g.degree(w) >= 2 ? 1 : 0;
      if (internal > 2) report.is_caterpillar = false;
    }
  }
  return report;
}

}  // namespace bcast2
