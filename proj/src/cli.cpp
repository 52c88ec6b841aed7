#include "bcast2/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "bcast2/broadcast.hpp"
#include "bcast2/error.hpp"
#include "bcast2/exact.hpp"
#include "bcast2/families.hpp"
#include "bcast2/graph.hpp"
#include "bcast2/reduction.hpp"
#include "bcast2/solve_result.hpp"
#include "bcast2/spanning.hpp"
#include "bcast2/treedp.hpp"

namespace bcast2::cli {

namespace {

using json = nlohmann::ordered_json;

struct RunConfig {
  std::string input;
  std::string output;
  std::string certificate;
  std::string roles;
  std::string solver = "auto";
  std::string family;
  Vertex n = 0;
  std::string m = "1";
  std::int32_t legs = 0;
  std::int32_t leg_length = 0;
  std::uint64_t seed = 0;
  bool has_seed = false;
  std::size_t cap = kDefaultSpanningTreeCap;
  Vertex exhaustive = 0;
  std::int32_t random_caterpillars = 0;
  Vertex max_n = 60;
  unsigned jobs = 1;
  std::string format = "json";
  Vertex guard = 0;
  bool enumerate = false;
  SizeLimits limits;
};

std::string read_text(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw InputError("cannot write '" + path + "'");
}

Graph load_graph(const RunConfig& cfg) {
  if (cfg.input.empty()) throw InputError("--input is required");
  return parse_graph(read_text(cfg.input));
}

/// Default guards, then BROADCAST2_MAX_N, then --guard; always clamped.
SizeLimits resolve_limits(Vertex guard_flag) {
  SizeLimits limits;
  if (const char* env = std::getenv(kMaxNEnv); env && *env) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (*end != '\0' || value < 1) throw InputError(std::string(kMaxNEnv) + " must be a positive integer");
    const auto v = static_cast<Vertex>(std::min<long>(value, 1 << 20));
    limits = SizeLimits{v, v, v};
  }
  if (guard_flag > 0) limits = SizeLimits{guard_flag, guard_flag, guard_flag};
  return clamp_limits(limits);
}

/// Parses "k" or "a..b" into an inclusive range.
std::pair<std::int32_t, std::int32_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw InputError("expected an integer or a range a..b, got '" + text + "'");
  }
}

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.output.empty()) {
    out << text;
  } else {
    write_text(cfg.output, text);
  }
}

// ---------------------------------------------------------------------------

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
  const Graph g = load_graph(cfg);
  std::string solver = cfg.solver;
  if (solver == "auto") solver = g.is_tree() ? "treedp" : "bnb";

  SolveResult result;
  if (solver == "treedp") {
    if (!g.is_tree()) throw InputError("--solver treedp needs a tree");
    result = solve_tree(g);
  } else if (solver == "bnb") {
    result = solve_exact(g, cfg.limits.branch_and_bound);
  } else if (solver == "bruteforce") {
    result = solve_bruteforce(g, cfg.limits.bruteforce);
  } else {
    throw InputError("unknown solver '" + solver + "'");
  }
  if (!is_dominating(g, result.witness) || result.witness.cost() != result.optimum) {
    throw std::logic_error("solver returned an invalid witness");
  }

  if (cfg.format == "text") {
    std::ostringstream text;
    text << "gamma_b2 " << result.optimum << "\nmethod " << method_name(result.method)
         << "\nnodes_explored " << result.nodes_explored << "\nvalues";
    for (auto v : result.witness.values()) text << ' ' << static_cast<int>(v);
    text << '\n';
    emit(cfg, out, text.str());
  } else {
    emit(cfg, out, result_json(g, result) + "\n");
  }
  return kOk;
}

int cmd_gen(const RunConfig& cfg, std::ostream& out) {
  if (cfg.family.empty()) throw InputError("--family is required");
  FamilySpec spec;
  spec.kind = parse_family_kind(cfg.family);
  spec.n = cfg.n;
  const auto [m_lo, m_hi] = parse_range(cfg.m);
  if (m_lo != m_hi) throw InputError("gen takes a single --m");
  spec.m = m_lo;
  spec.legs = cfg.legs;
  spec.leg_length = cfg.leg_length;
  if (cfg.has_seed) spec.seed = cfg.seed;
  emit(cfg, out, serialize_graph(generate(spec)));
  return kOk;
}

int cmd_reduce(const RunConfig& cfg, std::ostream& out) {
  if (cfg.input.empty()) throw InputError("--input is required");
  const CnfFormula cnf = parse_dimacs(read_text(cfg.input));
  const Reduction red = build_reduction(cnf);
  const std::string roles = red.map.to_json();
  if (!cfg.roles.empty()) write_text(cfg.roles, roles + "\n");
  // The role map rides along as a comment line, so the output stays a
  // valid graph file.
  emit(cfg, out, "c roles " + roles + "\n" + serialize_graph(red.graph));
  return kOk;
}

BroadcastAssignment load_certificate(const std::string& path, Vertex n,
                                     std::optional<std::int64_t>* claimed_cost) {
  json j;
  try {
    j = json::parse(read_text(path));
  } catch (const json::parse_error& e) {
    throw InputError(std::string("certificate is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("values") || !j["values"].is_array()) {
    throw InputError("certificate needs a \"values\" array");
  }
  if (j.contains("n") && (!j["n"].is_number_integer() || j["n"].get<std::int64_t>() != n)) {
    throw InputError("certificate n does not match the graph order " + std::to_string(n));
  }
  std::vector<std::uint8_t> values;
  for (const auto& v : j["values"]) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0 || v.get<std::int64_t>() > 2) {
      throw InputError("certificate values must be 0, 1 or 2");
    }
    values.push_back(static_cast<std::uint8_t>(v.get<int>()));
  }
  if (static_cast<Vertex>(values.size()) != n) {
    throw InputError("certificate has " + std::to_string(values.size()) + " values, graph has " +
                     std::to_string(n) + " vertices");
  }
  if (claimed_cost) {
    if (j.contains("cost")) {
      if (!j["cost"].is_number_integer()) throw InputError("certificate cost must be an integer");
      *claimed_cost = j["cost"].get<std::int64_t>();
    } else {
      claimed_cost->reset();
    }
  }
  return BroadcastAssignment(std::move(values));
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const Graph g = load_graph(cfg);
  if (cfg.certificate.empty()) throw InputError("--certificate is required");
  std::optional<std::int64_t> claimed;
  const BroadcastAssignment f = load_certificate(cfg.certificate, g.order(), &claimed);
  const CoverageReport report = validate(g, f);
  const bool cost_ok = !claimed || *claimed == f.cost();
  const bool ok = report.is_valid && cost_ok;

  json j;
  j["ok"] = ok;
  j["valid"] = report.is_valid;
  j["cost"] = f.cost();
  j["claimed_cost"] = claimed ? json(*claimed) : json(nullptr);
  j["uncovered"] = report.uncovered;
  if (cfg.format == "text") {
    out << (ok ? "OK" : "FAILED") << " valid=" << report.is_valid << " cost=" << f.cost();
    if (claimed) out << " claimed=" << *claimed;
    out << " uncovered=" << report.uncovered.size() << '\n';
  } else {
    out << j.dump() << '\n';
  }
  return ok ? kOk : kFailed;
}

struct AuditItem {
  std::string label;
  Graph tree;
};

std::vector<AuditItem> audit_corpus(const RunConfig& cfg) {
  std::vector<AuditItem> items;
  int modes = 0;
  if (cfg.exhaustive > 0) {
    ++modes;
    if (cfg.exhaustive > kMaxFreeTreeOrder) {
      throw InputError("--exhaustive supports n <= " + std::to_string(kMaxFreeTreeOrder));
    }
    for (Graph& t : enumerate_free_trees(cfg.exhaustive)) {
      items.push_back({"free_tree_" + std::to_string(items.size()), std::move(t)});
    }
  }
  if (cfg.random_caterpillars > 0) {
    ++modes;
    if (cfg.max_n < 1) throw InputError("--max-n must be positive");
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<Vertex> order(1, cfg.max_n);
    for (std::int32_t i = 0; i < cfg.random_caterpillars; ++i) {
      const Vertex n = order(rng);
      const std::uint64_t sub = rng();
      items.push_back({"random_caterpillar_" + std::to_string(i), random_caterpillar(n, sub)});
    }
  }
  if (!cfg.family.empty()) {
    ++modes;
    const auto kind = parse_family_kind(cfg.family);
    if (kind == FamilyKind::family_f) {
      const auto [lo, hi] = parse_range(cfg.m);
      if (lo < 1 || hi < lo) throw InputError("--m range must satisfy 1 <= a <= b");
      for (std::int32_t m = lo; m <= hi; ++m) {
        std::optional<std::uint64_t> seed;
        if (cfg.has_seed) seed = cfg.seed;
        items.push_back({"family_f_" + std::to_string(m), family_f_graph(m, seed)});
      }
    } else {
      FamilySpec spec{kind, cfg.n, 1, cfg.legs, cfg.leg_length, std::nullopt};
      if (cfg.has_seed) spec.seed = cfg.seed;
      items.push_back({cfg.family, generate(spec)});
    }
  }
  if (!cfg.input.empty()) {
    ++modes;
    items.push_back({cfg.input, load_graph(cfg)});
  }
  if (modes != 1) {
    throw InputError("audit needs exactly one of --exhaustive, --random-caterpillars, --family, --input");
  }
  return items;
}

int cmd_audit(const RunConfig& cfg, std::ostream& out) {
  const std::vector<AuditItem> items = audit_corpus(cfg);
  std::vector<AuditReport> reports(items.size());
  std::vector<bool> is_small_path(items.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(cfg.jobs, static_cast<unsigned>(items.size())));
  std::size_t next = 0;
  std::mutex lock;
  std::exception_ptr failure;
  auto work = [&] {
    for (;;) {
      std::size_t i = 0;
      {
        std::lock_guard<std::mutex> guard(lock);
        if (next >= items.size() || failure) return;
        i = next++;
      }
      try {
        reports[i] = audit_bounds(items[i].tree);
      } catch (...) {
        std::lock_guard<std::mutex> guard(lock);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  double max_ratio = 0.0;
  json tight = json::array();
  std::int64_t tree_violations = 0;
  std::int64_t caterpillar_violations = 0;
  std::int64_t characterization_violations = 0;
  std::ostringstream body;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const AuditReport& r = reports[i];
    max_ratio = std::max(max_ratio, static_cast<double>(r.gamma_b2) / static_cast<double>(r.tree_bound));
    if (r.tight_tree_bound) tight.push_back(items[i].label);
    tree_violations += r.violates_tree_bound();
    caterpillar_violations += r.violates_caterpillar_bound();
    characterization_violations += r.tight_tree_bound && !r.in_extremal_family;
    if (cfg.format == "text") {
      body << items[i].label << " n=" << r.n << " gamma_b2=" << r.gamma_b2 << " tree_bound=" << r.tree_bound;
      if (r.caterpillar_bound) body << " caterpillar_bound=" << *r.caterpillar_bound;
      body << (r.tight_tree_bound ? " tight" : "") << (r.in_extremal_family ? " extremal" : "") << '\n';
    } else {
      json line;
      line["label"] = items[i].label;
      line["report"] = json::parse(r.to_json());
      body << line.dump() << '\n';
    }
  }
  json summary;
  summary["count"] = reports.size();
  summary["max_ratio"] = max_ratio;
  summary["tight"] = tight;
  summary["tree_bound_violations"] = tree_violations;
  summary["caterpillar_bound_violations"] = caterpillar_violations;
  summary["characterization_violations"] = characterization_violations;
  if (cfg.format == "text") {
    body << "count " << reports.size() << " max_ratio " << max_ratio << " tight " << tight.size()
         << " violations " << tree_violations + caterpillar_violations + characterization_violations << '\n';
  } else {
    body << json{{"summary", summary}}.dump() << '\n';
  }
  emit(cfg, out, body.str());
  const bool clean = tree_violations == 0 && caterpillar_violations == 0 && characterization_violations == 0;
  return clean ? kOk : kFailed;
}

int cmd_spanning(const RunConfig& cfg, std::ostream& out) {
  const Graph g = load_graph(cfg);
  const SolveResult exact = solve_exact(g, cfg.limits.branch_and_bound);
  BroadcastAssignment f = exact.witness;
  if (!cfg.certificate.empty()) f = load_certificate(cfg.certificate, g.order(), nullptr);

  const SpanningExtraction extraction = extract_optimal_spanning_tree(g, f);
  const std::int64_t tree_value = solve_tree(extraction.tree).optimum;
  bool ok = tree_value == exact.optimum && is_dominating(extraction.tree, f);

  json j;
  j["gamma_b2"] = exact.optimum;
  j["extracted_tree_gamma_b2"] = tree_value;
  j["optimality_verified"] = extraction.optimality_verified;
  if (cfg.enumerate) {
    const auto trees = enumerate_spanning_trees(g, cfg.cap);
    std::int64_t best = -1;
    for (const Graph& t : trees) {
      const std::int64_t v = solve_tree(t).optimum;
      if (best < 0 || v < best) best = v;
    }
    j["spanning_tree_count"] = trees.size();
    j["min_over_spanning_trees"] = best;
    ok = ok && best == exact.optimum;
  }
  j["ok"] = ok;
  j["blocks"] = extraction.cover.blocks;
  j["tree"] = extraction.tree.edges();
  if (!cfg.output.empty()) write_text(cfg.output, serialize_graph(extraction.tree));
  if (cfg.format == "text") {
    out << (ok ? "OK" : "FAILED") << " gamma_b2=" << exact.optimum << " tree=" << tree_value << '\n';
  } else {
    out << j.dump() << '\n';
  }
  return ok ? kOk : kFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Dominating 2-broadcast toolkit", "broadcast2"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--jobs", cfg.jobs, "Worker threads for corpus commands")->check(CLI::Range(1u, 1024u));
  app.add_option("--guard", cfg.guard, "Override the exponential-solver size guards (clamped)");

  auto* solve = app.add_subcommand("solve", "Compute the dominating 2-broadcast number");
  solve->add_option("--input", cfg.input, "Graph file ('-' for stdin)");
  solve->add_option("--output", cfg.output, "Write the certificate here");
  solve->add_option("--solver", cfg.solver, "auto | bruteforce | bnb | treedp")
      ->check(CLI::IsMember({"auto", "bruteforce", "bnb", "treedp"}));

  auto* gen = app.add_subcommand("gen", "Generate a graph family member");
  gen->add_option("--family", cfg.family, "path | cycle | star | spider | t9 | f | random_tree | random_caterpillar");
  gen->add_option("--n", cfg.n, "Order");
  gen->add_option("--m", cfg.m, "Copies of T_9 for family f");
  gen->add_option("--legs", cfg.legs, "Spider legs");
  gen->add_option("--leg-length", cfg.leg_length, "Spider leg length");
  auto* gen_seed = gen->add_option("--seed", cfg.seed, "Seed for random families");
  gen->add_option("--output", cfg.output, "Write the graph here");

  auto* reduce = app.add_subcommand("reduce", "Build the gadget graph of a 3-CNF formula");
  reduce->add_option("--input", cfg.input, "DIMACS CNF file ('-' for stdin)");
  reduce->add_option("--output", cfg.output, "Write the graph here");
  reduce->add_option("--roles", cfg.roles, "Write the role map JSON here");

  auto* verify = app.add_subcommand("verify", "Check a certificate against a graph");
  verify->add_option("--input", cfg.input, "Graph file");
  verify->add_option("--certificate", cfg.certificate, "Certificate JSON");

  auto* audit = app.add_subcommand("audit", "Check the tree bounds over a corpus");
  audit->add_option("--exhaustive", cfg.exhaustive, "Every tree of this order");
  audit->add_option("--random-caterpillars", cfg.random_caterpillars, "Number of random caterpillars");
  audit->add_option("--max-n", cfg.max_n, "Largest random order");
  auto* audit_seed = audit->add_option("--seed", cfg.seed, "Corpus seed");
  audit->add_option("--family", cfg.family, "Family to audit");
  audit->add_option("--m", cfg.m, "Copies of T_9, a single value or a range a..b");
  audit->add_option("--n", cfg.n, "Order for other families");
  audit->add_option("--legs", cfg.legs, "Spider legs");
  audit->add_option("--leg-length", cfg.leg_length, "Spider leg length");
  audit->add_option("--input", cfg.input, "A single tree file");
  audit->add_option("--output", cfg.output, "Write the report stream here");

  auto* spanning = app.add_subcommand("spanning", "Extract a spanning tree preserving the optimum");
  spanning->add_option("--input", cfg.input, "Graph file");
  spanning->add_option("--certificate", cfg.certificate, "Optimal assignment to start from");
  spanning->add_option("--cap", cfg.cap, "Spanning-tree enumeration cap");
  spanning->add_flag("--enumerate", cfg.enumerate, "Also minimize over every spanning tree");
  spanning->add_option("--output", cfg.output, "Write the extracted tree here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  cfg.has_seed = gen_seed->count() > 0 || audit_seed->count() > 0;

  try {
    cfg.limits = resolve_limits(cfg.guard);
    if (solve->parsed()) return cmd_solve(cfg, out);
    if (gen->parsed()) return cmd_gen(cfg, out);
    if (reduce->parsed()) return cmd_reduce(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (audit->parsed()) return cmd_audit(cfg, out);
    if (spanning->parsed()) return cmd_spanning(cfg, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const GuardError& e) {
    err << "size guard: " << e.what() << '\n';
    return kGuard;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kFailed;
  }
  return kFailed;
}

}  // namespace bcast2::cli
