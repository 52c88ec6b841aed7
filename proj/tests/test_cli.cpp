#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "bcast2/cli.hpp"
#include "bcast2/families.hpp"
#include "bcast2/graph.hpp"
#include "support.hpp"

using namespace bcast2;
using json = nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string graph_file(const std::string& name, const Graph& g) {
  const std::string path = testing::temp_path(name);
  testing::write_file(path, serialize_graph(g));
  return path;
}

std::vector<json> lines(const std::string& text) {
  std::vector<json> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(json::parse(line));
  return out;
}

}  // namespace

TEST_CASE("solve C_7 and T_9") {
  const auto c7 = run({"solve", "--input", graph_file("c7.txt", cycle_graph(7))});
  REQUIRE(c7.code == cli::kOk);
  const json j = json::parse(c7.out);
  CHECK(j["cost"] == 3);
  CHECK(j["valid"] == true);
  CHECK(j["method"] == "branch_and_bound");

  const auto t9 = run({"solve", "--input", graph_file("t9.txt", t9_graph())});
  REQUIRE(t9.code == cli::kOk);
  CHECK(json::parse(t9.out)["cost"] == 4);
  CHECK(json::parse(t9.out)["method"] == "tree_dp");

  const auto brute = run({"solve", "--solver", "bruteforce", "--input", graph_file("t9.txt", t9_graph())});
  CHECK(json::parse(brute.out)["cost"] == 4);
}

TEST_CASE("solve error paths") {
  CHECK(run({"solve", "--solver", "treedp", "--input", graph_file("c7.txt", cycle_graph(7))}).code ==
        cli::kInputError);
  CHECK(run({"solve", "--input", "/nonexistent/graph.txt"}).code == cli::kInputError);
  const std::string bad = testing::temp_path("bad.txt");
  testing::write_file(bad, "p edge 2 1\ne 1 1\n");
  CHECK(run({"solve", "--input", bad}).code == cli::kInputError);
  CHECK(run({"solve", "--solver", "magic", "--input", bad}).code == cli::kInputError);
  CHECK(run({"frobnicate"}).code == cli::kInputError);
  CHECK(run({}).code == cli::kInputError);
  CHECK(run({"solve", "--solver", "bruteforce", "--input", graph_file("p17.txt", path_graph(17))}).code ==
        cli::kGuard);
}

TEST_CASE("size guard from the environment") {
  const std::string c7 = graph_file("c7.txt", cycle_graph(7));
  ::setenv(cli::kMaxNEnv, "5", 1);
  CHECK(run({"solve", "--solver", "bnb", "--input", c7}).code == cli::kGuard);
  ::setenv(cli::kMaxNEnv, "banana", 1);
  CHECK(run({"solve", "--input", c7}).code == cli::kInputError);
  ::setenv(cli::kMaxNEnv, "1000000", 1);
  CHECK(run({"solve", "--solver", "bnb", "--input", graph_file("p70.txt", path_graph(70))}).code == cli::kGuard);
  ::unsetenv(cli::kMaxNEnv);
  CHECK(run({"--guard", "45", "solve", "--solver", "bnb", "--input", graph_file("p45.txt", path_graph(45))}).code ==
        cli::kOk);
}

TEST_CASE("text output") {
  const auto r = run({"solve", "--format", "text", "--input", graph_file("c7.txt", cycle_graph(7))});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.rfind("gamma_b2 3\n", 0) == 0);
}

TEST_CASE("gen writes graph files") {
  const auto f2 = run({"gen", "--family", "f", "--m", "2"});
  REQUIRE(f2.code == cli::kOk);
  const Graph g = parse_graph(f2.out);
  CHECK(g.order() == 18);
  CHECK(g.is_tree());
  CHECK(parse_graph(run({"gen", "--family", "path", "--n", "4"}).out).edges() == path_graph(4).edges());
  const auto a = run({"gen", "--family", "random_tree", "--n", "15", "--seed", "7"});
  const auto b = run({"gen", "--family", "random_tree", "--n", "15", "--seed", "7"});
  CHECK(a.out == b.out);
  CHECK(parse_graph(run({"gen", "--family", "spider", "--legs", "4", "--leg-length", "3"}).out).order() == 13);
  CHECK(run({"gen", "--family", "f", "--m", "0"}).code == cli::kInputError);
  CHECK(run({"gen", "--family", "moebius"}).code == cli::kInputError);
  const std::string out = testing::temp_path("gen_out.txt");
  CHECK(run({"gen", "--family", "t9", "--output", out}).code == cli::kOk);
  CHECK(read_graph_file(out).order() == 9);
}

TEST_CASE("reduce writes the gadget graph and role map") {
  const std::string cnf = testing::temp_path("three.cnf");
  testing::write_file(cnf, "p cnf 3 2\n1 -2 3 0\n-1 2 -3 0\n");
  const std::string roles = testing::temp_path("roles.json");
  const auto r = run({"reduce", "--input", cnf, "--roles", roles});
  REQUIRE(r.code == cli::kOk);
  const Graph g = parse_graph(r.out);
  CHECK(g.order() == 22);
  CHECK(g.size() == 26);
  std::ifstream in(roles);
  const json map = json::parse(in);
  CHECK(map["u"].size() == 3);
  CHECK(map["C_hat"].size() == 2);

  const std::string single = testing::temp_path("single.cnf");
  testing::write_file(single, "p cnf 1 1\n1 1 1 0\n");
  const auto s = run({"reduce", "--input", single});
  REQUIRE(s.code == cli::kOk);
  CHECK(parse_graph(s.out).order() == 8);

  const std::string two = testing::temp_path("two.cnf");
  testing::write_file(two, "p cnf 2 1\n1 2 0\n");
  CHECK(run({"reduce", "--input", two}).code == cli::kInputError);
}

TEST_CASE("verify certificates") {
  const std::string c7 = graph_file("c7.txt", cycle_graph(7));
  const std::string cert = testing::temp_path("c7_cert.json");
  REQUIRE(run({"solve", "--input", c7, "--output", cert}).code == cli::kOk);
  CHECK(run({"verify", "--input", c7, "--certificate", cert}).code == cli::kOk);

  const std::string cheap = testing::temp_path("cheap.json");
  testing::write_file(cheap, R"({"n":7,"values":[2,0,0,0,0,0,0],"cost":2,"valid":true})");
  CHECK(run({"verify", "--input", c7, "--certificate", cheap}).code == cli::kFailed);

  const std::string lie = testing::temp_path("lie.json");
  testing::write_file(lie, R"({"n":7,"values":[2,0,0,0,1,0,0],"cost":2,"valid":true})");
  CHECK(run({"verify", "--input", c7, "--certificate", lie}).code == cli::kFailed);

  const std::string zero = testing::temp_path("zero.json");
  testing::write_file(zero, R"({"n":7,"values":[0,0,0,0,0,0,0],"cost":0,"valid":false})");
  const auto z = run({"verify", "--input", c7, "--certificate", zero});
  CHECK(z.code == cli::kFailed);
  CHECK(json::parse(z.out)["uncovered"].size() == 7);

  const std::string wrong_n = testing::temp_path("wrong_n.json");
  testing::write_file(wrong_n, R"({"n":6,"values":[1,0,0,1,0,0],"cost":2,"valid":true})");
  CHECK(run({"verify", "--input", c7, "--certificate", wrong_n}).code == cli::kInputError);

  const std::string bad_value = testing::temp_path("bad_value.json");
  testing::write_file(bad_value, R"({"n":7,"values":[3,0,0,0,0,0,0],"cost":3,"valid":true})");
  CHECK(run({"verify", "--input", c7, "--certificate", bad_value}).code == cli::kInputError);
}

TEST_CASE("every solver output verifies") {
  std::mt19937_64 rng(81);
  for (int i = 0; i < 10; ++i) {
    const std::string g = graph_file("rand.txt", testing::random_graph(rng, 1, 14));
    for (const std::string solver : {"auto", "bnb", "bruteforce"}) {
      const std::string cert = testing::temp_path("rand_cert.json");
      REQUIRE(run({"solve", "--solver", solver, "--input", g, "--output", cert}).code == cli::kOk);
      CHECK(run({"verify", "--input", g, "--certificate", cert}).code == cli::kOk);
    }
  }
}

TEST_CASE("audit corpora") {
  const auto ex = run({"audit", "--exhaustive", "9"});
  REQUIRE(ex.code == cli::kOk);
  const auto reports = lines(ex.out);
  REQUIRE(reports.size() == 48);
  const json summary = reports.back()["summary"];
  CHECK(summary["count"] == 47);
  CHECK(summary["tight"].size() == 1);
  CHECK(summary["max_ratio"] == 1.0);

  const auto cat = run({"audit", "--random-caterpillars", "1000", "--max-n", "60", "--seed", "1", "--jobs", "2"});
  REQUIRE(cat.code == cli::kOk);
  const json cs = lines(cat.out).back()["summary"];
  CHECK(cs["count"] == 1000);
  CHECK(cs["caterpillar_bound_violations"] == 0);
  CHECK(cs["tree_bound_violations"] == 0);

  const auto fam = run({"audit", "--family", "f", "--m", "1..4"});
  REQUIRE(fam.code == cli::kOk);
  CHECK(lines(fam.out).back()["summary"]["tight"].size() == 4);

  CHECK(run({"audit", "--exhaustive", "11"}).code == cli::kInputError);
  CHECK(run({"audit"}).code == cli::kInputError);
  CHECK(run({"audit", "--exhaustive", "5", "--family", "f"}).code == cli::kInputError);
}

TEST_CASE("audit is deterministic across job counts") {
  const auto a = run({"audit", "--random-caterpillars", "50", "--max-n", "40", "--seed", "3", "--jobs", "1"});
  const auto b = run({"audit", "--random-caterpillars", "50", "--max-n", "40", "--seed", "3", "--jobs", "3"});
  CHECK(a.out == b.out);
}

TEST_CASE("spanning extraction from the command line") {
  const std::string c7 = graph_file("c7.txt", cycle_graph(7));
  const std::string tree = testing::temp_path("c7_tree.txt");
  const auto r = run({"spanning", "--input", c7, "--enumerate", "--output", tree});
  REQUIRE(r.code == cli::kOk);
  const json j = json::parse(r.out);
  CHECK(j["gamma_b2"] == 3);
  CHECK(j["min_over_spanning_trees"] == 3);
  CHECK(j["spanning_tree_count"] == 7);
  CHECK(read_graph_file(tree).is_tree());

  std::vector<Edge> k4;
  for (Vertex u = 0; u < 4; ++u) {
    for (Vertex v = u + 1; v < 4; ++v) k4.emplace_back(u, v);
  }
  CHECK(run({"spanning", "--input", graph_file("k4.txt", Graph(4, k4)), "--enumerate", "--cap", "3"}).code ==
        cli::kGuard);
}
