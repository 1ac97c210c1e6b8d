#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "qstripe/generators.hpp"
#include "qstripe/graphs.hpp"

using namespace qstripe;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(QSTRIPE_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buf[512];
  while (std::fgets(buf, sizeof(buf), pipe) != nullptr) result.output += buf;
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("qstripe_cli_test_" + name);
}

std::string write_matrix(const DistanceMatrix& m, const std::string& name) {
  const auto path = temp_file(name);
  std::ofstream out(path);
  m.save(out);
  return path.string();
}

std::string write_graph(const UndirectedGraph& g, const std::string& name) {
  const auto path = temp_file(name);
  std::ofstream out(path);
  g.save(out);
  return path.string();
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("recognize: negative verdict carries a 1-indexed witness") {
  const std::string path = write_matrix(gen_example_matrix(10, 2), "d102.txt");
  const RunResult r = run_cli("recognize --class qkalmanson --q 2 " + path);
  CHECK(r.exit_code == 1);
  CHECK(contains(r.output, "verdict: false"));
  CHECK(contains(r.output, "witness: 1 2 3 4 5 6"));
  const RunResult wide = run_cli("recognize --class qkalmanson --q 3 " + path);
  CHECK(wide.exit_code == 0);
  CHECK(contains(wide.output, "verdict: true"));
}

TEST_CASE("recognize: tiny budget exits 3") {
  const std::string path = write_matrix(gen_example_matrix(10, 2), "d102b.txt");
  const RunResult r = run_cli("recognize --class qkalmanson --q 3 --budget 1 " + path);
  CHECK(r.exit_code == 3);
}

TEST_CASE("solve: structured instance reports the identity certificate") {
  SplitMix64 rng(3);
  const DistanceMatrix m = gen_tree_metric_matrix(gen_random_ordered_tree(8, 5, rng));
  const std::string path = write_matrix(m, "tree8.txt");
  const RunResult r = run_cli("solve --q 2 --method identity " + path);
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "tour: 1 2 3 4 5 6 7 8"));
  CHECK(contains(r.output, "certificate: identity-by-qkalmanson"));
}

TEST_CASE("solve: refusal exits 1 with a witness line") {
  const std::string path = write_matrix(gen_example_matrix(10, 2), "d102c.txt");
  const RunResult r = run_cli("solve --q 2 --method identity " + path);
  CHECK(r.exit_code == 1);
  CHECK(contains(r.output, "refused"));
  CHECK(contains(r.output, "witness: 1 2 3 4 5 6"));
}

TEST_CASE("graph span: K_5 at q=2 yields the trivial spine") {
  UndirectedGraph k5(5);
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) k5.add_edge(i, j);
  const std::string path = write_graph(k5, "k5.txt");
  const RunResult r = run_cli("graph span --q 2 " + path);
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "spine: 1 2 3 4 5"));
  const RunResult budget = run_cli("graph span --q 2 --budget 1 " + path);
  CHECK(budget.exit_code == 3);
}

TEST_CASE("gen: identical seeds reproduce the matrix") {
  const RunResult a = run_cli("gen --family qkalmanson --n 8 --q 2 --seed 41");
  const RunResult b = run_cli("gen --family qkalmanson --n 8 --q 2 --seed 41");
  const RunResult c = run_cli("gen --family qkalmanson --n 8 --q 2 --seed 42");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output != c.output);
}

TEST_CASE("gen then recognize round trip") {
  const RunResult gen = run_cli("gen --family monge --n 8 --seed 9");
  REQUIRE(gen.exit_code == 0);
  const auto path = temp_file("monge8.txt");
  std::ofstream(path) << gen.output;
  const RunResult rec = run_cli("recognize --class monge " + path.string());
  CHECK(rec.exit_code == 0);
  CHECK(contains(rec.output, "verdict: true"));
}

TEST_CASE("bad input exits 2") {
  const auto path = temp_file("broken.txt");
  std::ofstream(path) << "3\n0 1 2\n9 0 3\n2 3 0\n";
  CHECK(run_cli("recognize --class monge " + path.string()).exit_code == 2);
  CHECK(run_cli("recognize --class monge /nonexistent/file.txt").exit_code == 2);
  CHECK(run_cli("recognize --class nosuch " + path.string()).exit_code == 2);
}

TEST_CASE("--json emits one parseable object") {
  const std::string path = write_matrix(gen_example_matrix(10, 2), "d102d.txt");
  const RunResult r = run_cli("--json recognize --class qkalmanson --q 2 " + path);
  CHECK(r.exit_code == 1);
  const nlohmann::json obj = nlohmann::json::parse(r.output);
  CHECK(obj.at("verdict").get<bool>() == false);
  CHECK(obj.at("witness").get<std::string>() == "1 2 3 4 5 6");
}
