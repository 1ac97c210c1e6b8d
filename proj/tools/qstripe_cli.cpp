// Command-line front end: recognize / solve / master-check / gen / graph /
// reduce over the plain-text matrix and graph formats.
//
// Exit codes: 0 affirmative verdict or success, 1 negative verdict,
// 2 usage or input error, 3 enumeration budget exceeded.

#include <cmath>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qstripe/core.hpp"
#include "qstripe/generators.hpp"
#include "qstripe/graphs.hpp"
#include "qstripe/matclass.hpp"
#include "qstripe/solvers.hpp"

namespace {

using nlohmann::json;
using namespace qstripe;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

std::string cities_to_string(const std::vector<int>& cities) {
  std::ostringstream out;
  for (std::size_t i = 0; i < cities.size(); ++i) {
    if (i) out << ' ';
    out << cities[i] + 1;
  }
  return out.str();
}

std::string matching_to_string(const Matching& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.edges.size(); ++i) {
    if (i) out << ' ';
    out << '[' << m.edges[i].first + 1 << ',' << m.edges[i].second + 1 << ']';
  }
  return out.str();
}

// Line-oriented "key: value" report with an optional JSON mirror.
struct Report {
  json data = json::object();
  std::vector<std::pair<std::string, std::string>> lines;

  void add(const std::string& key, const std::string& value) {
    lines.emplace_back(key, value);
    data[key] = value;
  }
  void add(const std::string& key, long long value) {
    lines.emplace_back(key, std::to_string(value));
    data[key] = value;
  }
  void add(const std::string& key, bool value) {
    lines.emplace_back(key, value ? "true" : "false");
    data[key] = value;
  }

  void print(bool as_json) const {
    if (as_json) {
      std::cout << data.dump() << '\n';
      return;
    }
    for (const auto& [k, v] : lines) std::cout << k << ": " << v << '\n';
  }
};

int run_recognize(const std::string& cls, int q, std::uint64_t budget, const std::string& path,
                  bool as_json) {
  const DistanceMatrix m = DistanceMatrix::load_file(path);
  RecognitionReport rep;
  if (cls == "monge") {
    rep = is_monge(m);
  } else if (cls == "kalmanson") {
    rep = is_kalmanson(m);
  } else if (cls == "demidenko") {
    rep = is_demidenko(m);
  } else if (cls == "qkalmanson") {
    if (q < 1) throw InputError("--q is required for class qkalmanson");
    rep = is_q_kalmanson(m, q, budget);
  } else {
    throw InputError("unknown matrix class: " + cls);
  }
  Report out;
  out.add("class", cls);
  if (cls == "qkalmanson") out.add("q", static_cast<long long>(q));
  out.add("verdict", rep.verdict);
  if (rep.witness) out.add("witness", cities_to_string(rep.witness->cities));
  if (rep.detail) out.add("better-matching", matching_to_string(*rep.detail));
  if (!rep.description.empty()) out.add("violation", rep.description);
  out.print(as_json);
  return rep.verdict ? kExitYes : kExitNo;
}

int run_solve(int q, const std::string& method, bool verify, int brute_cap,
              const std::string& path, bool as_json) {
  const QStripeInstance inst(DistanceMatrix::load_file(path), q);
  SolveResult result = [&] {
    if (method == "identity") return solve_q_kalmanson(inst, verify);
    if (method == "supnick") return solve_monge(inst, verify);
    if (method == "brute") return brute_force_qstripe(inst, brute_cap);
    if (method != "auto") throw InputError("unknown method: " + method);
    if (is_q_kalmanson(inst.matrix, inst.q).verdict) return solve_q_kalmanson(inst, false);
    if (is_monge(inst.matrix).verdict) return solve_monge(inst, false);
    return brute_force_qstripe(inst, brute_cap);
  }();
  Report out;
  out.add("tour", cities_to_string(result.tour.order()));
  out.add("cost", static_cast<long long>(result.cost));
  out.add("certificate", certificate_name(result.certificate));
  out.print(as_json);
  return kExitYes;
}

int run_master_check(int q, const std::string& path, bool as_json) {
  const QStripeInstance inst(DistanceMatrix::load_file(path), q);
  const MasterTourResult result = check_master_tour(inst);
  Report out;
  out.add("verdict", result.verdict);
  if (result.witness) out.add("witness", cities_to_string(result.witness->cities));
  out.print(as_json);
  return result.verdict ? kExitYes : kExitNo;
}

std::vector<Point> regular_polygon_points(int n) {
  // Clockwise integer points near a circle; the radius grows until the
  // rounded points are strictly convex.
  for (long long radius = 1000 * n;; radius *= 4) {
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      const double angle = -2.0 * M_PI * k / n;
      pts.push_back({std::llround(radius * std::cos(angle)),
                     std::llround(radius * std::sin(angle))});
    }
    try {
      gen_convex_polygon_matrix(pts, 1);
      return pts;
    } catch (const InputError&) {
      if (radius > (1LL << 40)) throw;
    }
  }
}

int run_gen(const std::string& family, int n, int q, std::uint64_t seed, long long scale) {
  DistanceMatrix m = [&]() -> DistanceMatrix {
    if (family == "dnq") {
      if (q < 1) throw InputError("--q is required for family dnq");
      return gen_example_matrix(n, q);
    }
    if (family == "tree") {
      SplitMix64 rng(seed);
      return gen_tree_metric_matrix(gen_random_ordered_tree(n, 6, rng));
    }
    if (family == "polygon") return gen_convex_polygon_matrix(regular_polygon_points(n), scale);
    if (family == "qkalmanson") {
      if (q < 1) throw InputError("--q is required for family qkalmanson");
      return gen_random_q_kalmanson(n, q, seed);
    }
    if (family == "monge") return gen_symmetric_monge(n, seed);
    throw InputError("unknown family: " + family);
  }();
  m.save(std::cout);
  return kExitYes;
}

int run_graph_cqn(int n, int q) {
  build_cqn(n, q).save(std::cout);
  return kExitYes;
}

int run_graph_span(int q, bool planar2, std::uint64_t budget, const std::string& path,
                   bool as_json) {
  const UndirectedGraph g = UndirectedGraph::load_file(path);
  Report out;
  if (planar2) {
    if (q != 2) throw InputError("--planar2 requires q = 2");
    const PlanarSpanResult result = spanning_c2_planar(g);
    out.add("algorithm", std::string("planar-q2"));
    out.add("planarity-assumed", result.planarity_assumed);
    out.add("forbidden-config", result.forbidden_config_found);
    out.add("verdict", result.spine.has_value());
    if (result.spine) out.add("spine", cities_to_string(result.spine->order));
    out.print(as_json);
    return result.spine ? kExitYes : kExitNo;
  }
  const SpanResult result = spanning_cqn_search(g, q, budget);
  out.add("algorithm", std::string("exact-backtracking"));
  if (result.status == SearchStatus::kBudgetExceeded) {
    out.add("verdict", std::string("budget-exceeded"));
    out.print(as_json);
    return kExitBudget;
  }
  out.add("verdict", result.status == SearchStatus::kFound);
  if (result.spine) out.add("spine", cities_to_string(result.spine->order));
  out.print(as_json);
  return result.status == SearchStatus::kFound ? kExitYes : kExitNo;
}

int run_graph_claw(const std::string& path, bool as_json) {
  const UndirectedGraph g = UndirectedGraph::load_file(path);
  const auto witness = is_k14_free(g);
  Report out;
  out.add("k14-free", !witness.has_value());
  if (witness) {
    out.add("center", static_cast<long long>((*witness)[0] + 1));
    out.add("leaves", cities_to_string({(*witness)[1], (*witness)[2], (*witness)[3], (*witness)[4]}));
  }
  out.print(as_json);
  return witness ? kExitNo : kExitYes;
}

int run_reduce(int q, bool to_g2, const std::string& path) {
  const DirectedGraph g = DirectedGraph::load_file(path);
  Reduction red = reduce_hc_to_g1(g, q);
  if (to_g2) {
    extend_g1_to_g2(red.g1, red.part, q).save(std::cout);
  } else {
    red.g1.save(std::cout);
  }
  std::cout << "partition";
  for (int c : red.part) std::cout << ' ' << c;
  std::cout << '\n';
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"q-stripe travelling salesman toolkit"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit the report as a single JSON object");

  // recognize
  auto* recognize = app.add_subcommand("recognize", "test a matrix for a structured class");
  std::string rec_class;
  int rec_q = 0;
  std::uint64_t rec_budget = kSubsetBudget;
  std::string rec_file;
  recognize->add_option("--class", rec_class, "monge|kalmanson|demidenko|qkalmanson")->required();
  recognize->add_option("--q", rec_q, "stripe width for qkalmanson");
  recognize->add_option("--budget", rec_budget, "subset enumeration budget");
  recognize->add_option("matrix-file", rec_file, "matrix file")->required();

  // solve
  auto* solve = app.add_subcommand("solve", "optimal q-stripe tour");
  int solve_q = 0;
  std::string solve_method = "auto";
  bool no_verify = false;
  int brute_cap = kBruteForceCap;
  std::string solve_file;
  solve->add_option("--q", solve_q, "stripe width")->required();
  solve->add_option("--method", solve_method, "auto|identity|supnick|brute");
  solve->add_flag("--no-verify", no_verify, "skip the structural precondition check");
  solve->add_option("--brute-cap", brute_cap, "city cap for brute force");
  solve->add_option("matrix-file", solve_file, "matrix file")->required();

  // master-check
  auto* master = app.add_subcommand("master-check", "is the identity a master tour?");
  int master_q = 0;
  std::string master_file;
  master->add_option("--q", master_q, "stripe width")->required();
  master->add_option("matrix-file", master_file, "matrix file")->required();

  // gen
  auto* gen = app.add_subcommand("gen", "generate an instance family matrix");
  std::string gen_family;
  int gen_n = 0, gen_q = 0;
  std::uint64_t gen_seed = 0;
  long long gen_scale = 1000;
  gen->add_option("--family", gen_family, "dnq|tree|polygon|qkalmanson|monge")->required();
  gen->add_option("--n", gen_n, "city count")->required();
  gen->add_option("--q", gen_q, "stripe width (dnq, qkalmanson)");
  gen->add_option("--seed", gen_seed, "64-bit seed");
  gen->add_option("--scale", gen_scale, "fixed scale for polygon distances");

  // graph
  auto* graph = app.add_subcommand("graph", "cycle-power graph utilities");
  graph->require_subcommand(1);
  auto* cqn = graph->add_subcommand("cqn", "print C_n^q");
  int cqn_n = 0, cqn_q = 0;
  cqn->add_option("--n", cqn_n, "vertex count")->required();
  cqn->add_option("--q", cqn_q, "power")->required();
  auto* span = graph->add_subcommand("span", "search for a spanning C_n^q");
  int span_q = 0;
  bool planar2 = false;
  std::uint64_t span_budget = kSpanSearchBudget;
  std::string span_file;
  span->add_option("--q", span_q, "power")->required();
  span->add_flag("--planar2", planar2, "use the polynomial planar q=2 algorithm");
  span->add_option("--budget", span_budget, "backtracking node budget");
  span->add_option("graph-file", span_file, "graph file")->required();
  auto* claw = graph->add_subcommand("claw-check", "test for an induced K_{1,4}");
  std::string claw_file;
  claw->add_option("graph-file", claw_file, "graph file")->required();

  // reduce
  auto* reduce = app.add_subcommand("reduce", "Hamiltonian-circuit hardness gadget");
  int reduce_q = 2;
  bool to_g2 = false;
  std::string reduce_file;
  reduce->add_option("--q", reduce_q, "stripe width (>= 2)")->required();
  reduce->add_flag("--g2", to_g2, "emit the split graph G2 instead of G1");
  reduce->add_option("digraph-file", reduce_file, "directed graph file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*recognize) return run_recognize(rec_class, rec_q, rec_budget, rec_file, as_json);
    if (*solve) return run_solve(solve_q, solve_method, !no_verify, brute_cap, solve_file, as_json);
    if (*master) return run_master_check(master_q, master_file, as_json);
    if (*gen) return run_gen(gen_family, gen_n, gen_q, gen_seed, gen_scale);
    if (*cqn) return run_graph_cqn(cqn_n, cqn_q);
    if (*span) return run_graph_span(span_q, planar2, span_budget, span_file, as_json);
    if (*claw) return run_graph_claw(claw_file, as_json);
    if (*reduce) return run_reduce(reduce_q, to_g2, reduce_file);
  } catch (const NotInClass& e) {
    std::cout << "refused: " << e.what() << '\n';
    if (e.report.witness) std::cout << "witness: " << cities_to_string(e.report.witness->cities) << '\n';
    if (!e.report.description.empty()) std::cout << "violation: " << e.report.description << '\n';
    return kExitNo;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget-exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
