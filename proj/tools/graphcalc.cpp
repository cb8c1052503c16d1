#include "graphcalc/dynamics.hpp"
#include "graphcalc/suite.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace gcalc;
using nlohmann::json;

constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;

struct Global {
  std::string graph_file;
  std::string generate;
  std::uint64_t seed = 1;
  std::string only;
  std::string json_path;
  std::string csv_path;
  std::size_t budget = kDefaultSimplexBudget;
  double tolerance = 1e-8;
};

std::vector<std::string> split_ids(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

void emit_json(const Global& gl, const json& doc) {
  const std::string text = doc.dump(2) + "\n";
  if (gl.json_path.empty())
    std::cout << text;
  else
    write_file(gl.json_path, text);
}

std::pair<Graph, std::string> load_graph(const Global& gl) {
  if (!gl.graph_file.empty() && !gl.generate.empty())
    throw std::invalid_argument("use either --graph or --generate");
  if (!gl.graph_file.empty()) return {read_graph_file(gl.graph_file), gl.graph_file};
  if (!gl.generate.empty()) return {generate_from_spec(gl.generate), gl.generate};
  throw std::invalid_argument("a graph is required: --graph FILE or --generate KIND[:ARGS]");
}

int cmd_info(const Global& gl) {
  const auto [g, source] = load_graph(gl);
  const auto counts = clique_counts(g, 2);
  if (counts.size() > 2 && counts[2] > 0)
    std::cerr << "warning: the graph has triangles; divisor quantities use the 1-skeleton only\n";
  emit_json(gl, info_report(g, source, gl.budget));
  return 0;
}

int cmd_check(const Global& gl, const std::string& corpus_spec, bool corrupt) {
  Corpus corpus;
  if (!gl.graph_file.empty() || !gl.generate.empty()) {
    auto [g, source] = load_graph(gl);
    corpus.push_back({source, std::move(g)});
  } else {
    corpus = corpus_from_spec(corpus_spec, gl.seed);
  }
  CheckOptions options;
  options.seed = gl.seed;
  options.only = split_ids(gl.only);
  options.tolerance = gl.tolerance;
  options.simplex_budget = gl.budget;
  options.corrupt = corrupt;
  const std::string partial_path = gl.json_path.empty() ? std::string("graphcalc_check.json") : gl.json_path;
  const auto report = run_suite(corpus, options, [&](const SuiteReport& r) {
    const auto& last = r.results.back();
    std::fprintf(stderr, "%-26s %s  cases=%zu skipped=%zu  %.2fs\n", last.id.c_str(), last.passed ? "PASS" : "FAIL",
                 last.cases, last.skipped, last.seconds);
    write_file(partial_path, to_json(r).dump(2) + "\n");
  });
  if (gl.json_path.empty()) std::cout << to_json(report).dump(2) << "\n";
  for (const auto& r : report.results)
    for (const auto& f : r.failures) std::cerr << r.id << ": " << f << "\n";
  return report.passed() ? 0 : kExitFailure;
}

int cmd_solve(const Global& gl, const std::string& equation, SolveParams params) {
  const auto [g, source] = load_graph(gl);
  params.seed = gl.seed;
  SolveOutput out;
  try {
    out = solve(equation, g, params, gl.budget);
  } catch (const ResonanceError& e) {
    std::ostringstream msg;
    msg << e.what() << ", e.g. --T " << params.shoot_time + 1e-3;
    throw std::invalid_argument(msg.str());
  }
  out.document["source"] = source;
  emit_json(gl, out.document);
  if (!gl.csv_path.empty()) write_file(gl.csv_path, out.csv);
  return out.verified ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete geometry, topology and dynamics on finite simple graphs"};
  app.require_subcommand(1);
  Global gl;
  app.add_option("--graph", gl.graph_file, "Edge-list or JSON graph file");
  app.add_option("--generate", gl.generate, "Generator spec KIND[:ARGS], e.g. cycle:5 or random_er:8,0.5,3");
  app.add_option("--seed", gl.seed, "Master seed");
  app.add_option("--only", gl.only, "Comma separated theorem ids");
  app.add_option("--json", gl.json_path, "Write the JSON document here instead of stdout");
  app.add_option("--csv", gl.csv_path, "Write solver time series or fields here");
  app.add_option("--budget-simplices", gl.budget, "Simplex enumeration budget");
  app.add_option("--tolerance", gl.tolerance, "Supertrace tolerance");
  app.fallthrough();

  auto* info = app.add_subcommand("info", "Invariant report for one graph");

  auto* check = app.add_subcommand("check", "Run theorem checks over a corpus");
  std::string corpus_spec = "default";
  bool corrupt = false;
  check->add_option("--corpus", corpus_spec, "default, or generator specs separated by ';' (ranges like cycle:3..10)");
  check->add_flag("--corrupt", corrupt, "Toggle one adjacency before curvature is computed");

  auto* solve_cmd = app.add_subcommand("solve", "Solve an equation on the graph");
  std::string equation;
  SolveParams params;
  std::vector<double> times;
  solve_cmd->add_option("equation", equation, "heat, wave, poisson, maxwell, gravity, shoot or deform")
      ->required()
      ->check(CLI::IsMember({"heat", "wave", "poisson", "maxwell", "gravity", "shoot", "deform"}));
  solve_cmd->add_option("--t", times, "Snapshot times")->delimiter(',');
  solve_cmd->add_option("--x", params.x, "Source vertex");
  solve_cmd->add_option("--y", params.y, "Target vertex");
  solve_cmd->add_option("--T", params.shoot_time, "Shooting time");
  solve_cmd->add_option("--t-end", params.t_end, "Deformation end time");
  solve_cmd->add_option("--dt", params.dt, "Deformation step");
  solve_cmd->add_option("--degree", params.degree, "Form degree");
  solve_cmd->add_option("--field", params.field, "Initial field or source values")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  const auto start = std::chrono::steady_clock::now();
  int code = 0;
  try {
    if (*info) {
      code = cmd_info(gl);
    } else if (*check) {
      code = cmd_check(gl, corpus_spec, corrupt);
    } else {
      if (!times.empty()) params.times = times;
      code = cmd_solve(gl, equation, params);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::fprintf(stderr, "elapsed %.2fs\n", seconds);
  return code;
}
