// Corpora, theorem check suites, invariant reports and equation solvers
// behind the command line.
#pragma once

#include "graphcalc/complex.hpp"
#include "graphcalc/orbital.hpp"

#include "json.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace gcalc {

struct CorpusEntry {
  std::string name;
  Graph graph;
};
using Corpus = std::vector<CorpusEntry>;

/// K_1..K_6, C_3..C_10, paths, stars, wheels 4..8, octahedron, icosahedron,
/// cross_polytope(3), 200 G(n, p) with n <= 12, 100 random contractible
/// graphs and 20 random trees.
Corpus default_corpus(std::uint64_t seed);
/// "default", or generator specs separated by ';'. An integer range a..b in
/// the first argument expands, e.g. "cycle:3..10".
Corpus corpus_from_spec(const std::string& spec, std::uint64_t seed);

struct CheckOptions {
  std::uint64_t seed = 1;
  std::vector<std::string> only;  // theorem ids; empty runs all
  double tolerance = 1e-8;        // McKean-Singer supertrace
  std::size_t simplex_budget = kDefaultSimplexBudget;
  /// Toggles one adjacency of one corpus graph before curvature is computed.
  bool corrupt = false;
  ClaimRanges orbital;
};

struct TheoremResult {
  std::string id;
  bool passed = true;
  std::size_t cases = 0;
  std::size_t skipped = 0;
  std::vector<std::string> failures;
  nlohmann::json details = nlohmann::json::object();
  double seconds = 0.0;
};

const std::vector<std::string>& theorem_ids();

struct SuiteReport {
  std::uint64_t seed = 0;
  std::size_t corpus_size = 0;
  std::vector<TheoremResult> results;
  bool complete = false;
  bool passed() const;
  const TheoremResult* find(const std::string& id) const;
};

/// Runs the selected theorems in order; `progress` sees the report after
/// each one. Throws std::invalid_argument on an unknown id.
SuiteReport run_suite(const Corpus& corpus, const CheckOptions& options,
                      const std::function<void(const SuiteReport&)>& progress = {});
/// Deterministic document (no timings); doubles rounded to 12 digits.
nlohmann::json to_json(const SuiteReport& report);
double rounded(double x);

/// Invariant report for one graph.
nlohmann::json info_report(const Graph& g, const std::string& source,
                           std::size_t simplex_budget = kDefaultSimplexBudget);
std::string graph_hash(const Graph& g);

struct SolveParams {
  std::size_t degree = 0;
  std::vector<double> times{0.0, 1.0, 10.0};
  std::vector<double> field;  // initial field or source; empty picks a default
  Vertex x = 0;
  Vertex y = 1;
  double shoot_time = 1.0;
  double t_end = 10.0;
  double dt = 1e-3;
  std::uint64_t seed = 1;
};
struct SolveOutput {
  nlohmann::json document;
  std::string csv;
  bool verified = true;
};
/// equation is one of heat, wave, poisson, maxwell, gravity, shoot, deform.
SolveOutput solve(const std::string& equation, const Graph& g, const SolveParams& params,
                  std::size_t simplex_budget = kDefaultSimplexBudget);

}  // namespace gcalc
