// Homotopy reductions, Poincare-Hopf indices, critical points, Morse
// filtrations and the cup/tcap/crit triple.
#pragma once

#include "graphcalc/spectral.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gcalc {

enum class Verdict { yes, no, unknown };
std::string to_string(Verdict v);

struct HomotopyVerdict {
  Verdict verdict = Verdict::unknown;
  /// Vertex removals (parent ids) that bring G down to K_1 when verdict is yes.
  std::vector<Vertex> witness;
  /// Betti vector when verdict is no.
  std::vector<std::size_t> obstruction;
};

inline constexpr std::size_t kDefaultRestarts = 20;

/// Greedy removal of vertices with contractible unit sphere, with seeded
/// restarts. The empty graph is not contractible.
HomotopyVerdict is_contractible(const Graph& g, std::uint64_t seed = 0, std::size_t restarts = kDefaultRestarts);
/// Verdict only, memoized per thread on the edge list.
Verdict contractible_verdict(const Graph& g);
/// True iff every removal in the witness has a contractible sphere at that
/// moment and exactly one vertex remains.
bool replay_witness(const Graph& g, std::span<const Vertex> witness);

/// Injective vertex function f; throws std::invalid_argument otherwise.
/// i_f(x) = 1 - chi(S^-(x)), S^-(x) = {y in S(x) : f(y) < f(x)}.
std::int64_t ph_index(const Graph& g, std::span<const double> f, Vertex x);
std::vector<std::int64_t> ph_indices(const Graph& g, std::span<const double> f);
struct PhCheck {
  std::int64_t index_sum = 0;
  std::int64_t chi = 0;
  bool holds() const { return index_sum == chi; }
};
PhCheck ph_check(const Graph& g, std::span<const double> f);

/// Random injective function: a shuffled permutation of 0..n-1.
std::vector<double> random_injective_function(std::size_t n, Rng& rng);

/// Exact mean of i_f(x) over all |V|! orderings; ResourceError for |V| > 7.
std::vector<Rational> index_expectation_exhaustive(const Graph& g);
struct SampledIndex {
  std::vector<double> mean;
  std::vector<double> standard_error;
};
SampledIndex index_expectation_sampled(const Graph& g, std::size_t samples, std::uint64_t seed);

/// x is critical when S^-(x) is empty or not certified contractible.
std::vector<Vertex> critical_points(const Graph& g, std::span<const double> f);
struct CritResult {
  std::size_t value = 0;
  bool exact = false;
  /// Ordering (lowest first) attaining value.
  std::vector<Vertex> witness;
};
/// Minimum number of critical points over injective functions. Exact by
/// dynamic programming over vertex subsets for |V| <= 16 (provided every
/// contractibility query was decided); otherwise the best of sampled orderings.
CritResult crit(const Graph& g, std::uint64_t seed = 0);

struct MorseReport {
  std::vector<Vertex> order;
  std::vector<std::int64_t> index;  // i_f(x) by vertex id
  /// Morse index m(x) by vertex id, empty when x is regular or not Morse.
  std::vector<std::optional<std::size_t>> morse_index;
  std::vector<std::size_t> c;      // number of critical points of each Morse index
  std::vector<std::size_t> betti;  // of the full graph
  std::int64_t chi = 0;
  bool is_morse = true;
};
/// Betti numbers recomputed after each insertion; a step may change no
/// entry or raise or lower exactly one entry by one.
MorseReport morse_filtration(const Graph& g, std::span<const double> f);
struct MorseInequalities {
  bool weak = false;
  bool strong = false;
};
/// Throws InapplicableError for a non-Morse report.
MorseInequalities morse_inequalities_check(const MorseReport& r);

struct CoverResult {
  std::size_t value = 0;
  bool exact = false;
  std::vector<std::vector<Vertex>> cover;
};
/// Cover of all vertices and edges by contractible induced subgraphs.
CoverResult tcap_upper(const Graph& g);
/// Exact search for |V| <= 10, else ResourceError.
CoverResult tcap_exact(const Graph& g);

/// 1 + the longest product of positive-degree harmonic forms with nonzero
/// harmonic projection; 0 without positive-degree cohomology.
std::size_t cup_length_lower(const SimplicialStructure& s, const OperatorBundle& ops, std::uint64_t seed = 0,
                             std::size_t trials = 200);

struct LsTriple {
  std::size_t cup = 0;
  CoverResult tcap;
  CritResult crit;
  bool all_exact() const { return tcap.exact && crit.exact; }
  bool holds() const { return cup <= tcap.value && tcap.value <= crit.value; }
};
LsTriple ls_triple_check(const Graph& g, std::uint64_t seed = 0);

}  // namespace gcalc
