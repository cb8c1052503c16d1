// Graph automorphisms, their action on simplices and cohomology, Lefschetz
// numbers and group quotients.
#pragma once

#include "graphcalc/morse.hpp"

#include <optional>
#include <vector>

namespace gcalc {

using Permutation = std::vector<Vertex>;

struct GraphAutomorphism {
  Permutation perm;
  /// image[k][i] is the index of T(simplex k,i); sign[k][i] the parity of the
  /// permutation that sorts the image tuple.
  std::vector<std::vector<std::size_t>> image;
  std::vector<std::vector<int>> sign;
};

inline constexpr std::size_t kMaxAutomorphismVertices = 16;

/// All automorphisms by backtracking with degree and neighbor-degree pruning.
/// ResourceError beyond kMaxAutomorphismVertices vertices or `limit` results.
std::vector<Permutation> automorphism_permutations(const Graph& g, std::size_t limit = 100000);
GraphAutomorphism induce(const SimplicialStructure& s, const Permutation& perm);
std::vector<GraphAutomorphism> automorphisms(const SimplicialStructure& s, std::size_t limit = 100000);

Permutation compose(const Permutation& a, const Permutation& b);  // a after b
Permutation inverse(const Permutation& p);
bool is_automorphism(const Graph& g, const Permutation& p);
/// Closure, identity and inverses.
bool is_group(const std::vector<Permutation>& elements);

struct FixedSimplex {
  std::size_t dim;
  std::size_t index;
  int degree;  // sign(T|x) (-1)^dim
};
struct LefschetzResult {
  std::vector<double> traces;  // tr T_k on harmonic k-forms
  std::int64_t lefschetz = 0;  // rounded alternating trace sum
  double residual = 0.0;       // distance of the trace sum to the nearest integer
  std::vector<FixedSimplex> fixed;
  std::int64_t fixed_sum = 0;
  bool holds() const { return lefschetz == fixed_sum && residual < 1e-6; }
};
LefschetzResult lefschetz(const OperatorBundle& ops, const GraphAutomorphism& t);

/// Throws InapplicableError unless g is certified contractible; true iff T
/// fixes some simplex setwise.
bool brouwer_check(const Graph& g, const GraphAutomorphism& t);

struct GroupAction {
  std::vector<Permutation> elements;  // sorted; identity first
  std::size_t order() const { return elements.size(); }
};
/// Closure of the generators; nullopt if it grows beyond `cap` elements.
std::optional<GroupAction> generate_group(const std::vector<Permutation>& generators, std::size_t n,
                                          std::size_t cap = 48);
/// All cyclic subgroups plus closures of pairs of cyclic generators, and the
/// full group, each kept when its order is at most `cap`.
std::vector<GroupAction> subgroups(const std::vector<Permutation>& group, std::size_t cap = 48);

struct RiemannHurwitzResult {
  std::int64_t chi = 0;
  std::int64_t quotient_chi = 0;  // alternating count of simplex orbits
  std::int64_t order = 0;
  std::int64_t ramification = 0;  // sum over simplices of (e_x - 1)
  bool simple_quotient = false;
  bool holds() const { return chi == order * quotient_chi - ramification; }
};
RiemannHurwitzResult riemann_hurwitz(const SimplicialStructure& s, const GroupAction& a);

/// Orientation of the top simplices by propagation across shared faces;
/// nullopt when the top simplices cannot be oriented consistently.
std::optional<std::vector<int>> orient_top_simplices(const SimplicialStructure& s);
/// nullopt when not orientable or T neither preserves nor reverses the
/// orientation everywhere.
std::optional<bool> orientation_preserving(const SimplicialStructure& s, const GraphAutomorphism& t);

}  // namespace gcalc
