// Whitney (clique) complex of a graph with ascending-vertex orientation,
// signed exterior derivatives, exact forms and chains, Stokes pairing and the
// cup product.
#pragma once

#include "graphcalc/exact.hpp"
#include "graphcalc/graph.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gcalc {

inline constexpr std::size_t kDefaultSimplexBudget = 1'000'000;

/// Sparse matrix with entries in {-1, 0, +1} stored by row.
struct SignedIncidence {
  std::size_t rows = 0;
  std::size_t cols = 0;
  struct Entry {
    std::size_t col;
    int sign;
  };
  std::vector<std::vector<Entry>> row_entries;

  IntMatrix to_dense() const;
  /// One "row col value" line per nonzero entry.
  std::string to_triplets() const;
};

/// Number of complete subgraphs K_{k+1} per k, without storing them.
std::vector<std::size_t> clique_counts(const Graph& g, std::optional<std::size_t> max_dim = std::nullopt,
                                       std::size_t budget = kDefaultSimplexBudget);

class SimplicialStructure {
 public:
  /// Enumerates every complete subgraph (up to max_dim) by recursive extension
  /// over bitset neighborhoods. Throws ResourceError when the total simplex
  /// count passes `budget`.
  static SimplicialStructure whitney(const Graph& g, std::optional<std::size_t> max_dim = std::nullopt,
                                     std::size_t budget = kDefaultSimplexBudget);

  const Graph& graph() const { return graph_; }
  /// Number of stored dimensions (top dimension + 1); 0 for the empty graph.
  std::size_t dimensions() const { return simplices_.size(); }
  std::size_t count(std::size_t k) const { return k < simplices_.size() ? simplices_[k].size() / (k + 1) : 0; }
  std::vector<std::size_t> f_vector() const;
  std::size_t total() const;

  std::span<const Vertex> simplex(std::size_t k, std::size_t index) const {
    return {simplices_[k].data() + index * (k + 1), k + 1};
  }
  /// Ordinal of a sorted vertex tuple, or nullopt if it is not a simplex.
  std::optional<std::size_t> index_of(std::span<const Vertex> sorted) const;

  /// d_k : k-forms -> (k+1)-forms, shape count(k+1) x count(k).
  const SignedIncidence& derivative(std::size_t k) const;

 private:
  Graph graph_;
  std::vector<std::vector<Vertex>> simplices_;  // flattened, stride k + 1
  std::vector<SignedIncidence> derivatives_;
  SignedIncidence empty_;
};

std::int64_t euler_characteristic(const SimplicialStructure& s);
std::int64_t euler_characteristic(const Graph& g);

/// d_k as a matrix; for k beyond the top dimension this is a zero-row matrix.
SignedIncidence exterior_derivative(const SimplicialStructure& s, std::size_t k);

/// Exact-valued function on oriented k-simplices.
struct Form {
  std::size_t degree = 0;
  std::vector<Rational> values;
};

/// Integer combination of oriented k-simplices.
struct Chain {
  std::size_t degree = 0;
  std::vector<std::int64_t> coefficients;
};

Form zero_form(const SimplicialStructure& s, std::size_t k);
Form apply_derivative(const SimplicialStructure& s, const Form& f);
/// Boundary of a chain: transpose of d applied to the coefficients.
Chain boundary(const SimplicialStructure& s, const Chain& c);

struct StokesSides {
  Rational lhs;  // <c, df>
  Rational rhs;  // <boundary c, f>
};
StokesSides stokes_pairing(const SimplicialStructure& s, const Chain& c, const Form& f);

/// (f u g)(x_0..x_{p+q}) = f(x_0..x_p) g(x_p..x_{p+q}) on ascending tuples.
/// Returns the zero form of degree p+q when no such simplices exist.
Form cup_product(const SimplicialStructure& s, const Form& f, const Form& g);

Form operator+(const Form& a, const Form& b);
Form operator*(const Rational& c, const Form& a);
bool is_zero(const Form& f);

}  // namespace gcalc
