// Chip-firing divisors on the 1-skeleton: reduction, rank, canonical divisor,
// Riemann-Roch and the Jacobian order.
#pragma once

#include "graphcalc/graph.hpp"
#include "graphcalc/exact.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace gcalc {

using Divisor = std::vector<std::int64_t>;

std::int64_t degree(const Divisor& d);
/// K(x) = deg(x) - 2. Throws std::invalid_argument when g is disconnected.
Divisor canonical_divisor(const Graph& g);
/// D - L_0 f.
Divisor fire(const Graph& g, const Divisor& d, const std::vector<std::int64_t>& f);

/// Adjacency and BFS layers around q, prepared once for repeated reductions.
class Reducer {
 public:
  /// Throws std::invalid_argument when g is empty or disconnected.
  explicit Reducer(const Graph& g, Vertex q = 0);
  /// Replaces d by the unique q-reduced divisor in its class.
  void reduce(Divisor& d) const;

 private:
  Vertex q_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::vector<Vertex>> layers_;  // by BFS distance from q
  std::vector<std::int64_t> up_;             // neighbors one layer closer to q
  std::vector<std::int64_t> down_;           // neighbors one layer further out
};

/// The unique q-reduced divisor equivalent to d (Dhar burning).
Divisor q_reduce(const Graph& g, const Divisor& d, Vertex q = 0);
bool is_effective_class(const Graph& g, const Divisor& d);
/// Search over firing vectors f with f(0) = 0 and |f| <= bound; |V| <= 5.
bool is_effective_class_exhaustive(const Graph& g, const Divisor& d, std::int64_t bound = 10);

inline constexpr std::size_t kMaxDivisorVertices = 10;
inline constexpr std::size_t kRankBudget = 2000000;

/// Baker-Norine rank. Memoizes on reduced representatives; throws
/// ResourceError beyond kMaxDivisorVertices or kRankBudget classes.
class RankOracle {
 public:
  explicit RankOracle(const Graph& g);
  std::int64_t rank(const Divisor& d);

 private:
  struct Hash {
    std::size_t operator()(const Divisor& d) const;
  };
  const Graph& g_;
  Reducer reducer_;
  std::unordered_map<Divisor, std::int64_t, Hash> memo_;
};
std::int64_t divisor_rank(const Graph& g, const Divisor& d);

struct RiemannRochResult {
  std::int64_t rank = 0;
  std::int64_t dual_rank = 0;  // r(K - D)
  std::int64_t degree = 0;
  std::int64_t chi = 0;        // |V| - |E|
  bool holds() const { return rank - dual_rank == chi + degree; }
};
RiemannRochResult riemann_roch_check(const Graph& g, const Divisor& d);
RiemannRochResult riemann_roch_check(RankOracle& oracle, const Graph& g, const Divisor& d);

/// |det| of the reduced Laplacian over the rationals; throws when disconnected.
BigInt jacobian_order(const Graph& g);

}  // namespace gcalc
