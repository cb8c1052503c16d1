// Euler curvature and its relatives, inductive dimension and
// geometric-graph predicates.
#pragma once

#include "graphcalc/morse.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gcalc {

struct CurvatureVector {
  std::vector<Rational> curvature;
  /// f-vector of each unit sphere.
  std::vector<std::vector<std::size_t>> sphere_f_vectors;
  Rational total() const;
};

/// K(x) = sum_k (-1)^k V_{k-1}(x) / (k+1) with V_{-1} = 1.
CurvatureVector curvature(const Graph& g);

/// 2 |S_1(x)| - |S_2(x)| from BFS spheres.
std::int64_t second_order_curvature(const Graph& g, Vertex x);

struct Wheel {
  Vertex center;
  std::vector<Vertex> rim;  // induced cycle in S(center), parent ids
  Rational curvature;       // 1 - rim.size() / 6
};
struct SectionalRicci {
  std::vector<Wheel> wheels;
  /// Indexed like g.edges(); empty when no wheel contains the edge.
  std::vector<std::optional<Rational>> ricci;
  std::vector<std::optional<Rational>> scalar;
};
/// Wheels are induced cycles of length >= 4 in a unit sphere.
SectionalRicci sectional_and_ricci(const Graph& g);
/// Induced cycles of length >= 4, each listed once.
std::vector<std::vector<Vertex>> induced_cycles(const Graph& g);

struct DimensionValue {
  std::vector<Rational> per_vertex;
  Rational dimension;  // -1 for the empty graph
};
DimensionValue inductive_dimension(const Graph& g);
Rational dimension(const Graph& g);

/// Coefficients (ascending powers of p) of the expected dimension of G(n, p).
std::vector<Rational> expected_dimension_polynomial(std::size_t n);
Rational evaluate(const std::vector<Rational>& poly, const Rational& p);
double evaluate(const std::vector<Rational>& poly, double p);

inline constexpr std::size_t kSphereCritBudget = 12;

/// Every unit sphere is geometric of dimension d-1 and has crit 2; for d = 1
/// every unit sphere is two isolated vertices. Unknown when a sphere is larger
/// than kSphereCritBudget or a contractibility query stays undecided.
Verdict is_geometric(const Graph& g, std::size_t d);

/// Throws InapplicableError unless d is odd and g is geometric of dimension d.
bool flatness_check(const Graph& g, std::size_t d);

struct PositiveCurvatureReport {
  std::size_t dimension = 0;
  bool all_positive = false;
  std::size_t diameter = 0;
  bool diameter_bound = false;  // diameter <= 3
};
/// Throws InapplicableError unless g is geometric for some d in 1..4.
PositiveCurvatureReport positive_curvature_report(const Graph& g);

/// "vertex,curvature,dimension" lines.
std::string curvature_csv(const Graph& g);

}  // namespace gcalc
