#include "graphcalc/geometry.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace gcalc;

namespace {

// Hexagonal patch of the triangular lattice: axial coordinates within
// distance r of the origin; the origin is vertex 0.
Graph hex_patch(int r) {
  std::vector<std::pair<int, int>> cells{{0, 0}};
  for (int q = -r; q <= r; ++q)
    for (int s = -r; s <= r; ++s)
      if (std::abs(q) + std::abs(s) + std::abs(q + s) <= 2 * r && !(q == 0 && s == 0)) cells.emplace_back(q, s);
  std::vector<Edge> edges;
  const int dirs[6][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}};
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (std::size_t j = i + 1; j < cells.size(); ++j)
      for (const auto& d : dirs)
        if (cells[j].first - cells[i].first == d[0] && cells[j].second - cells[i].second == d[1])
          edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return Graph::from_edges(cells.size(), edges);
}

}  // namespace

TEST_CASE("Euler curvature", "[geometry]") {
  const auto ico = curvature(generate::icosahedron());
  for (const auto& k : ico.curvature) CHECK(k == Rational(1, 6));
  CHECK(ico.total() == 2);

  const auto oct = curvature(generate::octahedron());
  for (const auto& k : oct.curvature) CHECK(k == Rational(1, 3));
  CHECK(oct.sphere_f_vectors[0] == std::vector<std::size_t>{4, 4});

  for (std::size_t n = 4; n <= 9; ++n)
    for (const auto& k : curvature(generate::cycle(n)).curvature) CHECK(k == 0);

  for (const auto& k : curvature(generate::cross_polytope(3)).curvature) CHECK(k == 0);
}

TEST_CASE("Gauss-Bonnet on random graphs", "[geometry][property]") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = generate::random_er(11, 0.3 + 0.01 * static_cast<double>(seed), seed);
    CHECK(curvature(g).total() == euler_characteristic(g));
  }
}

TEST_CASE("triangle-free curvature", "[geometry][property]") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph t = generate::random_tree(12, seed);
    const auto k = curvature(t);
    for (Vertex x = 0; x < t.order(); ++x)
      CHECK(k.curvature[x] == Rational(1) - Rational(static_cast<std::int64_t>(t.degree(x)), 2));
  }
}

TEST_CASE("second-order curvature", "[geometry]") {
  const Graph ico = generate::icosahedron();
  for (Vertex x = 0; x < 12; ++x) CHECK(second_order_curvature(ico, x) == 5);
  CHECK(second_order_curvature(generate::complete(6), 0) == 10);
  CHECK(second_order_curvature(hex_patch(2), 0) == 0);
}

TEST_CASE("induced cycles", "[geometry]") {
  CHECK(induced_cycles(generate::cycle(5)).size() == 1);
  CHECK(induced_cycles(generate::complete(5)).empty());
  // The wheel rim is the only induced cycle of length >= 4 in W_6.
  CHECK(induced_cycles(generate::wheel(6)).size() == 1);
  // C_4 with one chord has no induced 4-cycle.
  const std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}};
  CHECK(induced_cycles(Graph::from_edges(4, e)).empty());
  // K_{2,3} has three induced 4-cycles.
  const std::vector<Edge> k23{{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}};
  CHECK(induced_cycles(Graph::from_edges(5, k23)).size() == 3);
}

TEST_CASE("sectional, Ricci and scalar curvature", "[geometry]") {
  const auto ico = sectional_and_ricci(generate::icosahedron());
  CHECK(ico.wheels.size() == 12);
  for (const auto& w : ico.wheels) CHECK(w.curvature == Rational(1, 6));
  for (const auto& r : ico.ricci) CHECK(r == Rational(1, 6));
  for (const auto& s : ico.scalar) CHECK(s == Rational(1, 6));

  const auto oct = sectional_and_ricci(generate::octahedron());
  for (const auto& w : oct.wheels) CHECK(w.curvature == Rational(1, 3));

  const auto tree = sectional_and_ricci(generate::random_tree(8, 1));
  CHECK(tree.wheels.empty());
  for (const auto& r : tree.ricci) CHECK_FALSE(r.has_value());
  for (const auto& s : tree.scalar) CHECK_FALSE(s.has_value());
}

TEST_CASE("inductive dimension", "[geometry]") {
  for (std::size_t n = 1; n <= 7; ++n) CHECK(dimension(generate::complete(n)) == static_cast<std::int64_t>(n - 1));
  CHECK(dimension(generate::octahedron()) == 2);
  CHECK(dimension(generate::icosahedron()) == 2);
  CHECK(dimension(generate::star(4)) == 1);
  CHECK(dimension(Graph::from_edges(0, {})) == -1);
  const auto d = inductive_dimension(generate::star(4));
  CHECK(d.dimension == 1);
  CHECK(d.per_vertex[0] == 1);
}

TEST_CASE("expected dimension polynomial", "[geometry]") {
  CHECK(expected_dimension_polynomial(0) == std::vector<Rational>{-1});
  CHECK(expected_dimension_polynomial(1) == std::vector<Rational>{0});
  CHECK(expected_dimension_polynomial(2) == std::vector<Rational>{0, 1});
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto poly = expected_dimension_polynomial(n);
    CHECK(evaluate(poly, Rational(1)) == static_cast<std::int64_t>(n - 1));
    CHECK(poly.size() - 1 <= n * (n - 1) / 2);
  }
  // d_3(p): enumerate the 8 graphs on 3 labelled vertices by hand weights.
  const auto d3 = expected_dimension_polynomial(3);
  const Rational half(1, 2);
  // dims: empty 0, one edge (3 graphs) 2/3, path (3 graphs) 1, triangle 2.
  const Rational manual = Rational(1, 8) * (0 + 3 * Rational(2, 3) + 3 * 1 + 2);
  CHECK(evaluate(d3, half) == manual);
}

TEST_CASE("geometric predicate", "[geometry]") {
  CHECK(is_geometric(generate::octahedron(), 2) == Verdict::yes);
  CHECK(is_geometric(generate::icosahedron(), 2) == Verdict::yes);
  CHECK(is_geometric(generate::cross_polytope(3), 3) == Verdict::yes);
  CHECK(is_geometric(generate::complete(4), 2) == Verdict::no);
  CHECK(is_geometric(generate::cycle(5), 1) == Verdict::yes);
  CHECK(is_geometric(generate::cycle(5), 2) == Verdict::no);
  CHECK(is_geometric(generate::path(4), 1) == Verdict::no);
  CHECK(is_geometric(generate::triangular_torus(6, 6), 2) == Verdict::yes);
}

TEST_CASE("flatness", "[geometry]") {
  CHECK(flatness_check(generate::cross_polytope(3), 3));
  CHECK(flatness_check(generate::cycle(5), 1));
  CHECK_THROWS_AS(flatness_check(generate::octahedron(), 2), InapplicableError);
  CHECK_THROWS_AS(flatness_check(generate::complete(4), 3), InapplicableError);
}

TEST_CASE("positive curvature report", "[geometry]") {
  const auto ico = positive_curvature_report(generate::icosahedron());
  CHECK(ico.all_positive);
  CHECK(ico.diameter == 3);
  CHECK(ico.diameter_bound);
  const auto oct = positive_curvature_report(generate::octahedron());
  CHECK(oct.all_positive);
  CHECK(oct.diameter == 2);
  const auto torus = positive_curvature_report(generate::triangular_torus(6, 6));
  CHECK(torus.dimension == 2);
  CHECK_FALSE(torus.all_positive);
  CHECK_THROWS_AS(positive_curvature_report(generate::complete(4)), InapplicableError);
}

TEST_CASE("curvature csv", "[geometry]") {
  CHECK(curvature_csv(generate::complete(2)) == "vertex,curvature,dimension\n0,1/2,1\n1,1/2,1\n");
}
