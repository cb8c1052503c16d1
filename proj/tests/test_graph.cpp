#include "graphcalc/graph.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>

using namespace gcalc;

namespace {

// Brute-force isomorphism test for small graphs.
bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<Vertex> perm(a.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (auto [u, v] : a.edges())
      if (!b.adjacent(perm[u], perm[v])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("build_graph basic cases", "[graph]") {
  const Graph k1 = Graph::from_edges(1, {});
  CHECK(k1.order() == 1);
  CHECK(k1.size() == 0);

  const std::vector<Edge> c4{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  const Graph g = Graph::from_edges(4, c4);
  CHECK(g.size() == 4);
  CHECK(g == generate::cycle(4));

  const std::vector<Edge> dup{{0, 1}, {1, 0}, {0, 1}};
  CHECK(Graph::from_edges(2, dup).size() == 1);
}

TEST_CASE("build_graph rejects bad pairs", "[graph]") {
  const std::vector<Edge> loop{{0, 1}, {2, 2}};
  try {
    Graph::from_edges(3, loop);
    FAIL("expected GraphError");
  } catch (const GraphError& e) {
    CHECK(e.offending() == Edge{2, 2});
  }
  const std::vector<Edge> out_of_range{{0, 5}};
  CHECK_THROWS_AS(Graph::from_edges(3, out_of_range), GraphError);
}

TEST_CASE("generators", "[graph]") {
  CHECK(generate::cycle(5).size() == 5);
  const Graph oct = generate::cross_polytope(2);
  CHECK(oct.order() == 6);
  CHECK(oct.size() == 12);
  CHECK(oct == generate::octahedron());

  const Graph ico = generate::icosahedron();
  CHECK(ico.order() == 12);
  CHECK(ico.size() == 30);
  for (Vertex v = 0; v < 12; ++v) CHECK(ico.degree(v) == 5);

  const Graph w = generate::wheel(6);
  CHECK(w.order() == 7);
  CHECK(w.size() == 12);
  CHECK_THROWS(generate::wheel(2));
  CHECK(generate::star(4).size() == 4);
  CHECK(generate::path(3).size() == 2);

  const Graph t = generate::triangular_torus(5, 5);
  for (Vertex v = 0; v < t.order(); ++v) CHECK(t.degree(v) == 6);
}

TEST_CASE("random_er determinism and extremes", "[graph]") {
  CHECK(generate::random_er(12, 0.4, 99) == generate::random_er(12, 0.4, 99));
  CHECK(generate::random_er(9, 0.0, 3).size() == 0);
  CHECK(generate::random_er(9, 1.0, 3) == generate::complete(9));
  CHECK_THROWS(generate::random_er(4, 1.5, 1));
}

TEST_CASE("random generators are trees / connected", "[graph]") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph t = generate::random_tree(10, seed);
    CHECK(t.size() == 9);
    CHECK(is_connected(t));
    const Graph c = generate::random_contractible(9, seed);
    CHECK(c.order() == 9);
    CHECK(is_connected(c));
  }
}

TEST_CASE("unit spheres", "[graph]") {
  const Graph oct = generate::octahedron();
  for (Vertex x = 0; x < 6; ++x) CHECK(isomorphic(unit_sphere(oct, x).graph, generate::cycle(4)));
  CHECK(unit_sphere(Graph::from_edges(1, {}), 0).graph.order() == 0);
  CHECK(isomorphic(unit_sphere(generate::wheel(6), 0).graph, generate::cycle(6)));
  CHECK_THROWS_AS(unit_sphere(oct, 6), std::out_of_range);

  const auto sphere = unit_sphere(oct, 0);
  REQUIRE(sphere.to_parent.size() == 4);
  for (Vertex v : sphere.to_parent) CHECK(oct.adjacent(0, v));
}

TEST_CASE("cross-polytope spheres are lower cross-polytopes", "[graph]") {
  for (std::size_t d = 1; d <= 3; ++d) {
    const Graph g = generate::cross_polytope(d);
    for (Vertex x = 0; x < g.order(); ++x)
      CHECK(isomorphic(unit_sphere(g, x).graph, generate::cross_polytope(d - 1)));
  }
}

TEST_CASE("induced subgraphs", "[graph]") {
  const Graph c4 = generate::cycle(4);
  const std::vector<Vertex> all{0, 1, 2, 3};
  CHECK(induced_subgraph(c4, all).graph == c4);
  const std::vector<Vertex> three{0, 1, 2};
  CHECK(induced_subgraph(c4, three).graph == generate::path(3));
  const std::vector<Vertex> bad{0, 9};
  CHECK_THROWS_AS(induced_subgraph(c4, bad), std::out_of_range);

  const Graph oct = generate::octahedron();
  const auto nbrs = oct.neighbors(0);
  CHECK(induced_subgraph(oct, nbrs).graph == unit_sphere(oct, 0).graph);
}

TEST_CASE("metrics", "[graph]") {
  const auto oct = metrics(generate::octahedron());
  CHECK(oct.components == 1);
  CHECK(oct.diameter == 2);
  CHECK(metrics(generate::icosahedron()).diameter == 3);

  const auto k5 = metrics(generate::complete(5));
  CHECK(k5.diameter == 1);
  CHECK(k5.clustering == 1.0);
  CHECK(k5.edge_density == 1.0);
  CHECK(k5.mean_distance == 1.0);

  // Path 0-1-2 plus an isolated vertex: diameter of the largest component.
  const std::vector<Edge> e{{0, 1}, {1, 2}};
  const auto m = metrics(Graph::from_edges(4, e));
  CHECK(m.components == 2);
  CHECK(m.disconnected);
  CHECK(m.diameter == 2);
}

TEST_CASE("edge list and JSON round trips", "[graph][io]") {
  for (const Graph& g : {generate::octahedron(), generate::random_er(11, 0.5, 4), Graph::from_edges(5, {})}) {
    const std::string text = to_edge_list(g);
    CHECK(parse_edge_list(text) == g);
    CHECK(to_edge_list(parse_edge_list(text)) == text);
    const std::string json = to_json(g);
    CHECK(parse_json(json) == g);
    CHECK(to_json(parse_json(json)) == json);
  }
  CHECK(to_edge_list(generate::path(3)) == "3 2\n0 1\n1 2\n");
  CHECK(to_json(generate::path(3)) == R"({"edges":[[0,1],[1,2]],"n":3})");
}

TEST_CASE("edge list parse errors carry line numbers", "[graph][io]") {
  auto message = [](const std::string& text) {
    try {
      parse_edge_list(text);
    } catch (const std::invalid_argument& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message("3 2\n0 1\n1 1\n").find("line 3") != std::string::npos);
  CHECK(message("3 2\n0 1\n").find("line 2") != std::string::npos);
  CHECK(message("x\n").find("line 1") != std::string::npos);
  CHECK(message("2 1\n0 7\n").find("out of range") != std::string::npos);
  CHECK_THROWS(parse_json(R"({"n": 2, "edges": [[0]]})"));
}

TEST_CASE("generator specs", "[graph]") {
  CHECK(generate_from_spec("cycle:7") == generate::cycle(7));
  CHECK(generate_from_spec("random_er:8,0.5,3") == generate::random_er(8, 0.5, 3));
  CHECK_THROWS(generate_from_spec("dodecahedron"));
  CHECK_THROWS(generate_from_spec("cycle"));
}
