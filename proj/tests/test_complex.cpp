#include "graphcalc/complex.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace gcalc;

namespace {

const std::vector<std::size_t>& fv(const SimplicialStructure& s) {
  static std::vector<std::size_t> keep;
  keep = s.f_vector();
  return keep;
}

Form random_form(const SimplicialStructure& s, std::size_t k, Rng& rng) {
  Form f = zero_form(s, k);
  for (auto& v : f.values) v = Rational(rng.between(-5, 5), rng.between(1, 4));
  return f;
}

// 1-form that is d of a random 0-form, hence closed.
Form random_exact_1form(const SimplicialStructure& s, Rng& rng) {
  return apply_derivative(s, random_form(s, 0, rng));
}

}  // namespace

TEST_CASE("whitney f-vectors", "[complex]") {
  CHECK(fv(SimplicialStructure::whitney(generate::complete(3))) == std::vector<std::size_t>{3, 3, 1});
  CHECK(fv(SimplicialStructure::whitney(generate::octahedron())) == std::vector<std::size_t>{6, 12, 8});
  CHECK(fv(SimplicialStructure::whitney(generate::cycle(5))) == std::vector<std::size_t>{5, 5});
  CHECK(fv(SimplicialStructure::whitney(generate::icosahedron())) == std::vector<std::size_t>{12, 30, 20});
  CHECK(fv(SimplicialStructure::whitney(generate::cross_polytope(3))) == std::vector<std::size_t>{8, 24, 32, 16});
  CHECK(SimplicialStructure::whitney(Graph::from_edges(0, {})).dimensions() == 0);
}

TEST_CASE("whitney respects max_dim and budget", "[complex]") {
  const auto capped = SimplicialStructure::whitney(generate::complete(5), 1);
  CHECK(capped.f_vector() == std::vector<std::size_t>{5, 10});
  try {
    SimplicialStructure::whitney(generate::complete(12), std::nullopt, 100);
    FAIL("expected ResourceError");
  } catch (const ResourceError& e) {
    CHECK(std::string(e.what()).find("dimension") != std::string::npos);
  }
}

TEST_CASE("clique_counts agrees with whitney", "[complex]") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = generate::random_er(10, 0.6, seed);
    CHECK(clique_counts(g) == SimplicialStructure::whitney(g).f_vector());
  }
}

TEST_CASE("simplices are sorted and faces are present", "[complex]") {
  const auto s = SimplicialStructure::whitney(generate::random_er(9, 0.7, 5));
  for (std::size_t k = 0; k < s.dimensions(); ++k)
    for (std::size_t i = 0; i < s.count(k); ++i) {
      const auto x = s.simplex(k, i);
      CHECK(std::is_sorted(x.begin(), x.end()));
      CHECK(s.index_of(x) == i);
      if (i > 0) {
        const auto prev = s.simplex(k, i - 1);
        CHECK(std::lexicographical_compare(prev.begin(), prev.end(), x.begin(), x.end()));
      }
    }
}

TEST_CASE("euler characteristic", "[complex]") {
  CHECK(euler_characteristic(SimplicialStructure::whitney(generate::octahedron())) == 2);
  CHECK(euler_characteristic(SimplicialStructure::whitney(generate::cycle(5))) == 0);
  CHECK(euler_characteristic(SimplicialStructure::whitney(Graph::from_edges(1, {}))) == 1);
  CHECK(euler_characteristic(generate::cross_polytope(3)) == 0);
}

TEST_CASE("exterior derivative shapes and entries", "[complex]") {
  const auto k2 = SimplicialStructure::whitney(generate::complete(2));
  const IntMatrix d0 = exterior_derivative(k2, 0).to_dense();
  REQUIRE(d0.rows() == 1);
  REQUIRE(d0.cols() == 2);
  CHECK(d0(0, 0) == -1);
  CHECK(d0(0, 1) == 1);

  const auto k3 = SimplicialStructure::whitney(generate::complete(3));
  CHECK(multiply(exterior_derivative(k3, 1).to_dense(), exterior_derivative(k3, 0).to_dense()).is_zero());

  const auto c4 = SimplicialStructure::whitney(generate::cycle(4));
  const IntMatrix c4d0 = exterior_derivative(c4, 0).to_dense();
  CHECK(c4d0.rows() == 4);
  CHECK(c4d0.cols() == 4);
  CHECK(exact_rank(c4d0) == 3);

  const auto beyond = exterior_derivative(c4, 5);
  CHECK(beyond.rows == 0);
  CHECK(exterior_derivative(c4, 1).rows == 0);
  CHECK(exterior_derivative(c4, 1).cols == 4);

  CHECK(exterior_derivative(k2, 0).to_triplets() == "0 0 -1\n0 1 1\n");
}

TEST_CASE("d squared vanishes on generated graphs", "[complex][property]") {
  std::vector<Graph> graphs{generate::complete(6), generate::icosahedron(), generate::cross_polytope(3)};
  for (std::uint64_t seed = 0; seed < 30; ++seed) graphs.push_back(generate::random_er(10, 0.65, seed));
  for (const auto& g : graphs) {
    const auto s = SimplicialStructure::whitney(g);
    for (std::size_t k = 0; k + 1 < s.dimensions(); ++k)
      CHECK(multiply(s.derivative(k + 1).to_dense(), s.derivative(k).to_dense()).is_zero());
  }
}

TEST_CASE("stokes pairing", "[complex]") {
  Rng rng(11);
  SECTION("single triangle of K3") {
    const auto s = SimplicialStructure::whitney(generate::complete(3));
    const Form f = random_form(s, 1, rng);
    const auto sides = stokes_pairing(s, Chain{2, {1}}, f);
    // edges (0,1),(0,2),(1,2): boundary of (0,1,2) is (1,2) - (0,2) + (0,1)
    CHECK(sides.lhs == f.values[2] - f.values[1] + f.values[0]);
    CHECK(sides.lhs == sides.rhs);
  }
  SECTION("oriented area chain of the octahedron") {
    const auto s = SimplicialStructure::whitney(generate::octahedron());
    // Orient the 8 triangles coherently: sign = parity of the number of odd
    // vertices (one from each antipodal pair {0,1},{2,3},{4,5}).
    Chain area{2, std::vector<std::int64_t>(s.count(2))};
    for (std::size_t i = 0; i < s.count(2); ++i) {
      const auto t = s.simplex(2, i);
      const int odd = static_cast<int>((t[0] & 1U) + (t[1] & 1U) + (t[2] & 1U));
      area.coefficients[i] = odd % 2 == 0 ? 1 : -1;
    }
    const Chain edge_sum = boundary(s, area);
    CHECK(std::all_of(edge_sum.coefficients.begin(), edge_sum.coefficients.end(), [](auto c) { return c == 0; }));
    const Form closed = random_exact_1form(s, rng);
    const auto sides = stokes_pairing(s, area, closed);
    CHECK(sides.lhs == 0);
    CHECK(sides.rhs == 0);
  }
  SECTION("random chains and forms") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto s = SimplicialStructure::whitney(generate::random_er(8, 0.5, seed));
      for (std::size_t k = 0; k + 1 < s.dimensions(); ++k) {
        Chain c{k + 1, std::vector<std::int64_t>(s.count(k + 1))};
        for (auto& x : c.coefficients) x = rng.between(-3, 3);
        const auto sides = stokes_pairing(s, c, random_form(s, k, rng));
        CHECK(sides.lhs == sides.rhs);
      }
    }
  }
  SECTION("degree mismatch") {
    const auto s = SimplicialStructure::whitney(generate::complete(3));
    CHECK_THROWS_AS(stokes_pairing(s, Chain{1, {1, 0, 0}}, zero_form(s, 1)), std::invalid_argument);
  }
}

TEST_CASE("cup product on the octahedron", "[complex]") {
  const auto s = SimplicialStructure::whitney(generate::octahedron());
  // Equator a->b->c->d->a = 0->2->1->3->0, poles p=4, n=5.
  Form equator = zero_form(s, 1), meridian = zero_form(s, 1);
  const std::vector<std::pair<Vertex, Vertex>> loop{{0, 2}, {2, 1}, {1, 3}, {3, 0}};
  for (auto [a, b] : loop) {
    const std::vector<Vertex> e{std::min(a, b), std::max(a, b)};
    equator.values[*s.index_of(e)] = a < b ? 1 : -1;
  }
  for (Vertex v = 0; v < 4; ++v)
    for (Vertex pole : {4U, 5U}) {
      const std::vector<Vertex> e{v, pole};
      meridian.values[*s.index_of(e)] = 1;  // oriented towards the pole
    }
  const Form area = cup_product(s, equator, meridian);
  REQUIRE(area.degree == 2);
  for (const auto& v : area.values) CHECK(v != 0);

  CHECK(is_zero(cup_product(s, zero_form(s, 1), meridian)));
  // Degree overflow gives an empty form.
  CHECK(cup_product(s, area, meridian).values.empty());
}

TEST_CASE("cup product satisfies the Leibniz rule", "[complex][property]") {
  Rng rng(5);
  std::vector<Graph> graphs{generate::octahedron(), generate::complete(5), generate::cross_polytope(3)};
  for (std::uint64_t seed = 0; seed < 10; ++seed) graphs.push_back(generate::random_er(8, 0.7, seed));
  for (const auto& g : graphs) {
    const auto s = SimplicialStructure::whitney(g);
    for (std::size_t p = 0; p < s.dimensions(); ++p)
      for (std::size_t q = 0; p + q + 1 < s.dimensions(); ++q) {
        const Form f = random_form(s, p, rng), h = random_form(s, q, rng);
        const Form lhs = apply_derivative(s, cup_product(s, f, h));
        const Form rhs = cup_product(s, apply_derivative(s, f), h) +
                         Rational(p % 2 == 0 ? 1 : -1) * cup_product(s, f, apply_derivative(s, h));
        CHECK(lhs.values == rhs.values);
      }
  }
  SECTION("closed forms multiply to closed forms") {
    const auto s = SimplicialStructure::whitney(generate::octahedron());
    const Form f = random_exact_1form(s, rng), h = random_exact_1form(s, rng);
    CHECK(is_zero(apply_derivative(s, f)));
    CHECK(is_zero(apply_derivative(s, cup_product(s, f, h))));
  }
}
