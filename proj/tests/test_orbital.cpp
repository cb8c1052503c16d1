#include "graphcalc/orbital.hpp"
#include "graphcalc/complex.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace gcalc;

TEST_CASE("polynomial evaluation", "[orbital]") {
  CHECK(quadratic_shift(3)(4, 7) == 5);
  CHECK(linear(-2, 1)(3, 5) == 0);
  CHECK(linear(3, 1).to_string() == "3x+1");
  CHECK(quadratic_shift(-1).to_string() == "x^2-1");
  CHECK(monomial(3)(10, 1000) == 0);
}

TEST_CASE("orbital graphs", "[orbital]") {
  const auto z5 = orbital_graph({5, Domain::ring, {linear(2, 0)}});
  CHECK(z5.graph.order() == 5);
  CHECK(z5.graph.size() == 4);
  CHECK(z5.graph.degree(0) == 0);
  for (Vertex v = 1; v < 5; ++v) CHECK(z5.graph.degree(v) == 2);

  const auto z2 = orbital_graph({2, Domain::units, {monomial(2)}});
  CHECK(z2.graph.order() == 1);
  CHECK(is_connected(z2.graph));
  CHECK(is_connected(orbital_graph({17, Domain::units, {monomial(2)}}).graph));
  CHECK_FALSE(is_connected(orbital_graph({13, Domain::units, {monomial(2)}}).graph));

  // Units only: 3 is not a unit mod 9, so 2x on Z_9^* never leaves the domain.
  const auto z9 = orbital_graph({9, Domain::units, {linear(2, 0)}});
  CHECK(z9.labels == std::vector<std::uint64_t>{1, 2, 4, 5, 7, 8});
  CHECK(is_connected(z9.graph));
  // x + 3 sends units mod 6 to non-units: no edges.
  CHECK(orbital_graph({6, Domain::units, {linear(1, 3)}}).graph.size() == 0);

  const auto a = orbital_graph({31, Domain::ring, {quadratic_shift(1), quadratic_shift(5)}});
  const auto b = orbital_graph({31, Domain::ring, {quadratic_shift(5), quadratic_shift(1)}});
  CHECK(a.graph == b.graph);
  CHECK_THROWS(orbital_graph({1, Domain::ring, {}}));
}

TEST_CASE("number predicates", "[orbital]") {
  CHECK(number_predicates(257).fermat_prime);
  CHECK_FALSE(number_predicates(7).fermat_prime);
  CHECK(number_predicates(3).fermat_prime);
  CHECK(number_predicates(11).two_primitive_root);
  CHECK(multiplicative_order(2, 11) == 10);
  CHECK_FALSE(number_predicates(7).two_primitive_root);
  CHECK(number_predicates(13).pierpont_prime);
  CHECK(number_predicates(2).pierpont_prime);
  CHECK_FALSE(number_predicates(11).pierpont_prime);
  CHECK_FALSE(number_predicates(25).pierpont_prime);
  CHECK(euler_phi(36) == 12);
}

TEST_CASE("orbital examples", "[orbital]") {
  CHECK_FALSE(
      is_connected(orbital_graph({311, Domain::ring, {quadratic_shift(57), quadratic_shift(58), quadratic_shift(213)}})
                       .graph));
  CHECK(triangle_count(orbital_graph({19, Domain::ring, {linear(2, 0), linear(3, 1)}}).graph) == 4);
  for (std::uint64_t p = 5; p <= 97; ++p)
    if (is_prime(p)) CHECK(triangle_count(orbital_graph({p, Domain::ring, {quadratic_shift(1)}}).graph) <= 2);
}

TEST_CASE("claims over small ranges", "[orbital]") {
  ClaimRanges small;
  small.connectivity_max = 300;
  small.collatz_max = 300;
  small.single_map_max = 60;
  small.two_map_min = 100;
  small.two_map_max = 150;
  small.triangle_max = 300;
  small.shift_bound = 20;
  for (const auto& r : claim_suite(small)) {
    INFO(r.id);
    CHECK(r.cases > 0);
    CHECK(r.passed());
  }
  // Composite moduli break the literal squaring statement on Z_n^*.
  CHECK(is_connected(orbital_graph({4, Domain::units, {monomial(2)}}).graph));
}
