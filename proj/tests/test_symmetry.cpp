#include "graphcalc/symmetry.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <numeric>

using namespace gcalc;

namespace {

Permutation rotation(std::size_t n) {
  Permutation p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<Vertex>((i + 1) % n);
  return p;
}

// Reflection of C_n fixing vertex 0.
Permutation reflection(std::size_t n) {
  Permutation p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<Vertex>((n - i) % n);
  return p;
}

}  // namespace

TEST_CASE("automorphism counts", "[symmetry]") {
  CHECK(automorphism_permutations(generate::complete(3)).size() == 6);
  CHECK(automorphism_permutations(generate::cycle(4)).size() == 8);
  CHECK(automorphism_permutations(generate::octahedron()).size() == 48);
  CHECK(automorphism_permutations(generate::icosahedron()).size() == 120);
  CHECK(automorphism_permutations(generate::cross_polytope(3)).size() == 384);
  CHECK(automorphism_permutations(generate::path(5)).size() == 2);
  CHECK(automorphism_permutations(generate::star(4)).size() == 24);
  CHECK(automorphism_permutations(Graph::from_edges(0, {})).size() == 1);
  CHECK_THROWS_AS(automorphism_permutations(generate::cycle(17)), ResourceError);
  CHECK_THROWS_AS(automorphism_permutations(generate::complete(9), 1000), ResourceError);

  const auto oct = automorphism_permutations(generate::octahedron());
  CHECK(is_group(oct));
  for (const auto& p : oct) CHECK(is_automorphism(generate::octahedron(), p));
}

TEST_CASE("induced simplex action", "[symmetry]") {
  const auto s = SimplicialStructure::whitney(generate::complete(3));
  const auto t = induce(s, Permutation{1, 0, 2});
  // Edge (0,1) maps to (1,0): fixed setwise with sign -1.
  CHECK(t.image[1][0] == 0);
  CHECK(t.sign[1][0] == -1);
  CHECK(t.image[2][0] == 0);
  CHECK(t.sign[2][0] == -1);
  CHECK_THROWS(induce(SimplicialStructure::whitney(generate::path(3)), Permutation{1, 0, 2}));
}

TEST_CASE("Lefschetz numbers", "[symmetry]") {
  SECTION("identity gives chi") {
    for (const Graph& g : {generate::octahedron(), generate::cycle(5), generate::random_er(8, 0.5, 1)}) {
      const auto s = SimplicialStructure::whitney(g);
      Permutation id(g.order());
      std::iota(id.begin(), id.end(), 0);
      const auto r = lefschetz(dirac_and_laplacian(s), induce(s, id));
      CHECK(r.lefschetz == euler_characteristic(s));
      CHECK(r.holds());
    }
  }
  SECTION("rotation of C_4") {
    const auto s = SimplicialStructure::whitney(generate::cycle(4));
    const auto r = lefschetz(dirac_and_laplacian(s), induce(s, rotation(4)));
    CHECK(r.fixed.empty());
    CHECK(r.lefschetz == 0);
    CHECK(std::abs(r.traces[0] - 1.0) < 1e-9);
    CHECK(std::abs(r.traces[1] - 1.0) < 1e-9);
  }
  SECTION("every automorphism of small graphs") {
    for (const Graph& g : {generate::octahedron(), generate::cycle(6), generate::wheel(5), generate::cross_polytope(3)}) {
      const auto s = SimplicialStructure::whitney(g);
      const auto ops = dirac_and_laplacian(s);
      for (const auto& t : automorphisms(s)) CHECK(lefschetz(ops, t).holds());
    }
  }
  SECTION("tree automorphisms fix a vertex or an edge") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto s = SimplicialStructure::whitney(generate::random_tree(10, seed));
      const auto ops = dirac_and_laplacian(s);
      for (const auto& t : automorphisms(s)) {
        const auto r = lefschetz(ops, t);
        CHECK(r.holds());
        CHECK(r.lefschetz == 1);
        CHECK_FALSE(r.fixed.empty());
      }
    }
  }
}

TEST_CASE("Brouwer fixed simplices", "[symmetry]") {
  const auto k4 = SimplicialStructure::whitney(generate::complete(4));
  for (const auto& t : automorphisms(k4)) CHECK(brouwer_check(k4.graph(), t));
  const auto star = SimplicialStructure::whitney(generate::star(5));
  CHECK(brouwer_check(star.graph(), induce(star, Permutation{0, 2, 1, 3, 4, 5})));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto s = SimplicialStructure::whitney(generate::random_contractible(8, seed));
    for (const auto& t : automorphisms(s)) CHECK(brouwer_check(s.graph(), t));
  }
  const auto c5 = SimplicialStructure::whitney(generate::cycle(5));
  CHECK_THROWS_AS(brouwer_check(c5.graph(), induce(c5, rotation(5))), InapplicableError);
}

TEST_CASE("group generation and subgroups", "[symmetry]") {
  const auto d4 = generate_group({rotation(4), reflection(4)}, 4);
  REQUIRE(d4);
  CHECK(d4->order() == 8);
  CHECK(is_group(d4->elements));
  CHECK_FALSE(generate_group({rotation(4)}, 4, 3));

  const auto subs = subgroups(automorphism_permutations(generate::cycle(4)));
  // D_4 has 10 subgroups; cyclic ones and pair closures reach all of them.
  CHECK(subs.size() == 10);
  for (const auto& a : subs) CHECK(is_group(a.elements));
}

TEST_CASE("Riemann-Hurwitz", "[symmetry]") {
  const auto c6 = SimplicialStructure::whitney(generate::cycle(6));
  const auto refl = generate_group({reflection(6)}, 6);
  const auto r = riemann_hurwitz(c6, *refl);
  CHECK(r.chi == 0);
  CHECK(r.quotient_chi == 1);
  CHECK(r.ramification == 2);
  CHECK(r.holds());

  Permutation id(6);
  std::iota(id.begin(), id.end(), 0);
  const auto trivial = riemann_hurwitz(c6, *generate_group({id}, 6));
  CHECK(trivial.ramification == 0);
  CHECK(trivial.quotient_chi == 0);

  const auto oct = SimplicialStructure::whitney(generate::octahedron());
  const auto antipodal = generate_group({Permutation{1, 0, 3, 2, 5, 4}}, 6);
  const auto ro = riemann_hurwitz(oct, *antipodal);
  CHECK(ro.quotient_chi == 1);
  CHECK(ro.ramification == 0);
  CHECK(ro.holds());

  for (const Graph& g : {generate::octahedron(), generate::complete(4), generate::wheel(6)}) {
    const auto s = SimplicialStructure::whitney(g);
    for (const auto& a : subgroups(automorphism_permutations(g))) CHECK(riemann_hurwitz(s, a).holds());
  }
}

TEST_CASE("orientation", "[symmetry]") {
  const auto oct = SimplicialStructure::whitney(generate::octahedron());
  REQUIRE(orient_top_simplices(oct));
  std::size_t preserving = 0;
  const auto ops = dirac_and_laplacian(oct);
  for (const auto& t : automorphisms(oct)) {
    const auto keep = orientation_preserving(oct, t);
    REQUIRE(keep);
    if (*keep) {
      ++preserving;
      const auto r = lefschetz(ops, t);
      CHECK(r.lefschetz == 2);
      CHECK(r.fixed.size() >= 2);
    }
  }
  CHECK(preserving == 24);
}
