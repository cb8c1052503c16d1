#include "graphcalc/spectral.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace gcalc;
using Catch::Matchers::WithinAbs;

namespace {

std::vector<std::size_t> betti(const Graph& g) { return betti_hodge(SimplicialStructure::whitney(g)).betti; }

}  // namespace

TEST_CASE("betti numbers of small graphs", "[spectral]") {
  CHECK(betti(generate::octahedron()) == std::vector<std::size_t>{1, 0, 1});
  CHECK(betti(generate::cycle(4)) == std::vector<std::size_t>{1, 1});
  CHECK(betti(generate::icosahedron()) == std::vector<std::size_t>{1, 0, 1});
  CHECK(betti(generate::complete(5)) == std::vector<std::size_t>{1, 0, 0, 0, 0});
  CHECK(betti(generate::cross_polytope(3)) == std::vector<std::size_t>{1, 0, 0, 1});
  CHECK(betti(generate::triangular_torus(5, 5)) == std::vector<std::size_t>{1, 2, 1});
}

TEST_CASE("hodge betti numbers agree with the rank oracle", "[spectral][property]") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = generate::random_er(10, 0.3 + 0.01 * static_cast<double>(seed), seed);
    const auto s = SimplicialStructure::whitney(g);
    const auto hodge = betti_hodge(s);
    CHECK_FALSE(hodge.ill_separated);
    CHECK(hodge.betti == betti_rank_oracle(s));
    std::int64_t alt = 0;
    for (std::size_t k = 0; k < hodge.betti.size(); ++k)
      alt += (k % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(hodge.betti[k]);
    CHECK(alt == euler_characteristic(s));
  }
}

TEST_CASE("dirac squares to the block Laplacian", "[spectral]") {
  const auto s = SimplicialStructure::whitney(generate::random_er(9, 0.6, 8));
  const auto ops = dirac_and_laplacian(s);
  const Eigen::MatrixXd sq = ops.dirac * ops.dirac;
  for (std::size_t k = 0; k < ops.degrees(); ++k) {
    const auto o = static_cast<Eigen::Index>(ops.offsets[k]);
    const auto n = static_cast<Eigen::Index>(ops.offsets[k + 1] - ops.offsets[k]);
    CHECK((sq.block(o, o, n, n) - ops.blocks[k]).norm() < 1e-12);
  }
  CHECK((ops.dirac - ops.dirac.transpose()).norm() == 0.0);
}

TEST_CASE("McKean-Singer supertrace is constant", "[spectral]") {
  for (const Graph& g : {generate::octahedron(), generate::cycle(7), generate::random_er(9, 0.5, 2)}) {
    const auto s = SimplicialStructure::whitney(g);
    const auto ops = dirac_and_laplacian(s);
    const double chi = static_cast<double>(euler_characteristic(s));
    for (double t : {0.0, 0.1, 1.0, 5.0, 20.0}) CHECK_THAT(mckean_singer_supertrace(ops, t), WithinAbs(chi, 1e-9));
  }
}

TEST_CASE("spanning tree counts", "[spectral]") {
  CHECK(spanning_tree_count(generate::cycle(5)).count == 5);
  CHECK(spanning_tree_count(generate::complete(4)).count == 16);
  CHECK(spanning_tree_count(generate::complete(7)).count == 16807);
  const std::vector<Edge> e{{0, 1}};
  const auto disc = spanning_tree_count(Graph::from_edges(3, e));
  CHECK(disc.count == 0);
  CHECK_FALSE(disc.connected);

  const auto k4 = spanning_tree_count(generate::complete(4));
  CHECK_THAT(k4.damped_estimate, WithinAbs(16.0, 1e-9));

  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const Graph g = generate::random_er(7, 0.5, seed);
    CHECK(spanning_tree_count(g).count == spanning_tree_count_exhaustive(g));
  }
  CHECK_THROWS(spanning_tree_count_exhaustive(generate::complete(9)));
}

TEST_CASE("rooted forest counts", "[spectral]") {
  CHECK(rooted_forest_count(generate::complete(2)) == 3);
  CHECK(rooted_forest_count(generate::complete(3)) == 16);
  CHECK(rooted_forest_count(Graph::from_edges(1, {})) == 1);
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const Graph g = generate::random_er(6, 0.5, seed);
    CHECK(rooted_forest_count(g) == rooted_forest_count_exhaustive(g));
  }
}

TEST_CASE("Cauchy-Binet sums", "[spectral]") {
  IntMatrix f(2, 3);
  f(0, 0) = 1, f(0, 1) = 2, f(0, 2) = 0, f(1, 0) = -1, f(1, 1) = 0, f(1, 2) = 3;
  const auto sides = cauchy_binet_sum(f, f, Rational(1, 3));
  CHECK(sides.determinant_side == sides.minor_side);

  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix a(4, 4), b(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        a(i, j) = rng.between(-1, 1);
        b(i, j) = rng.between(-1, 1);
      }
    const auto r = cauchy_binet_sum(a, b, Rational(rng.between(-3, 3), rng.between(1, 3)));
    CHECK(r.determinant_side == r.minor_side);
    const auto ri = cauchy_binet_sum_int(a, b, rng.between(-2, 2));
    CHECK(ri.determinant_side == ri.minor_side);
  }
  CHECK_THROWS_AS(cauchy_binet_sum(IntMatrix(2, 3), IntMatrix(3, 2), Rational(1)), std::invalid_argument);
}

TEST_CASE("pseudo-determinant", "[spectral]") {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(3, 3);
  m(0, 0) = 2.0;
  m(1, 1) = 3.0;
  CHECK_THAT(pseudo_determinant(m), WithinAbs(6.0, 1e-12));
  // Laplacian of K_n: pdet = n^{n-1} = n * trees.
  const auto l = graph_laplacian(generate::complete(5));
  Eigen::MatrixXd dl(5, 5);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) dl(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = static_cast<double>(l(i, j));
  CHECK_THAT(pseudo_determinant(dl), WithinAbs(625.0, 1e-8));
}

TEST_CASE("dirac zeta function", "[spectral]") {
  const auto ops = dirac_and_laplacian(SimplicialStructure::whitney(generate::cycle(6)));
  const auto pos = positive_dirac_eigenvalues(ops);
  // C_6: nonzero L eigenvalues 2-2cos(2 pi k/6), k=1..5, shared by L_0 and L_1;
  // D has +-sqrt of each pair, so five positive eigenvalues.
  REQUIRE(pos.size() == 5);
  double expect = 0.0;
  for (int k = 1; k < 6; ++k) expect += 1.0 / std::sqrt(2.0 - 2.0 * std::cos(2.0 * M_PI * k / 6.0));
  CHECK_THAT(zeta(pos, {1.0, 0.0}).real(), WithinAbs(expect, 1e-10));
  CHECK_THAT(zeta(pos, {0.0, 0.0}).real(), WithinAbs(5.0, 1e-12));

  const auto c12 = positive_dirac_eigenvalues(dirac_and_laplacian(SimplicialStructure::whitney(generate::cycle(12))));
  for (auto r : cycle_zeta_roots(12, Window{})) {
    CHECK(std::abs(zeta(c12, r)) < 1e-8);
    CHECK(r.real() >= 0.0);
    CHECK(r.real() <= 1.0);
  }
}

TEST_CASE("spectrum csv", "[spectral]") {
  const auto ops = dirac_and_laplacian(SimplicialStructure::whitney(generate::complete(2)));
  CHECK(spectrum_csv(ops).rfind("block,index,eigenvalue\n", 0) == 0);
}
