#include "graphcalc/dynamics.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace gcalc;

namespace {

OperatorBundle bundle(const Graph& g) { return dirac_and_laplacian(SimplicialStructure::whitney(g)); }

Eigen::VectorXd random_vector(Eigen::Index n, Rng& rng) {
  Eigen::VectorXd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = rng.uniform01() * 2.0 - 1.0;
  return v;
}

}  // namespace

TEST_CASE("heat equation", "[dynamics]") {
  const auto ops = bundle(generate::octahedron());
  Eigen::VectorXd u0 = Eigen::VectorXd::Zero(6);
  u0(0) = 6.0;
  double last = INFINITY;
  for (double t : {0.0, 0.5, 1.0, 10.0, 100.0}) {
    const auto u = heat_evolve(ops, 0, u0, t);
    CHECK(std::abs(u.sum() - 6.0) < 1e-10);
    const double gap = (u - harmonic_part(ops, 0, u0)).norm();
    CHECK(gap <= last + 1e-12);
    last = gap;
  }
  const auto late = heat_evolve(ops, 0, u0, 100.0);
  for (Eigen::Index i = 0; i < 6; ++i) CHECK(std::abs(late(i) - 1.0) < 1e-10);
  CHECK_THROWS_AS(heat_evolve(ops, 0, u0, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(heat_evolve(ops, 0, Eigen::VectorXd::Zero(3), 1.0), std::invalid_argument);
}

TEST_CASE("wave equation on K_2", "[dynamics]") {
  const auto ops = bundle(generate::complete(2));
  Eigen::VectorXd u0(2), v0 = Eigen::VectorXd::Zero(2);
  u0 << 1.0, -1.0;
  for (double t : {0.3, 1.0, 4.0}) {
    const auto s = wave_evolve(ops, 0, u0, v0, t);
    CHECK((s.u - std::cos(std::sqrt(2.0) * t) * u0).norm() < 1e-12);
  }
  // Kernel velocity drifts linearly.
  Eigen::VectorXd drift(2);
  drift << 1.0, 1.0;
  const auto s = wave_evolve(ops, 0, Eigen::VectorXd::Zero(2), drift, 3.0);
  CHECK((s.u - 3.0 * drift).norm() < 1e-12);
}

TEST_CASE("wave energy and Schrodinger norm are conserved", "[dynamics]") {
  const auto s = SimplicialStructure::whitney(generate::random_er(8, 0.5, 3));
  const auto ops = dirac_and_laplacian(s);
  Rng rng(5);
  for (std::size_t k = 0; k < ops.degrees(); ++k) {
    const auto n = ops.eigenvalues[k].size();
    const Eigen::VectorXd u0 = random_vector(n, rng), v0 = random_vector(n, rng);
    const double e0 = wave_energy(ops, k, {u0, v0});
    for (double t = 0.0; t <= 10.0; t += 0.5) CHECK(std::abs(wave_energy(ops, k, wave_evolve(ops, k, u0, v0, t)) - e0) < 1e-8);
  }
  const auto de = dirac_eigen(ops);
  const Eigen::VectorXd u0 = random_vector(static_cast<Eigen::Index>(ops.size()), rng);
  const Eigen::VectorXd v0 = random_vector(static_cast<Eigen::Index>(ops.size()), rng);
  const auto psi0 = psi_from_wave(de, u0, v0);
  for (double t = 0.0; t <= 10.0; t += 0.5) CHECK(std::abs(schrodinger_evolve(de, psi0, t).norm() - psi0.norm()) < 1e-8);
}

TEST_CASE("Schrodinger real part solves the wave equation", "[dynamics]") {
  const auto ops = bundle(generate::cycle(5));
  const auto de = dirac_eigen(ops);
  Rng rng(9);
  // Velocity without kernel part, where D^+ inverts D.
  Eigen::VectorXd u0 = random_vector(10, rng), v0 = random_vector(10, rng);
  v0.head(5) -= harmonic_part(ops, 0, v0.head(5));
  v0.tail(5) -= harmonic_part(ops, 1, v0.tail(5));
  const auto psi = schrodinger_evolve(de, psi_from_wave(de, u0, v0), 2.0);
  const auto w0 = wave_evolve(ops, 0, u0.head(5), v0.head(5), 2.0);
  const auto w1 = wave_evolve(ops, 1, u0.tail(5), v0.tail(5), 2.0);
  CHECK((psi.real().head(5) - w0.u).norm() < 1e-9);
  CHECK((psi.real().tail(5) - w1.u).norm() < 1e-9);
}

TEST_CASE("Poisson equation", "[dynamics]") {
  const auto ops = bundle(generate::complete(2));
  Eigen::VectorXd g(2);
  g << 1.0, -1.0;
  const auto r = poisson_solve(ops, 0, g);
  CHECK(std::abs(r.u(0) - 0.5) < 1e-12);
  CHECK(std::abs(r.u(1) + 0.5) < 1e-12);
  CHECK(r.removed.norm() < 1e-12);

  g << 3.0, 1.0;
  const auto shifted = poisson_solve(ops, 0, g);
  CHECK(std::abs(shifted.removed(0) - 2.0) < 1e-12);
  CHECK(shifted.residual < 1e-12);

  const auto c5 = bundle(generate::cycle(5));
  Rng rng(2);
  for (std::size_t k = 0; k < 2; ++k) CHECK(poisson_solve(c5, k, random_vector(5, rng)).residual < 1e-9);
}

TEST_CASE("Maxwell and gravity", "[dynamics]") {
  Rng rng(4);
  for (const Graph& g : {generate::octahedron(), generate::wheel(6), generate::random_er(9, 0.5, 2), generate::cycle(6)}) {
    const auto ops = bundle(g);
    const Eigen::VectorXd j = random_vector(ops.eigenvalues[1].size(), rng);
    const auto m = maxwell_solve(ops, j);
    CHECK(m.residual < 1e-6);
    CHECK(m.field_closed_norm < 1e-9);
    CHECK(m.coulomb_norm < 1e-9);
    CHECK((m.removed_harmonic + m.removed_gradient).norm() <= j.norm() + 1e-9);

    const Eigen::VectorXd rho = random_vector(static_cast<Eigen::Index>(g.order()), rng);
    const auto grav = gravity_solve(ops, rho);
    CHECK(grav.residual < 1e-6);
    CHECK(std::abs((rho - grav.removed).sum()) < 1e-9);
  }
  // On a cycle, a circulating current is harmonic and entirely removed.
  const auto c6 = bundle(generate::cycle(6));
  const auto loop = maxwell_solve(c6, harmonic_part(c6, 1, Eigen::VectorXd::Ones(6)));
  CHECK(loop.potential.norm() < 1e-9);
}

TEST_CASE("Hopf-Rynov shooting", "[dynamics]") {
  const auto k2 = bundle(generate::complete(2));
  const auto r = hopf_rynov_shoot(k2, 0, 1, 1.0);
  CHECK(r.replay_error < 1e-6);

  const auto oct = bundle(generate::octahedron());
  CHECK(hopf_rynov_shoot(oct, 0, 1, 1.3).replay_error < 1e-6);

  Rng rng(11);
  const auto g = bundle(generate::random_er(8, 0.5, 6));
  for (int i = 0; i < 20; ++i) {
    const auto x = static_cast<Vertex>(rng.below(8)), y = static_cast<Vertex>(rng.below(8));
    CHECK(hopf_rynov_shoot(g, x, y, 0.5 + 3.0 * rng.uniform01()).replay_error < 1e-6);
  }
  // K_2 has lambda = 2; sqrt(2) T = pi is resonant.
  try {
    hopf_rynov_shoot(k2, 0, 1, M_PI / std::sqrt(2.0));
    FAIL("expected a resonance");
  } catch (const ResonanceError& e) {
    CHECK(std::abs(e.eigenvalue() - 2.0) < 1e-9);
  }
}

TEST_CASE("Toda-Lax deformation is isospectral", "[dynamics]") {
  for (const Graph& g : {generate::complete(2), generate::cycle(4), generate::complete(3)}) {
    const auto st = toda_lax_deform(bundle(g), 10.0, 1e-3, 500);
    CHECK(st.max_drift < 1e-6);
    CHECK(std::abs(st.time - 10.0) < 1e-9);
    CHECK(st.samples.size() == 21);
    CHECK((st.dirac - st.dirac.transpose()).norm() < 1e-12);
  }
  // The degree-changing part decays and the diagonal part grows on K_2.
  const auto k2 = toda_lax_deform(bundle(generate::complete(2)), 5.0, 1e-3, 1000);
  CHECK(k2.samples.back().off_block_norm < k2.samples.front().off_block_norm);
  CHECK(k2.samples.back().diagonal_norm > k2.samples.front().diagonal_norm);
  const auto csv = deformation_csv(k2);
  CHECK(csv.rfind("time,spectral_drift,off_block_norm,diagonal_norm,laplacian_drift\n", 0) == 0);
  CHECK_THROWS_AS(toda_lax_deform(bundle(generate::octahedron()), 1.0, 0.5, 1), DeformationError);
}
