// Spectral solutions of heat, wave, Schrodinger, Poisson, Maxwell and
// gravity equations on forms; wave shooting; isospectral Dirac deformation.
#pragma once

#include "graphcalc/spectral.hpp"

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace gcalc {

/// Block d_k of the Dirac matrix (v_{k+1} x v_k).
Eigen::MatrixXd derivative_block(const OperatorBundle& ops, std::size_t k);
/// Orthogonal projection onto ker L_k.
Eigen::VectorXd harmonic_part(const OperatorBundle& ops, std::size_t k, const Eigen::VectorXd& u);

/// e^{-L_k t} u0.
Eigen::VectorXd heat_evolve(const OperatorBundle& ops, std::size_t k, const Eigen::VectorXd& u0, double t);

struct WaveState {
  Eigen::VectorXd u;
  Eigen::VectorXd velocity;
};
/// cos(sqrt(L_k) t) u0 + sin(sqrt(L_k) t) / sqrt(L_k) v0 on range components;
/// the kernel part of v0 drifts linearly: u_ker + t v_ker.
WaveState wave_evolve(const OperatorBundle& ops, std::size_t k, const Eigen::VectorXd& u0, const Eigen::VectorXd& v0,
                      double t);
/// |u'|^2 + |D u|^2 with |D u|^2 = u^T L_k u.
double wave_energy(const OperatorBundle& ops, std::size_t k, const WaveState& state);

/// Eigendecomposition of the full Dirac matrix.
struct DiracEigen {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
  double tolerance = 0.0;
};
DiracEigen dirac_eigen(const OperatorBundle& ops);
/// psi = u + i D^+ v on the full form space.
Eigen::VectorXcd psi_from_wave(const DiracEigen& de, const Eigen::VectorXd& u, const Eigen::VectorXd& v);
/// psi(t) = e^{-iDt} psi(0); its real part is the wave solution u(t).
Eigen::VectorXcd schrodinger_evolve(const DiracEigen& de, const Eigen::VectorXcd& psi0, double t);

struct PoissonResult {
  Eigen::VectorXd u;
  Eigen::VectorXd removed;  // harmonic part of g
  double residual = 0.0;    // |L u - (g - removed)|
};
PoissonResult poisson_solve(const OperatorBundle& ops, std::size_t k, const Eigen::VectorXd& g);

struct MaxwellResult {
  Eigen::VectorXd potential;           // A, a co-exact 1-form
  Eigen::VectorXd field;               // F = dA
  Eigen::VectorXd removed_harmonic;    // part of j in ker L_1
  Eigen::VectorXd removed_gradient;    // part of j in im d_0 (non-conserved current)
  double field_closed_norm = 0.0;      // |dF|
  double residual = 0.0;               // |d*F - j_projected|
  double coulomb_norm = 0.0;           // |d*A|
};
MaxwellResult maxwell_solve(const OperatorBundle& ops, const Eigen::VectorXd& current);

struct GravityResult {
  Eigen::VectorXd potential;  // V
  Eigen::VectorXd field;      // F = dV
  Eigen::VectorXd removed;    // harmonic (per-component constant) part of rho
  double residual = 0.0;      // |d*F - rho_projected|
};
GravityResult gravity_solve(const OperatorBundle& ops, const Eigen::VectorXd& density);

class ResonanceError : public std::runtime_error {
 public:
  ResonanceError(const std::string& what, double eigenvalue) : std::runtime_error(what), eigenvalue_(eigenvalue) {}
  double eigenvalue() const { return eigenvalue_; }

 private:
  double eigenvalue_;
};

struct ShootResult {
  Eigen::VectorXd velocity;  // v with u(T) = e_y
  double replay_error = 0.0;
};
/// Initial velocity at x whose wave reaches e_y at time T. Throws
/// ResonanceError when |sin(sqrt(lambda) T)| < 1e-8 for some nonzero lambda.
ShootResult hopf_rynov_shoot(const OperatorBundle& ops, Vertex x, Vertex y, double time);

struct DeformationSample {
  double time;
  double spectral_drift;   // max |sorted eig D(t) - sorted eig D(0)|
  double off_block_norm;   // Frobenius norm of degree-changing blocks
  double diagonal_norm;    // Frobenius norm of degree-preserving blocks
  double laplacian_drift;  // |D(t)^2 - D(0)^2|
};
struct DeformationState {
  Eigen::MatrixXd dirac;
  double time = 0.0;
  Eigen::VectorXd initial_spectrum;
  std::vector<DeformationSample> samples;
  double max_drift = 0.0;
};
class DeformationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
/// Integrates D' = [B, D], B = (blocks raising degree) - transpose, by RK4
/// with re-symmetrization. Records a sample every `sample_every` steps.
/// Throws DeformationError when the spectral drift exceeds 1e-3.
DeformationState toda_lax_deform(const OperatorBundle& ops, double t_end, double dt, std::size_t sample_every = 100);

/// "time,spectral_drift,off_block_norm,diagonal_norm,laplacian_drift" lines.
std::string deformation_csv(const DeformationState& state);

}  // namespace gcalc
