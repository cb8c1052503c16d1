#include "graphcalc/dynamics.hpp"

#include <cmath>
#include <sstream>

namespace gcalc {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

void require_degree(const OperatorBundle& ops, std::size_t k, const Eigen::VectorXd& u) {
  if (k >= ops.degrees()) throw std::invalid_argument("form degree " + std::to_string(k) + " is beyond the complex");
  if (u.size() != ops.eigenvalues[k].size()) throw std::invalid_argument("field length does not match degree");
}

// Applies f(lambda) to u in the eigenbasis of L_k.
template <typename F>
Eigen::VectorXd spectral_apply(const OperatorBundle& ops, std::size_t k, const Eigen::VectorXd& u, F f) {
  const auto& vecs = ops.eigenvectors[k];
  Eigen::VectorXd coeff = vecs.transpose() * u;
  for (Eigen::Index i = 0; i < coeff.size(); ++i) coeff(i) *= f(ops.eigenvalues[k](i));
  return vecs * coeff;
}

// Kernel of the full (nonnegative) L as seen through D^2.
bool in_kernel(const OperatorBundle& ops, double lambda) { return lambda < ops.kernel_tolerance(); }

}  // namespace

Eigen::MatrixXd derivative_block(const OperatorBundle& ops, std::size_t k) {
  const std::size_t rows = k + 1 < ops.degrees() ? ops.offsets[k + 2] - ops.offsets[k + 1] : 0;
  const std::size_t cols = ops.offsets[k + 1] - ops.offsets[k];
  if (rows == 0) return Eigen::MatrixXd::Zero(0, idx(cols));
  return ops.dirac.block(idx(ops.offsets[k + 1]), idx(ops.offsets[k]), idx(rows), idx(cols));
}

Eigen::VectorXd harmonic_part(const OperatorBundle& ops, std::size_t k, const Eigen::VectorXd& u) {
  require_degree(ops, k, u);
  const Eigen::MatrixXd h = ops.harmonic_basis(k);
  return h * (h.transpose() * u);
}

Eigen::VectorXd heat_evolve(const OperatorBundle& ops, std::size_t k, const Eigen::VectorXd& u0, double t) {
  require_degree(ops, k, u0);
  if (t < 0) throw std::invalid_argument("heat_evolve needs t >= 0");
  return spectral_apply(ops, k, u0, [&](double l) { return in_kernel(ops, l) ? 1.0 : std::exp(-l * t); });
}

WaveState wave_evolve(const OperatorBundle& ops, std::size_t k, const Eigen::VectorXd& u0, const Eigen::VectorXd& v0,
                      double t) {
  require_degree(ops, k, u0);
  require_degree(ops, k, v0);
  WaveState s;
  s.u = spectral_apply(ops, k, u0, [&](double l) { return in_kernel(ops, l) ? 1.0 : std::cos(std::sqrt(l) * t); }) +
        spectral_apply(ops, k, v0, [&](double l) {
          if (in_kernel(ops, l)) return t;
          const double w = std::sqrt(l);
          return std::sin(w * t) / w;
        });
  s.velocity =
      spectral_apply(ops, k, u0, [&](double l) {
        if (in_kernel(ops, l)) return 0.0;
        const double w = std::sqrt(l);
        return -w * std::sin(w * t);
      }) +
      spectral_apply(ops, k, v0, [&](double l) { return in_kernel(ops, l) ? 1.0 : std::cos(std::sqrt(l) * t); });
  return s;
}

double wave_energy(const OperatorBundle& ops, std::size_t k, const WaveState& state) {
  return state.velocity.squaredNorm() + state.u.dot(ops.blocks[k] * state.u);
}

DiracEigen dirac_eigen(const OperatorBundle& ops) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(ops.dirac);
  DiracEigen de;
  de.values = solver.eigenvalues();
  de.vectors = solver.eigenvectors();
  de.tolerance = std::sqrt(ops.kernel_tolerance());
  return de;
}

Eigen::VectorXcd psi_from_wave(const DiracEigen& de, const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
  Eigen::VectorXd coeff = de.vectors.transpose() * v;
  for (Eigen::Index i = 0; i < coeff.size(); ++i)
    coeff(i) = std::abs(de.values(i)) < de.tolerance ? 0.0 : coeff(i) / de.values(i);
  const Eigen::VectorXd dinv_v = de.vectors * coeff;
  return u.cast<std::complex<double>>() + std::complex<double>(0, 1) * dinv_v.cast<std::complex<double>>();
}

Eigen::VectorXcd schrodinger_evolve(const DiracEigen& de, const Eigen::VectorXcd& psi0, double t) {
  const Eigen::MatrixXcd vecs = de.vectors.cast<std::complex<double>>();
  Eigen::VectorXcd coeff = vecs.adjoint() * psi0;
  for (Eigen::Index i = 0; i < coeff.size(); ++i) coeff(i) *= std::exp(std::complex<double>(0, -de.values(i) * t));
  return vecs * coeff;
}

PoissonResult poisson_solve(const OperatorBundle& ops, std::size_t k, const Eigen::VectorXd& g) {
  require_degree(ops, k, g);
  PoissonResult r;
  r.removed = harmonic_part(ops, k, g);
  r.u = spectral_apply(ops, k, g, [&](double l) { return in_kernel(ops, l) ? 0.0 : 1.0 / l; });
  r.residual = (ops.blocks[k] * r.u - (g - r.removed)).norm();
  return r;
}

MaxwellResult maxwell_solve(const OperatorBundle& ops, const Eigen::VectorXd& current) {
  if (ops.degrees() < 2) throw std::invalid_argument("Maxwell needs 1-forms");
  require_degree(ops, 1, current);
  MaxwellResult r;
  const Eigen::MatrixXd d0 = derivative_block(ops, 0);
  const Eigen::MatrixXd d1 = derivative_block(ops, 1);
  r.removed_harmonic = harmonic_part(ops, 1, current);
  // Gradient part d0 L0^+ d0^T j.
  const Eigen::VectorXd div = d0.transpose() * current;
  r.removed_gradient = d0 * poisson_solve(ops, 0, div).u;
  const Eigen::VectorXd conserved = current - r.removed_harmonic - r.removed_gradient;
  r.potential = poisson_solve(ops, 1, conserved).u;
  // Coulomb gauge: drop any residual gradient component of A.
  r.potential -= d0 * poisson_solve(ops, 0, d0.transpose() * r.potential).u;
  r.field = d1.rows() > 0 ? Eigen::VectorXd(d1 * r.potential) : Eigen::VectorXd::Zero(0);
  if (ops.degrees() > 3 && r.field.size() > 0) r.field_closed_norm = (derivative_block(ops, 2) * r.field).norm();
  const Eigen::VectorXd codiff = d1.rows() > 0 ? Eigen::VectorXd(d1.transpose() * r.field)
                                               : Eigen::VectorXd::Zero(current.size());
  r.residual = (codiff - conserved).norm();
  r.coulomb_norm = (d0.transpose() * r.potential).norm();
  return r;
}

GravityResult gravity_solve(const OperatorBundle& ops, const Eigen::VectorXd& density) {
  require_degree(ops, 0, density);
  GravityResult r;
  const auto p = poisson_solve(ops, 0, density);
  r.potential = p.u;
  r.removed = p.removed;
  const Eigen::MatrixXd d0 = derivative_block(ops, 0);
  r.field = d0 * r.potential;
  r.residual = (d0.transpose() * r.field - (density - r.removed)).norm();
  return r;
}

ShootResult hopf_rynov_shoot(const OperatorBundle& ops, Vertex x, Vertex y, double time) {
  if (ops.degrees() == 0) throw std::invalid_argument("empty complex");
  const std::size_t n = ops.offsets[1];
  if (x >= n || y >= n) throw std::out_of_range("shoot endpoints out of range");
  if (time <= 0) throw std::invalid_argument("shoot time must be positive");
  const auto& vecs = ops.eigenvectors[0];
  const auto& vals = ops.eigenvalues[0];
  Eigen::VectorXd coeff(vals.size());
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    const double ax = vecs(idx(x), i), ay = vecs(idx(y), i);
    if (in_kernel(ops, vals(i))) {
      coeff(i) = (ay - ax) / time;
      continue;
    }
    const double w = std::sqrt(vals(i));
    const double s = std::sin(w * time);
    if (std::abs(s) < 1e-8) {
      std::ostringstream msg;
      msg << "sin(sqrt(lambda) T) vanishes for lambda = " << vals(i) << "; retry with a perturbed T";
      throw ResonanceError(msg.str(), vals(i));
    }
    coeff(i) = w * (ay - std::cos(w * time) * ax) / s;
  }
  ShootResult r;
  r.velocity = vecs * coeff;
  Eigen::VectorXd ex = Eigen::VectorXd::Zero(idx(n)), ey = Eigen::VectorXd::Zero(idx(n));
  ex(idx(x)) = 1.0;
  ey(idx(y)) = 1.0;
  r.replay_error = (wave_evolve(ops, 0, ex, r.velocity, time).u - ey).norm();
  return r;
}

namespace {

// Degree of each basis index.
std::vector<std::size_t> degree_map(const OperatorBundle& ops) {
  std::vector<std::size_t> deg(ops.size());
  for (std::size_t k = 0; k < ops.degrees(); ++k)
    for (std::size_t i = ops.offsets[k]; i < ops.offsets[k + 1]; ++i) deg[i] = k;
  return deg;
}

Eigen::MatrixXd split_b(const Eigen::MatrixXd& d, const std::vector<std::size_t>& deg) {
  Eigen::MatrixXd lower = Eigen::MatrixXd::Zero(d.rows(), d.cols());
  for (Eigen::Index i = 0; i < d.rows(); ++i)
    for (Eigen::Index j = 0; j < d.cols(); ++j)
      if (deg[static_cast<std::size_t>(i)] > deg[static_cast<std::size_t>(j)]) lower(i, j) = d(i, j);
  return lower - lower.transpose();
}

Eigen::MatrixXd toda_rhs(const Eigen::MatrixXd& d, const std::vector<std::size_t>& deg) {
  const Eigen::MatrixXd b = split_b(d, deg);
  return b * d - d * b;
}

DeformationSample sample(const Eigen::MatrixXd& d, const Eigen::MatrixXd& d0sq, const Eigen::VectorXd& initial,
                         const std::vector<std::size_t>& deg, double t) {
  DeformationSample s{};
  s.time = t;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(d, Eigen::EigenvaluesOnly);
  s.spectral_drift = initial.size() ? (solver.eigenvalues() - initial).cwiseAbs().maxCoeff() : 0.0;
  double off = 0.0, diag = 0.0;
  for (Eigen::Index i = 0; i < d.rows(); ++i)
    for (Eigen::Index j = 0; j < d.cols(); ++j)
      (deg[static_cast<std::size_t>(i)] == deg[static_cast<std::size_t>(j)] ? diag : off) += d(i, j) * d(i, j);
  s.off_block_norm = std::sqrt(off);
  s.diagonal_norm = std::sqrt(diag);
  s.laplacian_drift = (d * d - d0sq).norm();
  return s;
}

}  // namespace

DeformationState toda_lax_deform(const OperatorBundle& ops, double t_end, double dt, std::size_t sample_every) {
  if (dt <= 0) throw std::invalid_argument("dt must be positive");
  if (sample_every == 0) sample_every = 1;
  const auto deg = degree_map(ops);
  DeformationState st;
  st.dirac = ops.dirac;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(ops.dirac, Eigen::EigenvaluesOnly);
  st.initial_spectrum = solver.eigenvalues();
  const Eigen::MatrixXd d0sq = ops.dirac * ops.dirac;
  st.samples.push_back(sample(st.dirac, d0sq, st.initial_spectrum, deg, 0.0));
  const auto steps = static_cast<std::size_t>(std::llround(t_end / dt));
  for (std::size_t step = 1; step <= steps; ++step) {
    const Eigen::MatrixXd& d = st.dirac;
    const Eigen::MatrixXd k1 = toda_rhs(d, deg);
    const Eigen::MatrixXd k2 = toda_rhs(d + 0.5 * dt * k1, deg);
    const Eigen::MatrixXd k3 = toda_rhs(d + 0.5 * dt * k2, deg);
    const Eigen::MatrixXd k4 = toda_rhs(d + dt * k3, deg);
    Eigen::MatrixXd next = d + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    st.dirac = 0.5 * (next + next.transpose());
    st.time = static_cast<double>(step) * dt;
    if (step % sample_every == 0 || step == steps) {
      const auto s = sample(st.dirac, d0sq, st.initial_spectrum, deg, st.time);
      st.max_drift = std::max(st.max_drift, s.spectral_drift);
      st.samples.push_back(s);
      if (s.spectral_drift > 1e-3) {
        std::ostringstream msg;
        msg << "spectral drift " << s.spectral_drift << " at t = " << st.time << " with dt = " << dt
            << "; reduce the step size";
        throw DeformationError(msg.str());
      }
    }
  }
  return st;
}

std::string deformation_csv(const DeformationState& state) {
  std::ostringstream out;
  out.precision(12);
  out << "time,spectral_drift,off_block_norm,diagonal_norm,laplacian_drift\n";
  for (const auto& s : state.samples)
    out << s.time << ',' << s.spectral_drift << ',' << s.off_block_norm << ',' << s.diagonal_norm << ','
        << s.laplacian_drift << '\n';
  return out.str();
}

}  // namespace gcalc
