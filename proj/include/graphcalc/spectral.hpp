// Dirac and form-Laplacian operators, Betti numbers (Hodge kernel and exact
// rank), heat supertrace, tree/forest counts, Cauchy-Binet sums and the
// Dirac zeta function.
#pragma once

#include "graphcalc/complex.hpp"

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace gcalc {

inline constexpr std::size_t kMaxDenseOperator = 2000;

struct OperatorBundle {
  /// offsets[k] is the first basis index of k-forms; offsets.back() == N.
  std::vector<std::size_t> offsets;
  Eigen::MatrixXd dirac;
  /// Exact integer blocks L_k = d_{k-1} d_{k-1}^T + d_k^T d_k.
  std::vector<IntMatrix> exact_blocks;
  std::vector<Eigen::MatrixXd> blocks;
  std::vector<Eigen::VectorXd> eigenvalues;   // ascending per block
  std::vector<Eigen::MatrixXd> eigenvectors;  // columns match eigenvalues
  double spectral_radius = 0.0;

  std::size_t size() const { return offsets.empty() ? 0 : offsets.back(); }
  std::size_t degrees() const { return blocks.size(); }
  /// Eigenvalues below 1e-9 * (1 + spectral radius) count as zero.
  double kernel_tolerance() const { return 1e-9 * (1.0 + spectral_radius); }
  /// Orthonormal basis (columns) of ker L_k.
  Eigen::MatrixXd harmonic_basis(std::size_t k) const;
};

/// Assembles D from the d_k blocks and L block-by-block in exact integer
/// arithmetic; throws std::logic_error if a degree-coupling block of D^2 is
/// nonzero, ResourceError if N exceeds kMaxDenseOperator.
OperatorBundle dirac_and_laplacian(const SimplicialStructure& s);

struct BettiResult {
  std::vector<std::size_t> betti;
  /// Set when some block's smallest nonzero eigenvalue is within 10x of the
  /// kernel tolerance.
  bool ill_separated = false;
};

BettiResult betti_hodge(const OperatorBundle& ops);
BettiResult betti_hodge(const SimplicialStructure& s);
/// b_k = v_k - rank d_k - rank d_{k-1}, ranks over the rationals.
std::vector<std::size_t> betti_rank_oracle(const SimplicialStructure& s);
std::vector<std::size_t> betti_rank_oracle(const Graph& g);

/// sum_k (-1)^k tr exp(-t L_k).
double mckean_singer_supertrace(const OperatorBundle& ops, double t);

/// Product of eigenvalues with |lambda| above the scale-free kernel tolerance.
double pseudo_determinant(const Eigen::MatrixXd& symmetric);

/// Graph Laplacian L_0 = D - A as an integer matrix.
IntMatrix graph_laplacian(const Graph& g);

struct TreeCount {
  BigInt count;             // cofactor of L_0 (0 when disconnected)
  bool connected = true;
  double damped_estimate;   // det(P + L_0)/n with P_ij = 1/n
};
TreeCount spanning_tree_count(const Graph& g);
/// Brute force over all (n-1)-edge subsets; refuses n > 8.
BigInt spanning_tree_count_exhaustive(const Graph& g);

/// det(I + L_0) over big integers.
BigInt rooted_forest_count(const Graph& g);
/// Brute force over all acyclic edge subsets weighted by the product of
/// component sizes (root choices); refuses n > 6.
BigInt rooted_forest_count_exhaustive(const Graph& g);

struct CauchyBinetSides {
  Rational determinant_side;  // det(I + x F^T G)
  Rational minor_side;        // sum_P x^|P| det(F_P) det(G_P)
};
/// F and G are n x m with n, m <= 6. Throws std::invalid_argument on a shape
/// mismatch.
CauchyBinetSides cauchy_binet_sum(const IntMatrix& f, const IntMatrix& g, const Rational& x);
/// Integer fast path used for exhaustive sweeps; same contract as above.
struct IntCauchyBinetSides {
  std::int64_t determinant_side;
  std::int64_t minor_side;
};
IntCauchyBinetSides cauchy_binet_sum_int(const IntMatrix& f, const IntMatrix& g, std::int64_t x);

/// Sorted eigenvalues of the full Dirac matrix.
Eigen::VectorXd dirac_spectrum(const OperatorBundle& ops);
/// Strictly positive Dirac eigenvalues (above the kernel tolerance).
std::vector<double> positive_dirac_eigenvalues(const OperatorBundle& ops);

/// zeta(s) = sum over positive Dirac eigenvalues of lambda^{-s}.
std::complex<double> zeta(const std::vector<double>& positive_eigenvalues, std::complex<double> s);
std::complex<double> zeta_derivative(const std::vector<double>& positive_eigenvalues, std::complex<double> s);

struct Window {
  double re_min = 0.0, re_max = 1.0, im_min = 0.0, im_max = 30.0;
};
/// Roots of zeta in the window: grid (spacing 0.05) local minima of |zeta|
/// seed Newton iterations; only roots with |zeta| < 1e-8 inside the window
/// are returned, deduplicated, sorted by imaginary part.
std::vector<std::complex<double>> zeta_roots(const std::vector<double>& positive_eigenvalues, const Window& window,
                                             double grid_spacing = 0.05);
/// Roots for the cycle graph C_n.
std::vector<std::complex<double>> cycle_zeta_roots(std::size_t n, const Window& window);

/// "block,index,eigenvalue" lines for every L_k.
std::string spectrum_csv(const OperatorBundle& ops);

}  // namespace gcalc
