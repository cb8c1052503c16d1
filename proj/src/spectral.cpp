#include "graphcalc/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gcalc {

namespace {

// Column view of a signed incidence: for each column, the (row, sign) pairs.
std::vector<std::vector<std::pair<std::size_t, int>>> columns_of(const SignedIncidence& d) {
  std::vector<std::vector<std::pair<std::size_t, int>>> cols(d.cols);
  for (std::size_t r = 0; r < d.rows; ++r)
    for (const auto& e : d.row_entries[r]) cols[e.col].emplace_back(r, e.sign);
  return cols;
}

// d_{k+1} d_k must vanish: composing face maps twice cancels in pairs.
bool composition_vanishes(const SignedIncidence& outer, const SignedIncidence& inner) {
  std::map<std::size_t, std::int64_t> acc;
  for (std::size_t r = 0; r < outer.rows; ++r) {
    acc.clear();
    for (const auto& face : outer.row_entries[r])
      for (const auto& e : inner.row_entries[face.col]) acc[e.col] += face.sign * e.sign;
    for (const auto& [col, v] : acc)
      if (v != 0) return false;
  }
  return true;
}

}  // namespace

Eigen::MatrixXd OperatorBundle::harmonic_basis(std::size_t k) const {
  const double tol = kernel_tolerance();
  std::vector<Eigen::Index> kernel;
  for (Eigen::Index i = 0; i < eigenvalues[k].size(); ++i)
    if (eigenvalues[k](i) < tol) kernel.push_back(i);
  Eigen::MatrixXd basis(eigenvectors[k].rows(), static_cast<Eigen::Index>(kernel.size()));
  for (std::size_t j = 0; j < kernel.size(); ++j) basis.col(static_cast<Eigen::Index>(j)) = eigenvectors[k].col(kernel[j]);
  return basis;
}

OperatorBundle dirac_and_laplacian(const SimplicialStructure& s) {
  OperatorBundle ops;
  const std::size_t dims = s.dimensions();
  ops.offsets.assign(dims + 1, 0);
  for (std::size_t k = 0; k < dims; ++k) ops.offsets[k + 1] = ops.offsets[k] + s.count(k);
  const std::size_t n = ops.size();
  if (n > kMaxDenseOperator)
    throw ResourceError("operator size " + std::to_string(n) + " exceeds dense limit " +
                        std::to_string(kMaxDenseOperator));

  ops.dirac = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t k = 0; k + 1 < dims; ++k) {
    const auto& d = s.derivative(k);
    for (std::size_t r = 0; r < d.rows; ++r)
      for (const auto& e : d.row_entries[r]) {
        const auto row = static_cast<Eigen::Index>(ops.offsets[k + 1] + r);
        const auto col = static_cast<Eigen::Index>(ops.offsets[k] + e.col);
        ops.dirac(row, col) = e.sign;
        ops.dirac(col, row) = e.sign;
      }
  }

  for (std::size_t k = 0; k + 2 < dims; ++k)
    if (!composition_vanishes(s.derivative(k + 1), s.derivative(k)))
      throw std::logic_error("D^2 couples degrees " + std::to_string(k) + " and " + std::to_string(k + 2));

  for (std::size_t k = 0; k < dims; ++k) {
    const std::size_t v = s.count(k);
    IntMatrix block(v, v);
    // d_k^T d_k
    for (const auto& row : s.derivative(k).row_entries)
      for (const auto& a : row)
        for (const auto& b : row) block(a.col, b.col) += a.sign * b.sign;
    // d_{k-1} d_{k-1}^T
    if (k > 0)
      for (const auto& col : columns_of(s.derivative(k - 1)))
        for (const auto& [ra, sa] : col)
          for (const auto& [rb, sb] : col) block(ra, rb) += sa * sb;
    Eigen::MatrixXd dense(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(v));
    for (std::size_t i = 0; i < v; ++i)
      for (std::size_t j = 0; j < v; ++j) dense(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = static_cast<double>(block(i, j));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense);
    ops.eigenvalues.push_back(solver.eigenvalues());
    ops.eigenvectors.push_back(solver.eigenvectors());
    if (v > 0) ops.spectral_radius = std::max(ops.spectral_radius, solver.eigenvalues().maxCoeff());
    ops.exact_blocks.push_back(std::move(block));
    ops.blocks.push_back(std::move(dense));
  }
  return ops;
}

BettiResult betti_hodge(const OperatorBundle& ops) {
  BettiResult out;
  const double tol = ops.kernel_tolerance();
  for (const auto& ev : ops.eigenvalues) {
    std::size_t zeros = 0;
    double smallest_nonzero = INFINITY;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
      if (ev(i) < tol)
        ++zeros;
      else
        smallest_nonzero = std::min(smallest_nonzero, ev(i));
    }
    if (smallest_nonzero < 10.0 * tol) out.ill_separated = true;
    out.betti.push_back(zeros);
  }
  return out;
}

BettiResult betti_hodge(const SimplicialStructure& s) { return betti_hodge(dirac_and_laplacian(s)); }

std::vector<std::size_t> betti_rank_oracle(const SimplicialStructure& s) {
  const std::size_t dims = s.dimensions();
  std::vector<std::size_t> ranks(dims);
  for (std::size_t k = 0; k < dims; ++k) ranks[k] = exact_rank(s.derivative(k).to_dense());
  std::vector<std::size_t> betti(dims);
  for (std::size_t k = 0; k < dims; ++k) betti[k] = s.count(k) - ranks[k] - (k > 0 ? ranks[k - 1] : 0);
  return betti;
}

std::vector<std::size_t> betti_rank_oracle(const Graph& g) {
  return betti_rank_oracle(SimplicialStructure::whitney(g));
}

double mckean_singer_supertrace(const OperatorBundle& ops, double t) {
  double str = 0.0;
  for (std::size_t k = 0; k < ops.degrees(); ++k) {
    const double tr = (-t * ops.eigenvalues[k].array()).exp().sum();
    str += (k % 2 == 0) ? tr : -tr;
  }
  return str;
}

double pseudo_determinant(const Eigen::MatrixXd& symmetric) {
  if (symmetric.size() == 0) return 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(symmetric, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  const double tol = 1e-9 * (1.0 + ev.cwiseAbs().maxCoeff());
  double det = 1.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (std::abs(ev(i)) > tol) det *= ev(i);
  return det;
}

IntMatrix graph_laplacian(const Graph& g) {
  const std::size_t n = g.order();
  IntMatrix l(n, n);
  for (auto [u, v] : g.edges()) {
    l(u, v) = -1;
    l(v, u) = -1;
    ++l(u, u);
    ++l(v, v);
  }
  return l;
}

TreeCount spanning_tree_count(const Graph& g) {
  const std::size_t n = g.order();
  TreeCount out{0, n > 0 && is_connected(g), 0.0};
  if (n == 0) return out;
  const IntMatrix l = graph_laplacian(g);
  IntMatrix minor(n - 1, n - 1);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) minor(i - 1, j - 1) = l(i, j);
  out.count = out.connected ? bareiss_determinant(minor) : BigInt(0);

  Eigen::MatrixXd damped(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      damped(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = static_cast<double>(l(i, j)) + 1.0 / static_cast<double>(n);
  out.damped_estimate = damped.determinant() / static_cast<double>(n);
  return out;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent, size;
  explicit UnionFind(std::size_t n) : parent(n), size(n, 1) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
    return true;
  }
};

}  // namespace

BigInt spanning_tree_count_exhaustive(const Graph& g) {
  const std::size_t n = g.order();
  if (n > 8) throw ResourceError("exhaustive spanning tree enumeration limited to 8 vertices");
  if (n == 0) return 0;
  const auto& edges = g.edges();
  const std::size_t m = edges.size(), k = n - 1;
  if (m < k) return 0;
  BigInt total = 0;
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    UnionFind uf(n);
    bool acyclic = true;
    for (auto e : pick)
      if (!uf.unite(edges[e].first, edges[e].second)) {
        acyclic = false;
        break;
      }
    if (acyclic) ++total;
    // Next k-combination of m.
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == m - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return total;
}

BigInt rooted_forest_count(const Graph& g) {
  IntMatrix l = graph_laplacian(g);
  for (std::size_t i = 0; i < l.rows(); ++i) ++l(i, i);
  return bareiss_determinant(l);
}

BigInt rooted_forest_count_exhaustive(const Graph& g) {
  const std::size_t n = g.order();
  if (n > 6) throw ResourceError("exhaustive rooted forest enumeration limited to 6 vertices");
  const auto& edges = g.edges();
  const std::size_t m = edges.size();
  BigInt total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    UnionFind uf(n);
    bool acyclic = true;
    for (std::size_t e = 0; e < m && acyclic; ++e)
      if (mask >> e & 1U) acyclic = uf.unite(edges[e].first, edges[e].second);
    if (!acyclic) continue;
    BigInt roots = 1;
    for (std::size_t v = 0; v < n; ++v)
      if (uf.find(v) == v) roots *= uf.size[v];
    total += roots;
  }
  return total;
}

namespace {

template <typename T, typename Det>
std::pair<T, T> cauchy_binet_impl(const IntMatrix& f, const IntMatrix& g, const T& x, Det det) {
  if (f.rows() != g.rows() || f.cols() != g.cols())
    throw std::invalid_argument("cauchy_binet_sum: F and G must have the same shape");
  const std::size_t n = f.rows(), m = f.cols();
  if (n > 6 || m > 6) throw std::invalid_argument("cauchy_binet_sum: minors enumerated only up to 6x6");

  // det(I + x F^T G)
  std::vector<std::vector<T>> lhs(m, std::vector<T>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      T acc = 0;
      for (std::size_t r = 0; r < n; ++r) acc += T(f(r, i) * g(r, j));
      lhs[i][j] = x * acc + T(i == j ? 1 : 0);
    }
  const T determinant_side = det(lhs);

  T minor_side = 0;
  for (std::uint32_t rows = 0; rows < (1U << n); ++rows)
    for (std::uint32_t cols = 0; cols < (1U << m); ++cols) {
      const int k = std::popcount(rows);
      if (k != std::popcount(cols)) continue;
      std::vector<std::vector<T>> fp(k, std::vector<T>(k)), gp(k, std::vector<T>(k));
      int a = 0;
      for (std::size_t r = 0; r < n; ++r) {
        if (!(rows >> r & 1U)) continue;
        int b = 0;
        for (std::size_t c = 0; c < m; ++c) {
          if (!(cols >> c & 1U)) continue;
          fp[a][b] = f(r, c);
          gp[a][b] = g(r, c);
          ++b;
        }
        ++a;
      }
      T term = det(fp) * det(gp);
      for (int i = 0; i < k; ++i) term *= x;
      minor_side += term;
    }
  return {determinant_side, minor_side};
}

std::int64_t int_det(const std::vector<std::vector<std::int64_t>>& rows) {
  IntMatrix m(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  return small_determinant(m);
}

}  // namespace

CauchyBinetSides cauchy_binet_sum(const IntMatrix& f, const IntMatrix& g, const Rational& x) {
  auto [lhs, rhs] = cauchy_binet_impl<Rational>(f, g, x, [](std::vector<std::vector<Rational>> m) {
    return rational_determinant(std::move(m));
  });
  return {lhs, rhs};
}

IntCauchyBinetSides cauchy_binet_sum_int(const IntMatrix& f, const IntMatrix& g, std::int64_t x) {
  auto [lhs, rhs] = cauchy_binet_impl<std::int64_t>(f, g, x, int_det);
  return {lhs, rhs};
}

Eigen::VectorXd dirac_spectrum(const OperatorBundle& ops) {
  if (ops.size() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(ops.dirac, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

std::vector<double> positive_dirac_eigenvalues(const OperatorBundle& ops) {
  const auto spectrum = dirac_spectrum(ops);
  // D^2 = L, so a Dirac eigenvalue is zero when its square is below the L tolerance.
  const double tol = std::sqrt(ops.kernel_tolerance());
  std::vector<double> out;
  for (Eigen::Index i = 0; i < spectrum.size(); ++i)
    if (spectrum(i) > tol) out.push_back(spectrum(i));
  return out;
}

std::complex<double> zeta(const std::vector<double>& positive_eigenvalues, std::complex<double> s) {
  std::complex<double> sum = 0.0;
  for (double lambda : positive_eigenvalues) sum += std::exp(-s * std::log(lambda));
  return sum;
}

std::complex<double> zeta_derivative(const std::vector<double>& positive_eigenvalues, std::complex<double> s) {
  std::complex<double> sum = 0.0;
  for (double lambda : positive_eigenvalues) {
    const double log_lambda = std::log(lambda);
    sum -= log_lambda * std::exp(-s * log_lambda);
  }
  return sum;
}

std::vector<std::complex<double>> zeta_roots(const std::vector<double>& positive_eigenvalues, const Window& window,
                                             double grid_spacing) {
  const auto cols = static_cast<std::size_t>(std::llround((window.re_max - window.re_min) / grid_spacing)) + 1;
  const auto rows = static_cast<std::size_t>(std::llround((window.im_max - window.im_min) / grid_spacing)) + 1;
  std::vector<double> magnitude(rows * cols);
  auto point = [&](std::size_t i, std::size_t j) {
    return std::complex<double>(window.re_min + static_cast<double>(j) * grid_spacing,
                                window.im_min + static_cast<double>(i) * grid_spacing);
  };
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) magnitude[i * cols + j] = std::abs(zeta(positive_eigenvalues, point(i, j)));

  constexpr double kAccept = 1e-8;
  std::vector<std::complex<double>> roots;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      const double here = magnitude[i * cols + j];
      bool local_min = true;
      for (int di = -1; di <= 1 && local_min; ++di)
        for (int dj = -1; dj <= 1; ++dj) {
          if (di == 0 && dj == 0) continue;
          const auto ii = static_cast<std::ptrdiff_t>(i) + di, jj = static_cast<std::ptrdiff_t>(j) + dj;
          if (ii < 0 || jj < 0 || ii >= static_cast<std::ptrdiff_t>(rows) || jj >= static_cast<std::ptrdiff_t>(cols)) continue;
          if (magnitude[static_cast<std::size_t>(ii) * cols + static_cast<std::size_t>(jj)] < here) {
            local_min = false;
            break;
          }
        }
      if (!local_min) continue;

      std::complex<double> s = point(i, j);
      for (int iter = 0; iter < 60; ++iter) {
        const auto value = zeta(positive_eigenvalues, s);
        if (std::abs(value) < 1e-14) break;
        const auto slope = zeta_derivative(positive_eigenvalues, s);
        if (std::abs(slope) == 0.0) break;
        const auto step = value / slope;
        s -= step;
        if (std::abs(step) < 1e-15 * (1.0 + std::abs(s))) break;
      }
      if (!(std::abs(zeta(positive_eigenvalues, s)) < kAccept)) continue;
      if (s.real() < window.re_min || s.real() > window.re_max || s.imag() < window.im_min || s.imag() > window.im_max)
        continue;
      const bool duplicate = std::any_of(roots.begin(), roots.end(), [&](auto r) { return std::abs(r - s) < 1e-7; });
      if (!duplicate) roots.push_back(s);
    }
  std::sort(roots.begin(), roots.end(), [](auto a, auto b) { return a.imag() < b.imag(); });
  return roots;
}

std::vector<std::complex<double>> cycle_zeta_roots(std::size_t n, const Window& window) {
  const auto s = SimplicialStructure::whitney(generate::cycle(n));
  return zeta_roots(positive_dirac_eigenvalues(dirac_and_laplacian(s)), window);
}

std::string spectrum_csv(const OperatorBundle& ops) {
  std::ostringstream out;
  out.precision(17);
  out << "block,index,eigenvalue\n";
  for (std::size_t k = 0; k < ops.degrees(); ++k)
    for (Eigen::Index i = 0; i < ops.eigenvalues[k].size(); ++i) out << k << ',' << i << ',' << ops.eigenvalues[k](i) << '\n';
  return out.str();
}

}  // namespace gcalc
