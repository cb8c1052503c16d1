#include "graphcalc/complex.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace gcalc {

IntMatrix SignedIncidence::to_dense() const {
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (const auto& e : row_entries[r]) m(r, e.col) = e.sign;
  return m;
}

std::string SignedIncidence::to_triplets() const {
  std::string out;
  for (std::size_t r = 0; r < rows; ++r)
    for (const auto& e : row_entries[r])
      out += std::to_string(r) + " " + std::to_string(e.col) + " " + std::to_string(e.sign) + "\n";
  return out;
}

namespace {

// Calls visit(clique) for every clique in lexicographic DFS order. The
// candidate set always holds common neighbors larger than the last vertex.
void enumerate_cliques(const Graph& g, std::optional<std::size_t> max_dim, std::size_t budget,
                       const std::function<void(const std::vector<Vertex>&)>& visit) {
  std::vector<Vertex> clique;
  std::size_t seen = 0;
  std::function<void(const VertexSet&)> extend = [&](const VertexSet& candidates) {
    if (++seen > budget)
      throw ResourceError("simplex budget of " + std::to_string(budget) + " exceeded while enumerating dimension " +
                          std::to_string(clique.size() - 1));
    visit(clique);
    if (max_dim && clique.size() > *max_dim) return;
    for (auto w = candidates.find_first(); w != VertexSet::npos; w = candidates.find_next(w)) {
      VertexSet next = candidates & g.neighborhood(static_cast<Vertex>(w));
      // Drop everything up to and including w.
      for (auto u = next.find_first(); u != VertexSet::npos && u <= w; u = next.find_next(u)) next.reset(u);
      clique.push_back(static_cast<Vertex>(w));
      extend(next);
      clique.pop_back();
    }
  };
  for (Vertex v = 0; v < g.order(); ++v) {
    VertexSet candidates = g.neighborhood(v);
    for (auto u = candidates.find_first(); u != VertexSet::npos && u <= v; u = candidates.find_next(u))
      candidates.reset(u);
    clique.assign(1, v);
    extend(candidates);
  }
}

}  // namespace

std::vector<std::size_t> clique_counts(const Graph& g, std::optional<std::size_t> max_dim, std::size_t budget) {
  std::vector<std::size_t> counts;
  enumerate_cliques(g, max_dim, budget, [&](const std::vector<Vertex>& c) {
    if (counts.size() < c.size()) counts.resize(c.size(), 0);
    ++counts[c.size() - 1];
  });
  return counts;
}

SimplicialStructure SimplicialStructure::whitney(const Graph& g, std::optional<std::size_t> max_dim,
                                                 std::size_t budget) {
  SimplicialStructure s;
  s.graph_ = g;
  enumerate_cliques(g, max_dim, budget, [&](const std::vector<Vertex>& c) {
    if (s.simplices_.size() < c.size()) s.simplices_.resize(c.size());
    auto& bucket = s.simplices_[c.size() - 1];
    bucket.insert(bucket.end(), c.begin(), c.end());
  });

  const std::size_t dims = s.simplices_.size();
  s.derivatives_.resize(dims);
  std::vector<Vertex> face;
  for (std::size_t k = 0; k < dims; ++k) {
    auto& d = s.derivatives_[k];
    d.rows = s.count(k + 1);
    d.cols = s.count(k);
    d.row_entries.resize(d.rows);
    for (std::size_t r = 0; r < d.rows; ++r) {
      const auto simplex = s.simplex(k + 1, r);
      for (std::size_t i = 0; i <= k + 1; ++i) {
        face.clear();
        for (std::size_t j = 0; j <= k + 1; ++j)
          if (j != i) face.push_back(simplex[j]);
        const auto col = s.index_of(face);
        if (!col) throw std::logic_error("whitney: missing face");
        d.row_entries[r].push_back({*col, (i % 2 == 0) ? 1 : -1});
      }
      std::sort(d.row_entries[r].begin(), d.row_entries[r].end(),
                [](const auto& a, const auto& b) { return a.col < b.col; });
    }
  }
  return s;
}

std::vector<std::size_t> SimplicialStructure::f_vector() const {
  std::vector<std::size_t> f(dimensions());
  for (std::size_t k = 0; k < f.size(); ++k) f[k] = count(k);
  return f;
}

std::size_t SimplicialStructure::total() const {
  std::size_t t = 0;
  for (std::size_t k = 0; k < dimensions(); ++k) t += count(k);
  return t;
}

std::optional<std::size_t> SimplicialStructure::index_of(std::span<const Vertex> sorted) const {
  if (sorted.empty() || sorted.size() > simplices_.size()) return std::nullopt;
  const std::size_t k = sorted.size() - 1;
  std::size_t lo = 0, hi = count(k);
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    const auto probe = simplex(k, mid);
    if (std::lexicographical_compare(probe.begin(), probe.end(), sorted.begin(), sorted.end()))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < count(k) && std::ranges::equal(simplex(k, lo), sorted)) return lo;
  return std::nullopt;
}

const SignedIncidence& SimplicialStructure::derivative(std::size_t k) const {
  if (k < derivatives_.size()) return derivatives_[k];
  return empty_;
}

SignedIncidence exterior_derivative(const SimplicialStructure& s, std::size_t k) {
  if (k < s.dimensions()) return s.derivative(k);
  SignedIncidence d;
  d.rows = 0;
  d.cols = s.count(k);
  return d;
}

std::int64_t euler_characteristic(const SimplicialStructure& s) {
  std::int64_t chi = 0;
  for (std::size_t k = 0; k < s.dimensions(); ++k)
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(s.count(k));
  return chi;
}

std::int64_t euler_characteristic(const Graph& g) {
  const auto f = clique_counts(g);
  std::int64_t chi = 0;
  for (std::size_t k = 0; k < f.size(); ++k) chi += (k % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(f[k]);
  return chi;
}

Form zero_form(const SimplicialStructure& s, std::size_t k) { return {k, std::vector<Rational>(s.count(k))}; }

Form apply_derivative(const SimplicialStructure& s, const Form& f) {
  if (f.values.size() != s.count(f.degree)) throw std::invalid_argument("apply_derivative: form length mismatch");
  Form out = zero_form(s, f.degree + 1);
  const auto& d = s.derivative(f.degree);
  for (std::size_t r = 0; r < d.rows; ++r)
    for (const auto& e : d.row_entries[r]) out.values[r] += e.sign * f.values[e.col];
  return out;
}

Chain boundary(const SimplicialStructure& s, const Chain& c) {
  if (c.degree == 0) throw std::invalid_argument("boundary of a 0-chain");
  if (c.coefficients.size() != s.count(c.degree)) throw std::invalid_argument("boundary: chain length mismatch");
  Chain out{c.degree - 1, std::vector<std::int64_t>(s.count(c.degree - 1), 0)};
  const auto& d = s.derivative(c.degree - 1);
  for (std::size_t r = 0; r < d.rows; ++r)
    for (const auto& e : d.row_entries[r]) out.coefficients[e.col] += e.sign * c.coefficients[r];
  return out;
}

StokesSides stokes_pairing(const SimplicialStructure& s, const Chain& c, const Form& f) {
  if (c.degree != f.degree + 1)
    throw std::invalid_argument("stokes_pairing: chain degree must be form degree + 1");
  const Form df = apply_derivative(s, f);
  const Chain dc = boundary(s, c);
  StokesSides out;
  for (std::size_t i = 0; i < c.coefficients.size(); ++i) out.lhs += c.coefficients[i] * df.values[i];
  for (std::size_t i = 0; i < dc.coefficients.size(); ++i) out.rhs += dc.coefficients[i] * f.values[i];
  return out;
}

Form cup_product(const SimplicialStructure& s, const Form& f, const Form& g) {
  const std::size_t p = f.degree, q = g.degree, k = p + q;
  if (f.values.size() != s.count(p) || g.values.size() != s.count(q))
    throw std::invalid_argument("cup_product: form length mismatch");
  Form out = zero_form(s, k);
  for (std::size_t i = 0; i < s.count(k); ++i) {
    const auto x = s.simplex(k, i);
    const auto front = s.index_of(x.subspan(0, p + 1));
    const auto back = s.index_of(x.subspan(p, q + 1));
    out.values[i] = f.values[*front] * g.values[*back];
  }
  return out;
}

Form operator+(const Form& a, const Form& b) {
  if (a.degree != b.degree || a.values.size() != b.values.size()) throw std::invalid_argument("form sum mismatch");
  Form out = a;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += b.values[i];
  return out;
}

Form operator*(const Rational& c, const Form& a) {
  Form out = a;
  for (auto& v : out.values) v *= c;
  return out;
}

bool is_zero(const Form& f) {
  return std::all_of(f.values.begin(), f.values.end(), [](const Rational& v) { return v == 0; });
}

}  // namespace gcalc
