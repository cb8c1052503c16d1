#include "graphcalc/divisors.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace gcalc {

namespace {

void require_connected(const Graph& g) {
  if (g.order() == 0 || !is_connected(g)) throw std::invalid_argument("divisor theory needs a connected graph");
}

void require_size(const Graph& g, const Divisor& d) {
  if (d.size() != g.order()) throw std::invalid_argument("divisor length does not match the vertex count");
}

}  // namespace

std::int64_t degree(const Divisor& d) { return std::accumulate(d.begin(), d.end(), std::int64_t{0}); }

Divisor canonical_divisor(const Graph& g) {
  require_connected(g);
  Divisor k(g.order());
  for (Vertex v = 0; v < g.order(); ++v) k[v] = static_cast<std::int64_t>(g.degree(v)) - 2;
  return k;
}

Divisor fire(const Graph& g, const Divisor& d, const std::vector<std::int64_t>& f) {
  require_size(g, d);
  Divisor out = d;
  for (auto [u, v] : g.edges()) {
    out[u] -= f[u] - f[v];
    out[v] -= f[v] - f[u];
  }
  return out;
}

Reducer::Reducer(const Graph& g, Vertex q) : q_(q) {
  require_connected(g);
  const std::size_t n = g.order();
  adjacency_.resize(n);
  for (Vertex v = 0; v < n; ++v) adjacency_[v] = g.neighbors(v);
  const auto dist = distances_from(g, q);
  up_.assign(n, 0);
  down_.assign(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (layers_.size() <= *dist[v]) layers_.resize(*dist[v] + 1);
    layers_[*dist[v]].push_back(v);
    for (Vertex w : adjacency_[v]) {
      if (*dist[w] + 1 == *dist[v]) ++up_[v];
      if (*dist[w] == *dist[v] + 1) ++down_[v];
    }
  }
}

void Reducer::reduce(Divisor& d) const {
  const std::size_t n = adjacency_.size();
  if (d.size() != n) throw std::invalid_argument("divisor length does not match the vertex count");
  // Make every v != q nonnegative: the set at distance >= k borrows until
  // layer k is nonnegative; only layers k and k-1 change.
  for (std::size_t k = layers_.size(); k-- > 1;) {
    std::int64_t times = 0;
    for (Vertex v : layers_[k])
      if (d[v] < 0) times = std::max(times, (-d[v] + up_[v] - 1) / up_[v]);
    if (times == 0) continue;
    for (Vertex v : layers_[k]) d[v] += times * up_[v];
    for (Vertex w : layers_[k - 1]) d[w] -= times * down_[w];
  }
  // Dhar burning from q; the unburnt set fires as often as it stays legal.
  std::vector<std::int64_t> burnt_neighbors(n);
  std::vector<char> burnt(n);
  std::vector<Vertex> queue;
  for (;;) {
    std::fill(burnt_neighbors.begin(), burnt_neighbors.end(), 0);
    std::fill(burnt.begin(), burnt.end(), 0);
    queue.assign(1, q_);
    burnt[q_] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (Vertex w : adjacency_[queue[head]]) {
        if (burnt[w]) continue;
        if (++burnt_neighbors[w] > d[w]) {
          burnt[w] = 1;
          queue.push_back(w);
        }
      }
    if (queue.size() == n) return;
    std::int64_t times = std::numeric_limits<std::int64_t>::max();
    for (Vertex v = 0; v < n; ++v)
      if (!burnt[v] && burnt_neighbors[v] > 0) times = std::min(times, d[v] / burnt_neighbors[v]);
    for (Vertex v = 0; v < n; ++v) {
      if (burnt[v]) continue;
      d[v] -= times * burnt_neighbors[v];
      for (Vertex w : adjacency_[v])
        if (burnt[w]) d[w] += times;
    }
  }
}

Divisor q_reduce(const Graph& g, const Divisor& d, Vertex q) {
  require_size(g, d);
  Divisor out = d;
  Reducer(g, q).reduce(out);
  return out;
}

bool is_effective_class(const Graph& g, const Divisor& d) {
  if (degree(d) < 0) return false;
  return q_reduce(g, d)[0] >= 0;
}

bool is_effective_class_exhaustive(const Graph& g, const Divisor& d, std::int64_t bound) {
  require_size(g, d);
  if (g.order() > 5) throw ResourceError("exhaustive effectivity search is limited to 5 vertices");
  if (g.order() == 0) return true;
  std::vector<std::int64_t> f(g.order(), 0);
  std::function<bool(std::size_t)> search = [&](std::size_t i) {
    if (i == f.size()) {
      const auto e = fire(g, d, f);
      return std::all_of(e.begin(), e.end(), [](std::int64_t x) { return x >= 0; });
    }
    for (std::int64_t x = -bound; x <= bound; ++x) {
      f[i] = x;
      if (search(i + 1)) return true;
    }
    return false;
  };
  return search(1);
}

std::size_t RankOracle::Hash::operator()(const Divisor& d) const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto x : d) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
  return h;
}

RankOracle::RankOracle(const Graph& g) : g_(g), reducer_(g) {
  if (g.order() > kMaxDivisorVertices)
    throw ResourceError("divisor rank is limited to " + std::to_string(kMaxDivisorVertices) + " vertices");
}

// r(D) = -1 if |D| is empty, else 1 + min_v r(D - e_v). A q-reduced
// divisor carries at most g chips away from q, so r(D) >= deg(D) - g; the
// search over v stops once a child reaches that floor.
std::int64_t RankOracle::rank(const Divisor& d) {
  require_size(g_, d);
  if (degree(d) < 0) return -1;
  Divisor red = d;
  reducer_.reduce(red);
  if (red[0] < 0) return -1;
  if (auto it = memo_.find(red); it != memo_.end()) return it->second;
  if (memo_.size() >= kRankBudget) throw ResourceError("divisor rank budget exceeded");
  const std::int64_t genus = static_cast<std::int64_t>(g_.size()) - static_cast<std::int64_t>(g_.order()) + 1;
  const std::int64_t floor = std::max<std::int64_t>(-1, degree(red) - 1 - genus);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (Vertex v = 0; v < g_.order() && best > floor; ++v) {
    Divisor e = red;
    --e[v];
    best = std::min(best, rank(e));
  }
  memo_.emplace(std::move(red), best + 1);
  return best + 1;
}

std::int64_t divisor_rank(const Graph& g, const Divisor& d) {
  RankOracle oracle(g);
  return oracle.rank(d);
}

RiemannRochResult riemann_roch_check(RankOracle& oracle, const Graph& g, const Divisor& d) {
  const auto k = canonical_divisor(g);
  Divisor dual(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) dual[i] = k[i] - d[i];
  RiemannRochResult r;
  r.rank = oracle.rank(d);
  r.dual_rank = oracle.rank(dual);
  r.degree = degree(d);
  r.chi = static_cast<std::int64_t>(g.order()) - static_cast<std::int64_t>(g.size());
  return r;
}

RiemannRochResult riemann_roch_check(const Graph& g, const Divisor& d) {
  RankOracle oracle(g);
  return riemann_roch_check(oracle, g, d);
}

BigInt jacobian_order(const Graph& g) {
  require_connected(g);
  const std::size_t n = g.order();
  if (n == 1) return 1;
  std::vector<std::vector<Rational>> m(n - 1, std::vector<Rational>(n - 1, Rational(0)));
  for (Vertex v = 1; v < n; ++v) m[v - 1][v - 1] = static_cast<long>(g.degree(v));
  for (auto [u, v] : g.edges())
    if (u > 0 && v > 0) {
      m[u - 1][v - 1] -= 1;
      m[v - 1][u - 1] -= 1;
    }
  const Rational det = abs(rational_determinant(std::move(m)));
  return numerator(det);
}

}  // namespace gcalc
