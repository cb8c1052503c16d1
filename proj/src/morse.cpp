#include "graphcalc/morse.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_map>

namespace gcalc {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "yes";
    case Verdict::no:
      return "no";
    default:
      return "unknown";
  }
}

namespace {

std::string graph_key(const Graph& g) {
  std::string key = std::to_string(g.order()) + ":";
  for (auto [u, v] : g.edges()) {
    key += std::to_string(u);
    key += ',';
    key += std::to_string(v);
    key += ';';
  }
  return key;
}

std::optional<Vertex> cone_apex(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) + 1 == g.order()) return v;
  return std::nullopt;
}

bool trivial_betti(const std::vector<std::size_t>& b) {
  if (b.empty() || b[0] != 1) return false;
  return std::all_of(b.begin() + 1, b.end(), [](std::size_t x) { return x == 0; });
}

// One greedy pass. Returns the removal sequence if it reached a single vertex.
std::optional<std::vector<Vertex>> greedy_reduce(const Graph& g, Rng& rng) {
  VertexSet alive(g.order());
  alive.set();
  std::vector<Vertex> removed;
  while (alive.count() > 1) {
    const auto current = induced_subgraph(g, alive);
    if (auto apex = cone_apex(current.graph)) {
      for (Vertex v = 0; v < current.graph.order(); ++v)
        if (v != *apex) removed.push_back(current.to_parent[v]);
      return removed;
    }
    std::vector<Vertex> order(current.graph.order());
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    bool progressed = false;
    for (Vertex v : order) {
      if (contractible_verdict(unit_sphere(current.graph, v).graph) == Verdict::yes) {
        alive.reset(current.to_parent[v]);
        removed.push_back(current.to_parent[v]);
        progressed = true;
        break;
      }
    }
    if (!progressed) return std::nullopt;
  }
  return removed;
}

// Cheap certificates first, then greedy restarts, then homology.
HomotopyVerdict decide(const Graph& g, std::uint64_t seed, std::size_t restarts) {
  HomotopyVerdict out;
  if (g.order() == 0) {
    out.verdict = Verdict::no;
    out.obstruction = {0};
    return out;
  }
  if (g.order() == 1) {
    out.verdict = Verdict::yes;
    return out;
  }
  if (auto apex = cone_apex(g)) {
    out.verdict = Verdict::yes;
    for (Vertex v = 0; v < g.order(); ++v)
      if (v != *apex) out.witness.push_back(v);
    return out;
  }
  if (!is_connected(g) || euler_characteristic(g) != 1) {
    out.verdict = Verdict::no;
    out.obstruction = betti_rank_oracle(g);
    return out;
  }
  for (std::size_t attempt = 0; attempt < restarts; ++attempt) {
    Rng rng(seed + 0x9e3779b97f4a7c15ULL * (attempt + 1));
    if (auto w = greedy_reduce(g, rng)) {
      out.verdict = Verdict::yes;
      out.witness = std::move(*w);
      return out;
    }
  }
  const auto b = betti_rank_oracle(g);
  if (!trivial_betti(b)) {
    out.verdict = Verdict::no;
    out.obstruction = b;
  }
  return out;
}

// Clique-based Euler characteristic of the subgraph induced by a vertex mask.
std::int64_t chi_of_mask(const std::vector<std::uint64_t>& adj, std::uint64_t mask) {
  std::int64_t chi = 0;
  std::function<void(std::uint64_t, int)> grow = [&](std::uint64_t candidates, int sign) {
    while (candidates) {
      const int v = std::countr_zero(candidates);
      candidates &= candidates - 1;
      chi += sign;
      grow(candidates & adj[v], -sign);
    }
  };
  grow(mask, 1);
  return chi;
}

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
  if (g.order() > 64) throw ResourceError("bitmask routines support at most 64 vertices");
  std::vector<std::uint64_t> adj(g.order(), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= std::uint64_t{1} << v;
    adj[v] |= std::uint64_t{1} << u;
  }
  return adj;
}

std::vector<Vertex> mask_vertices(std::uint64_t mask) {
  std::vector<Vertex> out;
  for (; mask; mask &= mask - 1) out.push_back(static_cast<Vertex>(std::countr_zero(mask)));
  return out;
}

std::vector<Vertex> order_of(std::span<const double> f) {
  std::vector<Vertex> order(f.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return f[a] < f[b]; });
  for (std::size_t i = 1; i < order.size(); ++i)
    if (f[order[i]] == f[order[i - 1]]) throw std::invalid_argument("vertex function is not injective");
  return order;
}

void require_length(const Graph& g, std::span<const double> f) {
  if (f.size() != g.order()) throw std::invalid_argument("vertex function length does not match the graph");
}

}  // namespace

Verdict contractible_verdict(const Graph& g) {
  thread_local std::unordered_map<std::string, Verdict> cache;
  if (g.order() <= 1) return g.order() == 1 ? Verdict::yes : Verdict::no;
  if (cone_apex(g)) return Verdict::yes;
  const std::string key = graph_key(g);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  const Verdict v = decide(g, 0, kDefaultRestarts).verdict;
  if (cache.size() > 2'000'000) cache.clear();
  cache.emplace(key, v);
  return v;
}

HomotopyVerdict is_contractible(const Graph& g, std::uint64_t seed, std::size_t restarts) {
  return decide(g, seed, restarts);
}

bool replay_witness(const Graph& g, std::span<const Vertex> witness) {
  VertexSet alive(g.order());
  alive.set();
  for (Vertex v : witness) {
    if (v >= g.order() || !alive.test(v)) return false;
    VertexSet sphere = g.neighborhood(v) & alive;
    if (contractible_verdict(induced_subgraph(g, sphere).graph) != Verdict::yes) return false;
    alive.reset(v);
  }
  return alive.count() == 1;
}

std::int64_t ph_index(const Graph& g, std::span<const double> f, Vertex x) {
  require_length(g, f);
  order_of(f);
  std::vector<Vertex> lower;
  for (Vertex y : g.neighbors(x))
    if (f[y] < f[x]) lower.push_back(y);
  return 1 - euler_characteristic(induced_subgraph(g, lower).graph);
}

std::vector<std::int64_t> ph_indices(const Graph& g, std::span<const double> f) {
  require_length(g, f);
  order_of(f);
  std::vector<std::int64_t> out(g.order());
  for (Vertex x = 0; x < g.order(); ++x) {
    std::vector<Vertex> lower;
    for (Vertex y : g.neighbors(x))
      if (f[y] < f[x]) lower.push_back(y);
    out[x] = 1 - euler_characteristic(induced_subgraph(g, lower).graph);
  }
  return out;
}

PhCheck ph_check(const Graph& g, std::span<const double> f) {
  PhCheck out;
  for (auto i : ph_indices(g, f)) out.index_sum += i;
  out.chi = euler_characteristic(g);
  return out;
}

std::vector<double> random_injective_function(std::size_t n, Rng& rng) {
  std::vector<double> f(n);
  std::iota(f.begin(), f.end(), 0.0);
  rng.shuffle(f);
  return f;
}

std::vector<Rational> index_expectation_exhaustive(const Graph& g) {
  const std::size_t n = g.order();
  if (n > 7) throw ResourceError("exhaustive index expectation is limited to 7 vertices");
  const auto adj = adjacency_masks(g);
  std::vector<std::int64_t> chi(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < chi.size(); ++m) chi[m] = chi_of_mask(adj, m);
  std::vector<std::int64_t> sum(n, 0);
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::int64_t count = 0;
  do {
    std::uint64_t below = 0;
    for (Vertex x : perm) {
      sum[x] += 1 - chi[adj[x] & below];
      below |= std::uint64_t{1} << x;
    }
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<Rational> out(n);
  for (std::size_t x = 0; x < n; ++x) out[x] = Rational(sum[x], count);
  return out;
}

SampledIndex index_expectation_sampled(const Graph& g, std::size_t samples, std::uint64_t seed) {
  const std::size_t n = g.order();
  const auto adj = adjacency_masks(g);
  std::unordered_map<std::uint64_t, std::int64_t> chi;
  auto chi_at = [&](std::uint64_t m) {
    auto it = chi.find(m);
    if (it == chi.end()) it = chi.emplace(m, chi_of_mask(adj, m)).first;
    return it->second;
  };
  std::vector<double> sum(n, 0.0), sum_sq(n, 0.0);
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    rng.shuffle(perm);
    std::uint64_t below = 0;
    for (Vertex x : perm) {
      const double i = static_cast<double>(1 - chi_at(adj[x] & below));
      sum[x] += i;
      sum_sq[x] += i * i;
      below |= std::uint64_t{1} << x;
    }
  }
  SampledIndex out;
  out.mean.resize(n);
  out.standard_error.resize(n);
  const double k = static_cast<double>(samples);
  for (std::size_t x = 0; x < n; ++x) {
    out.mean[x] = sum[x] / k;
    const double var = samples > 1 ? (sum_sq[x] - k * out.mean[x] * out.mean[x]) / (k - 1) : 0.0;
    out.standard_error[x] = std::sqrt(std::max(var, 0.0) / k);
  }
  return out;
}

std::vector<Vertex> critical_points(const Graph& g, std::span<const double> f) {
  require_length(g, f);
  order_of(f);
  std::vector<Vertex> out;
  for (Vertex x = 0; x < g.order(); ++x) {
    std::vector<Vertex> lower;
    for (Vertex y : g.neighbors(x))
      if (f[y] < f[x]) lower.push_back(y);
    if (lower.empty() || contractible_verdict(induced_subgraph(g, lower).graph) != Verdict::yes) out.push_back(x);
  }
  return out;
}

CritResult crit(const Graph& g, std::uint64_t seed) {
  const std::size_t n = g.order();
  CritResult out;
  if (n == 0) {
    out.exact = true;
    return out;
  }
  if (n > 16) {
    // Upper bound from sampled orderings.
    Rng rng(seed);
    out.value = n + 1;
    for (int trial = 0; trial < 200; ++trial) {
      const auto f = random_injective_function(n, rng);
      const auto c = critical_points(g, f);
      if (c.size() < out.value) {
        out.value = c.size();
        out.witness = order_of(f);
      }
    }
    return out;
  }
  const auto adj = adjacency_masks(g);
  const std::size_t full = std::size_t{1} << n;
  // -1 undecided, 0 regular, 1 critical; per lower-neighborhood mask.
  std::vector<std::int8_t> critical(full, -1);
  bool undecided = false;
  auto is_critical = [&](std::uint64_t lower) {
    auto& c = critical[lower];
    if (c < 0) {
      if (lower == 0) {
        c = 1;
      } else {
        const Verdict v = contractible_verdict(induced_subgraph(g, mask_vertices(lower)).graph);
        if (v == Verdict::unknown) undecided = true;
        c = v == Verdict::yes ? 0 : 1;
      }
    }
    return c == 1;
  };
  constexpr std::uint8_t kInf = 255;
  std::vector<std::uint8_t> dp(full, kInf);
  std::vector<std::uint8_t> last(full, 0);
  dp[0] = 0;
  for (std::uint64_t u = 0; u < full; ++u) {
    if (dp[u] == kInf) continue;
    for (std::size_t x = 0; x < n; ++x) {
      if (u >> x & 1U) continue;
      const std::uint64_t next = u | (std::uint64_t{1} << x);
      const auto cost = static_cast<std::uint8_t>(dp[u] + (is_critical(adj[x] & u) ? 1 : 0));
      if (cost < dp[next]) {
        dp[next] = cost;
        last[next] = static_cast<std::uint8_t>(x);
      }
    }
  }
  out.value = dp[full - 1];
  out.exact = !undecided;
  std::uint64_t u = full - 1;
  while (u) {
    out.witness.push_back(last[u]);
    u &= ~(std::uint64_t{1} << last[u]);
  }
  std::reverse(out.witness.begin(), out.witness.end());
  return out;
}

MorseReport morse_filtration(const Graph& g, std::span<const double> f) {
  require_length(g, f);
  MorseReport r;
  r.order = order_of(f);
  r.index = ph_indices(g, f);
  r.morse_index.assign(g.order(), std::nullopt);
  std::vector<Vertex> prefix;
  std::vector<std::size_t> before;
  for (Vertex x : r.order) {
    prefix.push_back(x);
    auto after = betti_rank_oracle(induced_subgraph(g, prefix).graph);
    const std::size_t len = std::max(before.size(), after.size());
    before.resize(len, 0);
    after.resize(len, 0);
    std::size_t changed = 0;
    for (std::size_t m = 0; m < len; ++m) {
      if (before[m] == after[m]) continue;
      ++changed;
      if (after[m] == before[m] + 1)
        r.morse_index[x] = m;
      else if (after[m] + 1 == before[m])
        r.morse_index[x] = m + 1;
      else
        r.is_morse = false;
    }
    if (changed > 1) r.is_morse = false;
    before = std::move(after);
  }
  while (!before.empty() && before.back() == 0 && before.size() > 1) before.pop_back();
  r.betti = before;
  r.chi = euler_characteristic(g);
  if (!r.is_morse) {
    std::fill(r.morse_index.begin(), r.morse_index.end(), std::nullopt);
    return r;
  }
  for (Vertex x = 0; x < g.order(); ++x)
    if (r.morse_index[x]) {
      if (r.c.size() <= *r.morse_index[x]) r.c.resize(*r.morse_index[x] + 1, 0);
      ++r.c[*r.morse_index[x]];
    }
  return r;
}

MorseInequalities morse_inequalities_check(const MorseReport& r) {
  if (!r.is_morse) throw InapplicableError("filtration is not Morse");
  const std::size_t len = std::max(r.betti.size(), r.c.size());
  auto b = [&](std::size_t k) { return k < r.betti.size() ? static_cast<std::int64_t>(r.betti[k]) : 0; };
  auto c = [&](std::size_t k) { return k < r.c.size() ? static_cast<std::int64_t>(r.c[k]) : 0; };
  MorseInequalities out;
  std::int64_t alt = 0;
  out.weak = true;
  for (std::size_t k = 0; k < len; ++k) {
    alt += (k % 2 == 0 ? 1 : -1) * c(k);
    if (b(k) > c(k)) out.weak = false;
  }
  if (alt != r.chi) out.weak = false;
  out.strong = true;
  for (std::size_t m = 0; m < len; ++m) {
    std::int64_t lhs = 0, rhs = 0;
    for (std::size_t k = 0; k <= m; ++k) {
      const std::int64_t sign = k % 2 == 0 ? 1 : -1;
      lhs += sign * b(m - k);
      rhs += sign * c(m - k);
    }
    if (lhs > rhs) out.strong = false;
  }
  return out;
}

CoverResult tcap_upper(const Graph& g) {
  CoverResult out;
  const std::size_t n = g.order();
  VertexSet vertex_done(n);
  std::vector<VertexSet> edge_done(n, VertexSet(n));
  auto uncovered_edges_into = [&](Vertex v, const VertexSet& set) {
    std::size_t gain = 0;
    for (auto w = set.find_first(); w != VertexSet::npos; w = set.find_next(w))
      if (g.adjacent(v, static_cast<Vertex>(w)) && !edge_done[v].test(w)) ++gain;
    return gain + (vertex_done.test(v) ? 0 : 1);
  };
  while (true) {
    VertexSet set(n);
    bool seeded = false;
    for (auto [u, v] : g.edges())
      if (!edge_done[u].test(v)) {
        set.set(u);
        set.set(v);
        seeded = true;
        break;
      }
    if (!seeded) {
      for (Vertex v = 0; v < n; ++v)
        if (!vertex_done.test(v)) {
          set.set(v);
          seeded = true;
          break;
        }
    }
    if (!seeded) break;
    while (true) {
      VertexSet frontier(n);
      for (auto w = set.find_first(); w != VertexSet::npos; w = set.find_next(w))
        frontier |= g.neighborhood(static_cast<Vertex>(w));
      frontier -= set;
      std::vector<std::pair<std::size_t, Vertex>> candidates;
      for (auto w = frontier.find_first(); w != VertexSet::npos; w = frontier.find_next(w))
        candidates.emplace_back(uncovered_edges_into(static_cast<Vertex>(w), set), static_cast<Vertex>(w));
      std::stable_sort(candidates.begin(), candidates.end(),
                       [](const auto& a, const auto& b) { return a.first > b.first; });
      bool grown = false;
      for (auto [gain, w] : candidates) {
        VertexSet trial = set;
        trial.set(w);
        if (contractible_verdict(induced_subgraph(g, trial).graph) == Verdict::yes) {
          set = trial;
          grown = true;
          break;
        }
      }
      if (!grown) break;
    }
    std::vector<Vertex> members;
    for (auto w = set.find_first(); w != VertexSet::npos; w = set.find_next(w)) members.push_back(static_cast<Vertex>(w));
    for (Vertex a : members) {
      vertex_done.set(a);
      for (Vertex b : members)
        if (g.adjacent(a, b)) edge_done[a].set(b);
    }
    out.cover.push_back(std::move(members));
  }
  out.value = out.cover.size();
  return out;
}

CoverResult tcap_exact(const Graph& g) {
  const std::size_t n = g.order();
  if (n > 10) throw ResourceError("exact tcap is limited to 10 vertices");
  CoverResult out;
  out.exact = true;
  if (n == 0) return out;
  const std::uint64_t full = std::uint64_t{1} << n;
  std::vector<std::uint64_t> contractible;
  for (std::uint64_t m = 1; m < full; ++m) {
    const Verdict v = contractible_verdict(induced_subgraph(g, mask_vertices(m)).graph);
    if (v == Verdict::unknown) out.exact = false;
    if (v == Verdict::yes) contractible.push_back(m);
  }
  std::vector<std::uint64_t> maximal;
  for (auto m : contractible) {
    bool is_max = true;
    for (auto other : contractible)
      if (other != m && (other & m) == m) {
        is_max = false;
        break;
      }
    if (is_max) maximal.push_back(m);
  }
  // Elements to cover: single vertices and edges, as masks.
  std::vector<std::uint64_t> elements;
  for (Vertex v = 0; v < n; ++v) elements.push_back(std::uint64_t{1} << v);
  for (auto [u, v] : g.edges()) elements.push_back((std::uint64_t{1} << u) | (std::uint64_t{1} << v));

  std::vector<std::uint64_t> chosen;
  std::function<bool(std::size_t)> search = [&](std::size_t budget) -> bool {
    const std::uint64_t* pick = nullptr;
    std::size_t fewest = SIZE_MAX;
    for (const auto& e : elements) {
      if (std::any_of(chosen.begin(), chosen.end(), [&](auto s) { return (s & e) == e; })) continue;
      std::size_t options = 0;
      for (auto s : maximal)
        if ((s & e) == e) ++options;
      if (options < fewest) {
        fewest = options;
        pick = &e;
      }
    }
    if (!pick) return true;
    if (budget == 0 || fewest == 0) return false;
    const std::uint64_t e = *pick;
    for (auto s : maximal)
      if ((s & e) == e) {
        chosen.push_back(s);
        if (search(budget - 1)) return true;
        chosen.pop_back();
      }
    return false;
  };
  const std::size_t upper = tcap_upper(g).value;
  for (std::size_t k = 1; k <= upper; ++k) {
    chosen.clear();
    if (search(k)) break;
  }
  out.value = chosen.size();
  for (auto m : chosen) out.cover.push_back(mask_vertices(m));
  return out;
}

namespace {

Eigen::VectorXd cup_double(const SimplicialStructure& s, std::size_t p, const Eigen::VectorXd& f, std::size_t q,
                           const Eigen::VectorXd& h) {
  const std::size_t k = p + q;
  Eigen::VectorXd out = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(s.count(k)));
  for (std::size_t i = 0; i < s.count(k); ++i) {
    const auto x = s.simplex(k, i);
    const auto front = *s.index_of(x.subspan(0, p + 1));
    const auto back = *s.index_of(x.subspan(p, q + 1));
    out(static_cast<Eigen::Index>(i)) = f(static_cast<Eigen::Index>(front)) * h(static_cast<Eigen::Index>(back));
  }
  return out;
}

}  // namespace

std::size_t cup_length_lower(const SimplicialStructure& s, const OperatorBundle& ops, std::uint64_t seed,
                             std::size_t trials) {
  const std::size_t dims = ops.degrees();
  std::vector<Eigen::MatrixXd> basis(dims);
  bool any = false;
  for (std::size_t k = 1; k < dims; ++k) {
    basis[k] = ops.harmonic_basis(k);
    if (basis[k].cols() > 0) any = true;
  }
  if (!any) return 0;
  constexpr double kNonzero = 1e-8;
  std::size_t best = 1;
  // Depth-first over products of basis forms.
  std::function<void(std::size_t, const Eigen::VectorXd&, std::size_t)> extend = [&](std::size_t p,
                                                                                    const Eigen::VectorXd& form,
                                                                                    std::size_t length) {
    best = std::max(best, length);
    for (std::size_t q = 1; p + q < dims; ++q)
      for (Eigen::Index j = 0; j < basis[q].cols(); ++j) {
        const Eigen::VectorXd prod = cup_double(s, p, form, q, basis[q].col(j));
        if (basis[p + q].cols() == 0) continue;
        const Eigen::VectorXd proj = basis[p + q].transpose() * prod;
        if (proj.norm() > kNonzero) extend(p + q, basis[p + q] * proj, length + 1);
      }
  };
  for (std::size_t p = 1; p < dims; ++p)
    for (Eigen::Index j = 0; j < basis[p].cols(); ++j) extend(p, basis[p].col(j), 1);
  // Random integer combinations catch products that vanish on basis vectors.
  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    std::size_t p = 1 + rng.below(dims - 1);
    if (basis[p].cols() == 0) continue;
    Eigen::VectorXd form = Eigen::VectorXd::Zero(basis[p].rows());
    for (Eigen::Index j = 0; j < basis[p].cols(); ++j) form += static_cast<double>(rng.between(-3, 3)) * basis[p].col(j);
    if (form.norm() < kNonzero) continue;
    std::size_t length = 1;
    while (true) {
      bool extended = false;
      for (std::size_t q = 1; p + q < dims && !extended; ++q) {
        if (basis[q].cols() == 0 || basis[p + q].cols() == 0) continue;
        Eigen::VectorXd factor = Eigen::VectorXd::Zero(basis[q].rows());
        for (Eigen::Index j = 0; j < basis[q].cols(); ++j)
          factor += static_cast<double>(rng.between(-3, 3)) * basis[q].col(j);
        const Eigen::VectorXd proj = basis[p + q].transpose() * cup_double(s, p, form, q, factor);
        if (proj.norm() > kNonzero) {
          form = basis[p + q] * proj;
          p += q;
          ++length;
          extended = true;
        }
      }
      if (!extended) break;
    }
    best = std::max(best, length);
  }
  return best + 1;
}

LsTriple ls_triple_check(const Graph& g, std::uint64_t seed) {
  LsTriple out;
  const auto s = SimplicialStructure::whitney(g);
  out.cup = cup_length_lower(s, dirac_and_laplacian(s), seed);
  out.tcap = g.order() <= 10 ? tcap_exact(g) : tcap_upper(g);
  out.crit = crit(g, seed);
  return out;
}

}  // namespace gcalc
