#include "graphcalc/geometry.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>

namespace gcalc {

Rational CurvatureVector::total() const {
  Rational sum = 0;
  for (const auto& k : curvature) sum += k;
  return sum;
}

CurvatureVector curvature(const Graph& g) {
  CurvatureVector out;
  out.curvature.resize(g.order());
  out.sphere_f_vectors.resize(g.order());
  for (Vertex x = 0; x < g.order(); ++x) {
    const auto f = clique_counts(unit_sphere(g, x).graph);
    Rational k = 1;
    for (std::size_t j = 0; j < f.size(); ++j)
      k += Rational(j % 2 == 0 ? -1 : 1) * Rational(static_cast<std::int64_t>(f[j]), static_cast<std::int64_t>(j + 2));
    out.curvature[x] = k;
    out.sphere_f_vectors[x] = f;
  }
  return out;
}

std::int64_t second_order_curvature(const Graph& g, Vertex x) {
  const auto dist = distances_from(g, x);
  std::int64_t s1 = 0, s2 = 0;
  for (const auto& d : dist) {
    if (d == 1) ++s1;
    if (d == 2) ++s2;
  }
  return 2 * s1 - s2;
}

std::vector<std::vector<Vertex>> induced_cycles(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> path;
  VertexSet on_path(g.order());
  // Cycles are rooted at their smallest vertex s and read in the direction
  // where the second vertex is smaller than the last.
  std::function<void(Vertex)> extend = [&](Vertex s) {
    const Vertex last = path.back();
    for (Vertex w : g.neighbors(last)) {
      if (w <= s || on_path.test(w)) continue;
      bool chord = false;
      for (std::size_t i = 1; i + 1 < path.size(); ++i)
        if (g.adjacent(w, path[i])) {
          chord = true;
          break;
        }
      if (chord) continue;
      if (path.size() > 1 && g.adjacent(w, s)) {
        if (path.size() >= 3 && path[1] < w) {
          path.push_back(w);
          out.push_back(path);
          path.pop_back();
        }
        continue;
      }
      path.push_back(w);
      on_path.set(w);
      extend(s);
      on_path.reset(w);
      path.pop_back();
    }
  };
  for (Vertex s = 0; s < g.order(); ++s) {
    path.assign(1, s);
    on_path.set(s);
    extend(s);
    on_path.reset(s);
  }
  return out;
}

SectionalRicci sectional_and_ricci(const Graph& g) {
  SectionalRicci out;
  const auto& edges = g.edges();
  auto edge_index = [&](Vertex a, Vertex b) {
    const Edge e{std::min(a, b), std::max(a, b)};
    return static_cast<std::size_t>(std::lower_bound(edges.begin(), edges.end(), e) - edges.begin());
  };
  std::vector<Rational> sum(edges.size());
  std::vector<std::int64_t> count(edges.size(), 0);
  for (Vertex c = 0; c < g.order(); ++c) {
    const auto sphere = unit_sphere(g, c);
    for (const auto& cyc : induced_cycles(sphere.graph)) {
      Wheel w{c, {}, Rational(1) - Rational(static_cast<std::int64_t>(cyc.size()), 6)};
      for (Vertex v : cyc) w.rim.push_back(sphere.to_parent[v]);
      for (std::size_t i = 0; i < w.rim.size(); ++i) {
        for (std::size_t e : {edge_index(c, w.rim[i]), edge_index(w.rim[i], w.rim[(i + 1) % w.rim.size()])}) {
          sum[e] += w.curvature;
          ++count[e];
        }
      }
      out.wheels.push_back(std::move(w));
    }
  }
  out.ricci.resize(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (count[e] > 0) out.ricci[e] = sum[e] / count[e];
  out.scalar.resize(g.order());
  for (Vertex x = 0; x < g.order(); ++x) {
    Rational s = 0;
    std::int64_t n = 0;
    for (Vertex y : g.neighbors(x))
      if (const auto& r = out.ricci[edge_index(x, y)]) {
        s += *r;
        ++n;
      }
    if (n > 0) out.scalar[x] = s / n;
  }
  return out;
}

namespace {

std::string key_of(const Graph& g) {
  std::string key = std::to_string(g.order()) + ":";
  for (auto [u, v] : g.edges()) key += std::to_string(u) + "," + std::to_string(v) + ";";
  return key;
}

Rational dimension_cached(const Graph& g) {
  thread_local std::unordered_map<std::string, Rational> memo;
  if (g.order() == 0) return -1;
  const std::string key = key_of(g);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Rational sum = 0;
  for (Vertex v = 0; v < g.order(); ++v) sum += 1 + dimension_cached(unit_sphere(g, v).graph);
  const Rational d = sum / static_cast<std::int64_t>(g.order());
  if (memo.size() > 1'000'000) memo.clear();
  memo.emplace(key, d);
  return d;
}

}  // namespace

DimensionValue inductive_dimension(const Graph& g) {
  DimensionValue out;
  out.per_vertex.resize(g.order());
  Rational sum = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    out.per_vertex[v] = 1 + dimension_cached(unit_sphere(g, v).graph);
    sum += out.per_vertex[v];
  }
  out.dimension = g.order() == 0 ? Rational(-1) : sum / static_cast<std::int64_t>(g.order());
  return out;
}

Rational dimension(const Graph& g) { return dimension_cached(g); }

std::vector<Rational> expected_dimension_polynomial(std::size_t n) {
  using Poly = std::vector<Rational>;
  auto mul = [](const Poly& a, const Poly& b) {
    Poly c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
  };
  auto add_to = [](Poly& a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  };
  std::vector<Poly> d{{Rational(-1)}};
  const Poly p{0, 1}, q{1, -1};
  for (std::size_t m = 0; m < n; ++m) {
    Poly next{1};
    for (std::size_t k = 0; k <= m; ++k) {
      Poly term{Rational(binomial(static_cast<unsigned>(m), static_cast<unsigned>(k)))};
      for (std::size_t i = 0; i < k; ++i) term = mul(term, p);
      for (std::size_t i = k; i < m; ++i) term = mul(term, q);
      add_to(next, mul(term, d[k]));
    }
    while (next.size() > 1 && next.back() == 0) next.pop_back();
    d.push_back(std::move(next));
  }
  return d[n];
}

Rational evaluate(const std::vector<Rational>& poly, const Rational& p) {
  Rational out = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) out = out * p + *it;
  return out;
}

double evaluate(const std::vector<Rational>& poly, double p) {
  double out = 0.0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) out = out * p + to_double(*it);
  return out;
}

namespace {

Verdict geometric_cached(const Graph& g, std::size_t d) {
  thread_local std::map<std::pair<std::string, std::size_t>, Verdict> memo;
  if (g.order() == 0) return Verdict::no;
  const auto key = std::make_pair(key_of(g), d);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Verdict result = Verdict::yes;
  for (Vertex x = 0; x < g.order() && result != Verdict::no; ++x) {
    const Graph sphere = unit_sphere(g, x).graph;
    if (d == 1) {
      if (sphere.order() != 2 || sphere.size() != 0) result = Verdict::no;
      continue;
    }
    const Verdict inner = geometric_cached(sphere, d - 1);
    if (inner == Verdict::no) {
      result = Verdict::no;
      continue;
    }
    if (sphere.order() > kSphereCritBudget) {
      result = Verdict::unknown;
      continue;
    }
    const auto c = crit(sphere);
    if (!c.exact) {
      result = Verdict::unknown;
    } else if (c.value != 2) {
      result = Verdict::no;
    } else if (inner == Verdict::unknown) {
      result = Verdict::unknown;
    }
  }
  memo.emplace(key, result);
  return result;
}

}  // namespace

Verdict is_geometric(const Graph& g, std::size_t d) {
  if (d == 0) throw std::invalid_argument("is_geometric needs d >= 1");
  return geometric_cached(g, d);
}

bool flatness_check(const Graph& g, std::size_t d) {
  if (d % 2 == 0) throw InapplicableError("flatness applies to odd dimensions only");
  if (is_geometric(g, d) != Verdict::yes) throw InapplicableError("graph is not certified geometric");
  const auto k = curvature(g);
  return std::all_of(k.curvature.begin(), k.curvature.end(), [](const Rational& r) { return r == 0; });
}

PositiveCurvatureReport positive_curvature_report(const Graph& g) {
  PositiveCurvatureReport out;
  for (std::size_t d = 1; d <= 4 && out.dimension == 0; ++d)
    if (is_geometric(g, d) == Verdict::yes) out.dimension = d;
  if (out.dimension == 0) throw InapplicableError("graph is not certified geometric");
  const auto sr = sectional_and_ricci(g);
  out.all_positive = !sr.wheels.empty() &&
                     std::all_of(sr.wheels.begin(), sr.wheels.end(), [](const Wheel& w) { return w.curvature > 0; });
  out.diameter = metrics(g).diameter.value_or(0);
  out.diameter_bound = out.diameter <= 3;
  return out;
}

std::string curvature_csv(const Graph& g) {
  const auto k = curvature(g);
  const auto dim = inductive_dimension(g);
  std::string out = "vertex,curvature,dimension\n";
  for (Vertex x = 0; x < g.order(); ++x)
    out += std::to_string(x) + "," + to_string(k.curvature[x]) + "," + to_string(dim.per_vertex[x]) + "\n";
  return out;
}

}  // namespace gcalc
