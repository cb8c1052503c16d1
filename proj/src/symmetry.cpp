#include "graphcalc/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace gcalc {

std::vector<Permutation> automorphism_permutations(const Graph& g, std::size_t limit) {
  const std::size_t n = g.order();
  if (n > kMaxAutomorphismVertices)
    throw ResourceError("automorphism enumeration is limited to " + std::to_string(kMaxAutomorphismVertices) +
                        " vertices");
  std::vector<std::vector<std::size_t>> signature(n);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) signature[v].push_back(g.degree(w));
    std::sort(signature[v].begin(), signature[v].end());
  }
  std::vector<Permutation> out;
  Permutation perm(n);
  std::vector<bool> used(n, false);
  std::function<void(Vertex)> assign = [&](Vertex v) {
    if (v == n) {
      if (out.size() == limit) throw ResourceError("automorphism group exceeds " + std::to_string(limit) + " elements");
      out.push_back(perm);
      return;
    }
    for (Vertex w = 0; w < n; ++w) {
      if (used[w] || signature[w] != signature[v]) continue;
      bool ok = true;
      for (Vertex u = 0; u < v && ok; ++u)
        if (g.adjacent(v, u) != g.adjacent(w, perm[u])) ok = false;
      if (!ok) continue;
      used[w] = true;
      perm[v] = w;
      assign(v + 1);
      used[w] = false;
    }
  };
  assign(0);
  return out;
}

GraphAutomorphism induce(const SimplicialStructure& s, const Permutation& perm) {
  GraphAutomorphism t;
  t.perm = perm;
  t.image.resize(s.dimensions());
  t.sign.resize(s.dimensions());
  std::vector<Vertex> mapped;
  for (std::size_t k = 0; k < s.dimensions(); ++k) {
    t.image[k].resize(s.count(k));
    t.sign[k].resize(s.count(k));
    for (std::size_t i = 0; i < s.count(k); ++i) {
      const auto x = s.simplex(k, i);
      mapped.clear();
      for (Vertex v : x) mapped.push_back(perm[v]);
      int sign = 1;
      for (std::size_t a = 0; a < mapped.size(); ++a)
        for (std::size_t b = a + 1; b < mapped.size(); ++b)
          if (mapped[a] > mapped[b]) sign = -sign;
      std::sort(mapped.begin(), mapped.end());
      const auto idx = s.index_of(mapped);
      if (!idx) throw std::invalid_argument("permutation is not an automorphism");
      t.image[k][i] = *idx;
      t.sign[k][i] = sign;
    }
  }
  return t;
}

std::vector<GraphAutomorphism> automorphisms(const SimplicialStructure& s, std::size_t limit) {
  std::vector<GraphAutomorphism> out;
  for (const auto& p : automorphism_permutations(s.graph(), limit)) out.push_back(induce(s, p));
  return out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
  return c;
}

Permutation inverse(const Permutation& p) {
  Permutation q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<Vertex>(i);
  return q;
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.size() != g.order()) return false;
  std::vector<bool> seen(p.size(), false);
  for (Vertex v : p) {
    if (v >= p.size() || seen[v]) return false;
    seen[v] = true;
  }
  for (auto [u, v] : g.edges())
    if (!g.adjacent(p[u], p[v])) return false;
  return true;
}

bool is_group(const std::vector<Permutation>& elements) {
  if (elements.empty()) return false;
  const std::set<Permutation> set(elements.begin(), elements.end());
  Permutation id(elements.front().size());
  std::iota(id.begin(), id.end(), 0);
  if (!set.count(id)) return false;
  for (const auto& a : elements) {
    if (!set.count(inverse(a))) return false;
    for (const auto& b : elements)
      if (!set.count(compose(a, b))) return false;
  }
  return true;
}

LefschetzResult lefschetz(const OperatorBundle& ops, const GraphAutomorphism& t) {
  LefschetzResult out;
  double sum = 0.0;
  for (std::size_t k = 0; k < ops.degrees(); ++k) {
    const Eigen::MatrixXd h = ops.harmonic_basis(k);
    double tr = 0.0;
    if (h.cols() > 0) {
      // P e_x = sign e_{T x}; tr(H^T P H) = sum_x sign * <H row T x, H row x>.
      for (std::size_t i = 0; i < t.image[k].size(); ++i)
        tr += t.sign[k][i] * h.row(static_cast<Eigen::Index>(t.image[k][i])).dot(h.row(static_cast<Eigen::Index>(i)));
    }
    out.traces.push_back(tr);
    sum += (k % 2 == 0 ? 1.0 : -1.0) * tr;
    for (std::size_t i = 0; i < t.image[k].size(); ++i)
      if (t.image[k][i] == i) {
        const int degree = t.sign[k][i] * (k % 2 == 0 ? 1 : -1);
        out.fixed.push_back({k, i, degree});
        out.fixed_sum += degree;
      }
  }
  out.lefschetz = std::llround(sum);
  out.residual = std::abs(sum - static_cast<double>(out.lefschetz));
  return out;
}

bool brouwer_check(const Graph& g, const GraphAutomorphism& t) {
  if (contractible_verdict(g) != Verdict::yes) throw InapplicableError("graph is not certified contractible");
  for (const auto& image : t.image)
    for (std::size_t i = 0; i < image.size(); ++i)
      if (image[i] == i) return true;
  return false;
}

std::optional<GroupAction> generate_group(const std::vector<Permutation>& generators, std::size_t n,
                                          std::size_t cap) {
  Permutation id(n);
  std::iota(id.begin(), id.end(), 0);
  std::set<Permutation> seen{id};
  std::deque<Permutation> queue{id};
  while (!queue.empty()) {
    const Permutation cur = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      Permutation next = compose(g, cur);
      if (seen.insert(next).second) {
        if (seen.size() > cap) return std::nullopt;
        queue.push_back(std::move(next));
      }
    }
  }
  GroupAction a;
  a.elements.push_back(id);
  for (const auto& p : seen)
    if (p != id) a.elements.push_back(p);
  return a;
}

std::vector<GroupAction> subgroups(const std::vector<Permutation>& group, std::size_t cap) {
  if (group.empty()) return {};
  const std::size_t n = group.front().size();
  std::set<std::vector<Permutation>> found;
  std::vector<GroupAction> out;
  auto keep = [&](std::optional<GroupAction> a) {
    if (!a) return;
    if (found.insert(a->elements).second) out.push_back(std::move(*a));
  };
  std::vector<Permutation> cyclic_generators;
  for (const auto& g : group) {
    auto a = generate_group({g}, n, cap);
    if (a && !found.count(a->elements)) cyclic_generators.push_back(g);
    keep(std::move(a));
  }
  for (std::size_t i = 0; i < cyclic_generators.size(); ++i)
    for (std::size_t j = i + 1; j < cyclic_generators.size(); ++j)
      keep(generate_group({cyclic_generators[i], cyclic_generators[j]}, n, cap));
  if (group.size() <= cap) keep(generate_group(group, n, cap));
  return out;
}

RiemannHurwitzResult riemann_hurwitz(const SimplicialStructure& s, const GroupAction& a) {
  RiemannHurwitzResult out;
  out.chi = euler_characteristic(s);
  out.order = static_cast<std::int64_t>(a.order());
  std::vector<GraphAutomorphism> induced;
  for (const auto& p : a.elements) induced.push_back(induce(s, p));
  for (std::size_t k = 0; k < s.dimensions(); ++k) {
    const std::int64_t sign = k % 2 == 0 ? 1 : -1;
    std::vector<bool> visited(s.count(k), false);
    std::int64_t orbits = 0;
    for (std::size_t i = 0; i < s.count(k); ++i) {
      if (!visited[i]) {
        ++orbits;
        for (const auto& t : induced) visited[t.image[k][i]] = true;
      }
      // e_x - 1 = sum over non-identity a fixing x of (-1)^k.
      for (std::size_t e = 1; e < induced.size(); ++e)
        if (induced[e].image[k][i] == i) out.ramification += sign;
    }
    out.quotient_chi += sign * orbits;
  }
  // Simple quotient: no edge inside a vertex orbit and no two edge orbits
  // joining the same pair of vertex orbits.
  std::vector<std::size_t> orbit_of(s.count(0), SIZE_MAX);
  std::size_t next = 0;
  for (std::size_t v = 0; v < s.count(0); ++v)
    if (orbit_of[v] == SIZE_MAX) {
      for (const auto& p : a.elements) orbit_of[p[v]] = next;
      ++next;
    }
  out.simple_quotient = true;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_orbit_of_pair;
  std::vector<bool> visited(s.count(1), false);
  for (std::size_t i = 0; i < s.count(1) && out.simple_quotient; ++i) {
    if (visited[i]) continue;
    for (const auto& t : induced) visited[t.image[1][i]] = true;
    const auto e = s.simplex(1, i);
    auto key = std::minmax(orbit_of[e[0]], orbit_of[e[1]]);
    if (key.first == key.second || !edge_orbit_of_pair.emplace(key, i).second) out.simple_quotient = false;
  }
  return out;
}

std::optional<std::vector<int>> orient_top_simplices(const SimplicialStructure& s) {
  if (s.dimensions() == 0) return std::vector<int>{};
  const std::size_t top = s.dimensions() - 1;
  std::vector<int> o(s.count(top), 0);
  if (top == 0) {
    std::fill(o.begin(), o.end(), 1);
    return o;
  }
  // Faces of each top simplex with the incidence sign, from d_{top-1}.
  const auto& d = s.derivative(top - 1);
  std::vector<std::vector<std::pair<std::size_t, int>>> cofaces(s.count(top - 1));
  for (std::size_t r = 0; r < d.rows; ++r)
    for (const auto& e : d.row_entries[r]) cofaces[e.col].push_back({r, e.sign});
  for (std::size_t start = 0; start < o.size(); ++start) {
    if (o[start] != 0) continue;
    o[start] = 1;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      for (const auto& e : d.row_entries[x]) {
        const auto& cf = cofaces[e.col];
        if (cf.size() != 2) continue;
        for (auto [y, sy] : cf) {
          if (y == x) continue;
          // Induced orientations on the shared face must cancel.
          const int want = -o[x] * e.sign * sy;
          if (o[y] == 0) {
            o[y] = want;
            queue.push_back(y);
          } else if (o[y] != want) {
            return std::nullopt;
          }
        }
      }
    }
  }
  return o;
}

std::optional<bool> orientation_preserving(const SimplicialStructure& s, const GraphAutomorphism& t) {
  const auto o = orient_top_simplices(s);
  if (!o || o->empty()) return std::nullopt;
  const std::size_t top = s.dimensions() - 1;
  bool all_keep = true, all_flip = true;
  for (std::size_t i = 0; i < o->size(); ++i) {
    const int image = t.sign[top][i] * (*o)[i];
    if (image == (*o)[t.image[top][i]])
      all_flip = false;
    else
      all_keep = false;
  }
  if (all_keep) return true;
  if (all_flip) return false;
  return std::nullopt;
}

}  // namespace gcalc
