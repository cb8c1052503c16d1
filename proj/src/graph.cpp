#include "graphcalc/graph.hpp"

#include "json.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>

namespace gcalc {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g;
  g.rows_.assign(n, VertexSet(n));
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw GraphError("edge endpoint out of range", {u, v});
    if (u == v) throw GraphError("self-loop", {u, v});
    g.rows_[u].set(v);
    g.rows_[v].set(u);
  }
  for (Vertex u = 0; u < n; ++u)
    for (auto v = g.rows_[u].find_next(u); v != VertexSet::npos; v = g.rows_[u].find_next(v))
      g.edges_.emplace_back(u, static_cast<Vertex>(v));
  return g;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  out.reserve(degree(v));
  for (auto w = rows_[v].find_first(); w != VertexSet::npos; w = rows_[v].find_next(w))
    out.push_back(static_cast<Vertex>(w));
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> keep(vertices.begin(), vertices.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<std::int64_t> local(g.order(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= g.order()) throw std::out_of_range("induced_subgraph: invalid vertex " + std::to_string(keep[i]));
    local[keep[i]] = static_cast<std::int64_t>(i);
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (local[u] >= 0 && local[v] >= 0) edges.emplace_back(local[u], local[v]);
  return {Graph::from_edges(keep.size(), edges), std::move(keep)};
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vertices) {
  std::vector<Vertex> keep;
  for (auto v = vertices.find_first(); v != VertexSet::npos; v = vertices.find_next(v))
    keep.push_back(static_cast<Vertex>(v));
  return induced_subgraph(g, keep);
}

InducedSubgraph unit_sphere(const Graph& g, Vertex x) {
  if (x >= g.order()) throw std::out_of_range("unit_sphere: invalid vertex " + std::to_string(x));
  return induced_subgraph(g, g.neighborhood(x));
}

std::uint64_t Rng::below(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("Rng::below(0)");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % m;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % m;
}

namespace generate {

Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

Graph cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u) e.emplace_back(u, static_cast<Vertex>((u + 1) % n));
  return Graph::from_edges(n, e);
}

Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
  return Graph::from_edges(n, e);
}

Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (Vertex u = 1; u <= leaves; ++u) e.emplace_back(0, u);
  return Graph::from_edges(leaves + 1, e);
}

Graph wheel(std::size_t spikes) {
  if (spikes < 3) throw std::invalid_argument("wheel needs at least 3 spikes");
  std::vector<Edge> e;
  for (Vertex u = 1; u <= spikes; ++u) {
    e.emplace_back(0, u);
    e.emplace_back(u, static_cast<Vertex>(u % spikes + 1));
  }
  return Graph::from_edges(spikes + 1, e);
}

Graph cross_polytope(std::size_t d) {
  const std::size_t n = 2 * d + 2;
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if ((u ^ 1U) != v) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

Graph octahedron() { return cross_polytope(2); }

Graph icosahedron() {
  // Top vertex 0, upper pentagon 1..5, lower pentagon 6..10, bottom 11.
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    const Vertex up = 1 + i, up_next = 1 + (i + 1) % 5;
    const Vertex lo = 6 + i, lo_next = 6 + (i + 1) % 5;
    e.emplace_back(0, up);
    e.emplace_back(up, up_next);
    e.emplace_back(up, lo);
    e.emplace_back(up, lo_next);
    e.emplace_back(lo, lo_next);
    e.emplace_back(lo, 11);
  }
  return Graph::from_edges(12, e);
}

Graph random_er(std::size_t n, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("random_er: p outside [0,1]");
  Rng rng(seed);
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.uniform01() < p) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

Graph random_contractible(std::size_t n, std::uint64_t seed) {
  if (n == 0) return Graph::from_edges(0, {});
  Rng rng(seed);
  std::vector<std::vector<Vertex>> adj(1);
  std::vector<Edge> e;
  for (Vertex next = 1; next < n; ++next) {
    const auto apex = static_cast<Vertex>(rng.below(next));
    std::vector<Vertex> base{apex};
    for (Vertex w : adj[apex])
      if (rng.uniform01() < 0.5) base.push_back(w);
    adj.emplace_back();
    for (Vertex w : base) {
      e.emplace_back(w, next);
      adj[w].push_back(next);
      adj[next].push_back(w);
    }
  }
  return Graph::from_edges(n, e);
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(static_cast<Vertex>(rng.below(v)), v);
  return Graph::from_edges(n, e);
}

Graph triangular_torus(std::size_t rows, std::size_t cols) {
  if (rows < 3 || cols < 3) throw std::invalid_argument("triangular_torus needs at least 3x3");
  auto id = [&](std::size_t i, std::size_t j) { return static_cast<Vertex>((i % rows) * cols + (j % cols)); };
  std::vector<Edge> e;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      e.emplace_back(id(i, j), id(i + 1, j));
      e.emplace_back(id(i, j), id(i, j + 1));
      e.emplace_back(id(i, j), id(i + 1, j + 1));
    }
  return Graph::from_edges(rows * cols, e);
}

}  // namespace generate

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

}  // namespace

Graph generate_from_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const auto args = colon == std::string::npos ? std::vector<std::string>{} : split(spec.substr(colon + 1), ',');
  auto arg = [&](std::size_t i) -> const std::string& {
    if (i >= args.size()) throw std::invalid_argument("generator '" + kind + "' is missing argument " + std::to_string(i + 1));
    return args[i];
  };
  auto count = [&](std::size_t i) { return static_cast<std::size_t>(std::stoull(arg(i))); };
  if (kind == "complete") return generate::complete(count(0));
  if (kind == "cycle") return generate::cycle(count(0));
  if (kind == "path") return generate::path(count(0));
  if (kind == "star") return generate::star(count(0));
  if (kind == "wheel") return generate::wheel(count(0));
  if (kind == "cross_polytope") return generate::cross_polytope(count(0));
  if (kind == "octahedron") return generate::octahedron();
  if (kind == "icosahedron") return generate::icosahedron();
  if (kind == "random_er") return generate::random_er(count(0), std::stod(arg(1)), std::stoull(arg(2)));
  if (kind == "random_contractible") return generate::random_contractible(count(0), std::stoull(arg(1)));
  if (kind == "random_tree") return generate::random_tree(count(0), std::stoull(arg(1)));
  if (kind == "triangular_torus") return generate::triangular_torus(count(0), count(1));
  throw std::invalid_argument("unknown generator kind '" + kind + "'");
}

std::vector<std::optional<std::size_t>> distances_from(const Graph& g, Vertex source) {
  std::vector<std::optional<std::size_t>> dist(g.order());
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    const auto& row = g.neighborhood(u);
    for (auto w = row.find_first(); w != VertexSet::npos; w = row.find_next(w)) {
      if (dist[w]) continue;
      dist[w] = *dist[u] + 1;
      queue.push_back(static_cast<Vertex>(w));
    }
  }
  return dist;
}

std::size_t component_count(const Graph& g) {
  std::vector<bool> seen(g.order(), false);
  std::size_t comps = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    ++comps;
    std::vector<Vertex> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      const auto& row = g.neighborhood(u);
      for (auto w = row.find_first(); w != VertexSet::npos; w = row.find_next(w))
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(static_cast<Vertex>(w));
        }
    }
  }
  return comps;
}

bool is_connected(const Graph& g) { return component_count(g) == 1; }

Metrics metrics(const Graph& g) {
  Metrics m;
  const std::size_t n = g.order();
  if (n == 0) return m;
  m.components = component_count(g);
  m.disconnected = m.components > 1;

  // Component sizes decide which component's diameter is reported.
  std::vector<std::size_t> component(n, SIZE_MAX), sizes;
  for (Vertex s = 0; s < n; ++s) {
    if (component[s] != SIZE_MAX) continue;
    const auto dist = distances_from(g, s);
    std::size_t size = 0;
    for (Vertex v = 0; v < n; ++v)
      if (dist[v]) {
        component[v] = sizes.size();
        ++size;
      }
    sizes.push_back(size);
  }
  const std::size_t largest = static_cast<std::size_t>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());

  std::size_t diameter = 0, pairs = 0, total = 0;
  for (Vertex s = 0; s < n; ++s) {
    const auto dist = distances_from(g, s);
    for (Vertex v = 0; v < n; ++v) {
      if (!dist[v] || v == s) continue;
      ++pairs;
      total += *dist[v];
      if (component[s] == largest) diameter = std::max(diameter, *dist[v]);
    }
  }
  m.diameter = diameter;
  m.mean_distance = pairs ? static_cast<double>(total) / static_cast<double>(pairs) : 0.0;

  double clustering = 0.0;
  std::size_t counted = 0;
  for (Vertex x = 0; x < n; ++x) {
    const std::size_t deg = g.degree(x);
    if (deg < 2) continue;
    const auto sphere = unit_sphere(g, x);
    clustering += static_cast<double>(sphere.graph.size()) / static_cast<double>(deg * (deg - 1) / 2);
    ++counted;
  }
  m.clustering = counted ? clustering / static_cast<double>(counted) : 0.0;
  m.edge_density = n > 1 ? static_cast<double>(g.size()) / static_cast<double>(n * (n - 1) / 2) : 0.0;
  return m;
}

std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("edge list line " + std::to_string(line_no) + ": " + why);
  };
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) fail("missing header \"n m\"");
  long long n = -1, m = -1;
  {
    std::istringstream hdr(line);
    std::string rest;
    if (!(hdr >> n >> m) || n < 0 || m < 0 || (hdr >> rest)) fail("expected header \"n m\"");
  }
  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) {
    if (!next_line()) fail("expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    std::istringstream row(line);
    long long u, v;
    std::string rest;
    if (!(row >> u >> v) || (row >> rest)) fail("expected \"u v\"");
    if (u < 0 || v < 0 || u >= n || v >= n) fail("endpoint out of range");
    if (u == v) fail("self-loop");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (next_line()) fail("trailing content after " + std::to_string(m) + " edges");
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

std::string to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.order();
  j["edges"] = nlohmann::json::array();
  for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
  return j.dump();
}

Graph parse_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("graph JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges") || !j["n"].is_number_unsigned() ||
      !j["edges"].is_array())
    throw std::invalid_argument("graph JSON: expected {\"n\": int, \"edges\": [[u,v],...]}");
  const auto n = j["n"].get<std::size_t>();
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
      throw std::invalid_argument("graph JSON: malformed edge " + e.dump());
    edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
  }
  return Graph::from_edges(n, edges);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_json(text);
  return parse_edge_list(text);
}

}  // namespace gcalc
