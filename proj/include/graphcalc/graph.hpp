// Finite simple graphs on dense vertex ids 0..n-1: construction, generators,
// induced subgraphs, BFS metrics and text/JSON serialization.
#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gcalc {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;
using VertexSet = boost::dynamic_bitset<>;

/// Malformed edge data: out-of-range endpoint or self-loop.
class GraphError : public std::invalid_argument {
 public:
  GraphError(const std::string& what, Edge offending)
      : std::invalid_argument(what), offending_(offending) {}
  Edge offending() const { return offending_; }

 private:
  Edge offending_;
};

/// Immutable finite simple graph. Adjacency is kept both as bitset rows (for
/// clique enumeration) and as a sorted edge list with u < v (for I/O).
class Graph {
 public:
  Graph() = default;

  /// Throws GraphError on an out-of-range endpoint or a self-loop. Duplicate
  /// and reversed pairs are merged.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const { return rows_.size(); }
  std::size_t size() const { return edges_.size(); }

  bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }
  const VertexSet& neighborhood(Vertex v) const { return rows_[v]; }
  std::vector<Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return rows_[v].count(); }
  const std::vector<Edge>& edges() const { return edges_; }

  friend bool operator==(const Graph& a, const Graph& b) { return a.edges_ == b.edges_ && a.order() == b.order(); }

 private:
  std::vector<VertexSet> rows_;
  std::vector<Edge> edges_;
};

/// A subgraph together with the map from its dense ids back to the parent's.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vertices);
/// Induced subgraph on the neighbors of x.
InducedSubgraph unit_sphere(const Graph& g, Vertex x);

/// Deterministic PRNG: 64-bit Mersenne Twister (std::mt19937_64, whose output
/// sequence is fixed by the C++ standard) with hand-written reductions so that
/// draws do not depend on the standard library's distribution classes.
///   uniform01()     = (next() >> 11) * 2^-53
///   below(m)        = rejection sampling on next() to remove modulo bias
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  std::uint64_t below(std::uint64_t m);
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

namespace generate {
Graph complete(std::size_t n);
Graph cycle(std::size_t n);
Graph path(std::size_t n);
/// Hub 0 joined to `leaves` leaves.
Graph star(std::size_t leaves);
/// Hub 0 over a rim cycle 1..spikes; spikes < 3 is rejected.
Graph wheel(std::size_t spikes);
/// Boundary of the (d+1)-dimensional cross-polytope: 2d+2 vertices, vertex v
/// adjacent to all but its antipode v ^ 1.
Graph cross_polytope(std::size_t d);
Graph octahedron();
Graph icosahedron();
/// G(n, p): pair (u, v), u < v in lexicographic order, is an edge iff
/// rng.uniform01() < p.
Graph random_er(std::size_t n, double p, std::uint64_t seed);
/// Iterated pyramid extension: each new vertex is joined to a random cone
/// (a vertex plus a random subset of its neighbors) of the current graph.
Graph random_contractible(std::size_t n, std::uint64_t seed);
/// Vertex i > 0 attaches to a uniformly chosen earlier vertex.
Graph random_tree(std::size_t n, std::uint64_t seed);
/// rows x cols triangulated torus, (i,j) ~ (i±1,j), (i,j±1), (i+1,j+1), (i-1,j-1).
Graph triangular_torus(std::size_t rows, std::size_t cols);
}  // namespace generate

/// Generator spec such as "cycle:5", "cross_polytope:3", "random_er:10,0.4,7".
Graph generate_from_spec(const std::string& spec);

struct Metrics {
  std::size_t components = 0;
  /// Diameter of the largest component when disconnected; nullopt for n = 0.
  std::optional<std::size_t> diameter;
  bool disconnected = false;
  /// Mean distance over connected ordered pairs (characteristic length).
  double mean_distance = 0.0;
  /// Mean local clustering over vertices of degree >= 2.
  double clustering = 0.0;
  double edge_density = 0.0;
};

/// BFS distances from a source; unreachable entries are nullopt.
std::vector<std::optional<std::size_t>> distances_from(const Graph& g, Vertex source);
Metrics metrics(const Graph& g);
std::size_t component_count(const Graph& g);
bool is_connected(const Graph& g);

/// "n m" header followed by m lines "u v".
std::string to_edge_list(const Graph& g);
/// Throws std::invalid_argument naming the offending line.
Graph parse_edge_list(const std::string& text);
std::string to_json(const Graph& g);
Graph parse_json(const std::string& text);
/// Reads either format, sniffing for a leading '{'.
Graph read_graph_file(const std::string& path);

}  // namespace gcalc
