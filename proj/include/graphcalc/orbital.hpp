// Orbital networks on Z_n and Z_n^* generated by integer polynomial maps, and
// number-theoretic claims about their connectivity, triangles and Euler
// characteristic.
#pragma once

#include "graphcalc/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gcalc {

/// Integer polynomial, coefficients in ascending powers.
struct Polynomial {
  std::vector<std::int64_t> coeffs;
  std::uint64_t operator()(std::uint64_t x, std::uint64_t n) const;
  std::string to_string() const;
};
Polynomial linear(std::int64_t a, std::int64_t b);     // a x + b
Polynomial monomial(unsigned power);                   // x^power
Polynomial quadratic_shift(std::int64_t c);            // x^2 + c

enum class Domain { ring, units };

struct OrbitalSpec {
  std::uint64_t modulus = 2;
  Domain domain = Domain::ring;
  std::vector<Polynomial> maps;
};

struct OrbitalGraph {
  Graph graph;
  std::vector<std::uint64_t> labels;  // residue of each vertex
};
/// Edges x - T(x) for x != T(x). A map leaving the domain (a non-unit image
/// on Z_n^*) contributes no edge. Throws std::invalid_argument for n < 2.
OrbitalGraph orbital_graph(const OrbitalSpec& spec);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
bool is_prime(std::uint64_t n);
/// Multiplicative order of a mod n; 0 when gcd(a, n) != 1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);

struct NumberPredicates {
  bool prime = false;
  bool two_primitive_root = false;  // ord_n(2) = phi(n)
  bool fermat_prime = false;        // prime 2^(2^k) + 1
  bool pierpont_prime = false;      // prime 2^u 3^v + 1
};
NumberPredicates number_predicates(std::uint64_t n);

struct ClaimRanges {
  std::uint64_t connectivity_max = 2000;  // claims 1, 2, 4
  std::uint64_t collatz_max = 2000;       // claim 3, primes above 17
  std::uint64_t single_map_max = 500;     // claim 5, x^2 + a with a < 50
  std::uint64_t two_map_min = 100;        // claim 6, primes in [min, max]
  std::uint64_t two_map_max = 500;
  std::uint64_t triangle_max = 2000;      // claim 7, primes with a < 50
  std::uint64_t shift_bound = 50;
};

struct ClaimReport {
  std::string id;
  std::string statement;
  std::string range;
  std::size_t cases = 0;
  std::vector<std::string> counterexamples = {};
  std::string note = {};
  double seconds = 0.0;
  bool passed() const { return counterexamples.empty(); }
};

ClaimReport claim_doubling_connected(std::uint64_t max_n);
ClaimReport claim_squaring_connected(std::uint64_t max_n);
ClaimReport claim_collatz_triangles(std::uint64_t max_n);
ClaimReport claim_square_cube_connected(std::uint64_t max_n);
ClaimReport claim_single_map(std::uint64_t max_n, std::uint64_t shift_bound);
ClaimReport claim_two_maps_negative_chi(std::uint64_t min_p, std::uint64_t max_p, std::uint64_t shift_bound);
ClaimReport claim_quadratic_triangles(std::uint64_t max_p, std::uint64_t shift_bound);
std::vector<ClaimReport> claim_suite(const ClaimRanges& ranges = {});

std::size_t triangle_count(const Graph& g);
std::int64_t orbital_euler_characteristic(const Graph& g);

}  // namespace gcalc
