#include "graphcalc/orbital.hpp"
#include "graphcalc/complex.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

namespace gcalc {

std::uint64_t Polynomial::operator()(std::uint64_t x, std::uint64_t n) const {
  // Horner with signed coefficients reduced into [0, n).
  unsigned __int128 acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    const std::int64_t c = *it % static_cast<std::int64_t>(n);
    const std::uint64_t cm = static_cast<std::uint64_t>(c < 0 ? c + static_cast<std::int64_t>(n) : c);
    acc = (acc * x + cm) % n;
  }
  return static_cast<std::uint64_t>(acc);
}

std::string Polynomial::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    const std::int64_t c = coeffs[i];
    if (c == 0) continue;
    if (!first) out << (c < 0 ? "-" : "+");
    else if (c < 0) out << "-";
    const std::int64_t a = c < 0 ? -c : c;
    if (a != 1 || i == 0) out << a;
    if (i >= 1) out << "x";
    if (i >= 2) out << "^" << i;
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

Polynomial linear(std::int64_t a, std::int64_t b) { return {{b, a}}; }

Polynomial monomial(unsigned power) {
  Polynomial p;
  p.coeffs.assign(power + 1, 0);
  p.coeffs[power] = 1;
  return p;
}

Polynomial quadratic_shift(std::int64_t c) { return {{c, 0, 1}}; }

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

OrbitalGraph orbital_graph(const OrbitalSpec& spec) {
  const std::uint64_t n = spec.modulus;
  if (n < 2) throw std::invalid_argument("orbital modulus must be at least 2");
  OrbitalGraph out;
  std::vector<std::int64_t> index(n, -1);
  for (std::uint64_t x = 0; x < n; ++x)
    if (spec.domain == Domain::ring || gcd(x, n) == 1) {
      index[x] = static_cast<std::int64_t>(out.labels.size());
      out.labels.push_back(x);
    }
  std::vector<Edge> edges;
  for (const auto& t : spec.maps)
    for (std::uint64_t x : out.labels) {
      const std::uint64_t y = t(x, n);
      if (y == x || index[y] < 0) continue;
      edges.emplace_back(static_cast<Vertex>(index[x]), static_cast<Vertex>(index[y]));
    }
  out.graph = Graph::from_edges(out.labels.size(), edges);
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n) {
  if (n == 1) return 1;
  if (gcd(a % n, n) != 1) return 0;
  std::uint64_t x = a % n, k = 1;
  while (x != 1) {
    x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * a % n);
    ++k;
  }
  return k;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  if (n > 1) result -= result / n;
  return result;
}

NumberPredicates number_predicates(std::uint64_t n) {
  NumberPredicates p;
  p.prime = is_prime(n);
  p.two_primitive_root = n > 2 && multiplicative_order(2, n) == euler_phi(n);
  if (p.prime) {
    std::uint64_t m = n - 1;
    // Fermat: n - 1 is a power of two whose exponent is a power of two.
    if ((m & (m - 1)) == 0) {
      unsigned e = 0;
      while ((std::uint64_t{1} << e) < m) ++e;
      p.fermat_prime = (e & (e - 1)) == 0;
    }
    while (m % 2 == 0) m /= 2;
    while (m % 3 == 0) m /= 3;
    p.pierpont_prime = m == 1;
  }
  return p;
}

std::size_t triangle_count(const Graph& g) {
  const auto c = clique_counts(g, 2);
  return c.size() > 2 ? c[2] : 0;
}

std::int64_t orbital_euler_characteristic(const Graph& g) { return euler_characteristic(g); }

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

std::string range_text(const std::string& what, std::uint64_t lo, std::uint64_t hi) {
  return what + " " + std::to_string(lo) + ".." + std::to_string(hi);
}

bool power_of_two(std::uint64_t n) { return n && (n & (n - 1)) == 0; }

}  // namespace

ClaimReport claim_doubling_connected(std::uint64_t max_n) {
  const auto start = Clock::now();
  ClaimReport r{"orbital_doubling",
                "(Z_n^*, 2x) connected iff n = 2^m or 2 is a primitive root",
                range_text("n in", 2, max_n) + " (units for odd n, ring Z_n for even n)"};
  for (std::uint64_t n = 2; n <= max_n; ++n) {
    const Domain d = n % 2 == 0 ? Domain::ring : Domain::units;
    const bool connected = is_connected(orbital_graph({n, d, {linear(2, 0)}}).graph);
    const bool predicted = power_of_two(n) || number_predicates(n).two_primitive_root;
    ++r.cases;
    if (connected != predicted) r.counterexamples.push_back("n=" + std::to_string(n));
  }
  r.seconds = since(start);
  return r;
}

ClaimReport claim_squaring_connected(std::uint64_t max_n) {
  const auto start = Clock::now();
  ClaimReport r{"orbital_squaring", "(Z_p^*, x^2) connected iff p = 2 or p is a Fermat prime",
                range_text("primes p in", 2, max_n)};
  for (std::uint64_t n = 2; n <= max_n; ++n) {
    if (!is_prime(n)) continue;
    const bool connected = is_connected(orbital_graph({n, Domain::units, {monomial(2)}}).graph);
    const bool predicted = n == 2 || number_predicates(n).fermat_prime;
    ++r.cases;
    if (connected != predicted) r.counterexamples.push_back("p=" + std::to_string(n));
  }
  r.seconds = since(start);
  return r;
}

ClaimReport claim_collatz_triangles(std::uint64_t max_n) {
  const auto start = Clock::now();
  ClaimReport r{"orbital_collatz_triangles", "(Z_p, {2x, 3x+1}) has 4 triangles for primes p > 17",
                range_text("primes p in", 19, max_n)};
  for (std::uint64_t n = 19; n <= max_n; ++n) {
    if (!is_prime(n)) continue;
    const auto t = triangle_count(orbital_graph({n, Domain::ring, {linear(2, 0), linear(3, 1)}}).graph);
    ++r.cases;
    if (t != 4) r.counterexamples.push_back("p=" + std::to_string(n) + " triangles=" + std::to_string(t));
  }
  r.seconds = since(start);
  return r;
}

ClaimReport claim_square_cube_connected(std::uint64_t max_n) {
  const auto start = Clock::now();
  ClaimReport r{"orbital_square_cube", "(Z_p^*, {x^2, x^3}) connected iff p is a Pierpont prime",
                range_text("primes p in", 2, max_n)};
  for (std::uint64_t n = 2; n <= max_n; ++n) {
    if (!is_prime(n)) continue;
    const bool connected = is_connected(orbital_graph({n, Domain::units, {monomial(2), monomial(3)}}).graph);
    ++r.cases;
    if (connected != number_predicates(n).pierpont_prime) r.counterexamples.push_back("p=" + std::to_string(n));
  }
  r.seconds = since(start);
  return r;
}

ClaimReport claim_single_map(std::uint64_t max_n, std::uint64_t shift_bound) {
  const auto start = Clock::now();
  ClaimReport r{"orbital_single_map", "(Z_n, x^2 + a) has no K_4 and chi >= 0",
                range_text("n in", 2, max_n) + ", 0 <= a < min(n, " + std::to_string(shift_bound) + ")"};
  for (std::uint64_t n = 2; n <= max_n; ++n)
    for (std::uint64_t a = 0; a < std::min(n, shift_bound); ++a) {
      const Graph g = orbital_graph({n, Domain::ring, {quadratic_shift(static_cast<std::int64_t>(a))}}).graph;
      const auto c = clique_counts(g);
      std::int64_t chi = 0;
      for (std::size_t k = 0; k < c.size(); ++k) chi += (k % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(c[k]);
      ++r.cases;
      if (c.size() > 3 || chi < 0)
        r.counterexamples.push_back("n=" + std::to_string(n) + " a=" + std::to_string(a) + " chi=" + std::to_string(chi));
    }
  r.seconds = since(start);
  return r;
}

ClaimReport claim_two_maps_negative_chi(std::uint64_t min_p, std::uint64_t max_p, std::uint64_t shift_bound) {
  const auto start = Clock::now();
  ClaimReport r{"orbital_two_maps", "(Z_p, {x^2 + a, x^2 + b}) with a != b has chi < 0 for large primes",
                range_text("primes p in", min_p, max_p) + ", 0 <= a < b < min(p, " + std::to_string(shift_bound) + ")"};
  // Smallest prime from which every scanned prime is uniformly negative.
  std::uint64_t uniform_from = 0;
  for (std::uint64_t p = 2; p <= max_p; ++p) {
    if (!is_prime(p)) continue;
    bool all_negative = true;
    std::string first_failure;
    for (std::uint64_t a = 0; a < std::min(p, shift_bound); ++a)
      for (std::uint64_t b = a + 1; b < std::min(p, shift_bound); ++b) {
        const Graph g = orbital_graph({p, Domain::ring,
                                       {quadratic_shift(static_cast<std::int64_t>(a)),
                                        quadratic_shift(static_cast<std::int64_t>(b))}})
                            .graph;
        const auto chi = euler_characteristic(g);
        if (p >= min_p) ++r.cases;
        if (chi >= 0 && all_negative) {
          all_negative = false;
          first_failure = "p=" + std::to_string(p) + " a=" + std::to_string(a) + " b=" + std::to_string(b) +
                          " chi=" + std::to_string(chi);
        }
      }
    if (!all_negative) {
      uniform_from = 0;
      if (p >= min_p) r.counterexamples.push_back(first_failure);
    } else if (uniform_from == 0) {
      uniform_from = p;
    }
  }
  r.note = uniform_from ? "chi < 0 holds uniformly for all scanned primes p >= " + std::to_string(uniform_from)
                        : "no uniform threshold in range";
  r.seconds = since(start);
  return r;
}

ClaimReport claim_quadratic_triangles(std::uint64_t max_p, std::uint64_t shift_bound) {
  const auto start = Clock::now();
  ClaimReport r{"orbital_quadratic_triangles", "(Z_p, x^2 + a) has zero, one or two triangles",
                range_text("primes p in", 2, max_p) + ", 0 <= a < min(p, " + std::to_string(shift_bound) + ")"};
  for (std::uint64_t p = 2; p <= max_p; ++p) {
    if (!is_prime(p)) continue;
    for (std::uint64_t a = 0; a < std::min(p, shift_bound); ++a) {
      const auto t =
          triangle_count(orbital_graph({p, Domain::ring, {quadratic_shift(static_cast<std::int64_t>(a))}}).graph);
      ++r.cases;
      if (t > 2)
        r.counterexamples.push_back("p=" + std::to_string(p) + " a=" + std::to_string(a) + " triangles=" +
                                    std::to_string(t));
    }
  }
  r.seconds = since(start);
  return r;
}

std::vector<ClaimReport> claim_suite(const ClaimRanges& ranges) {
  return {claim_doubling_connected(ranges.connectivity_max),
          claim_squaring_connected(ranges.connectivity_max),
          claim_collatz_triangles(ranges.collatz_max),
          claim_square_cube_connected(ranges.connectivity_max),
          claim_single_map(ranges.single_map_max, ranges.shift_bound),
          claim_two_maps_negative_chi(ranges.two_map_min, ranges.two_map_max, ranges.shift_bound),
          claim_quadratic_triangles(ranges.triangle_max, ranges.shift_bound)};
}

}  // namespace gcalc
