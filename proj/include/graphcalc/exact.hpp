// Exact integer and rational arithmetic shared by every module that checks an
// identity exactly (ranks, determinants, curvature sums).
#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gcalc {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Raised when a computation would exceed a configured size budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an operation's precondition on its input graph is not met
/// (e.g. flatness on a non-geometric graph).
class InapplicableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string to_string(const Rational& q);
double to_double(const Rational& q);

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix transpose() const;
  bool is_zero() const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

/// Rank over the rationals. Fraction-free elimination in 64-bit arithmetic
/// with overflow detection, falling back to GMP integers.
std::size_t exact_rank(const IntMatrix& m);

/// Determinant via Bareiss elimination over big integers.
BigInt bareiss_determinant(const IntMatrix& m);

/// Determinant via ordinary Gaussian elimination over the rationals.
Rational rational_determinant(std::vector<std::vector<Rational>> m);

/// Small determinant in 64-bit arithmetic (Bareiss, checked); throws
/// std::overflow_error when an intermediate leaves the int64 range.
std::int64_t small_determinant(const IntMatrix& m);

BigInt binomial(unsigned n, unsigned k);

}  // namespace gcalc
