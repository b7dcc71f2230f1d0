#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace perfectum {

// Exact arithmetic carriers. ExactInt is an arbitrary-precision integer,
// ExactRat a rational kept in lowest terms with positive denominator.
using ExactInt = mpz_class;
using ExactRat = mpq_class;

// Canonical rational from numerator/denominator. Throws on zero denominator.
ExactRat make_rat(const ExactInt& num, const ExactInt& den);

ExactInt pow_int(const ExactInt& base, unsigned long exp);

// Binomial coefficient C(n, k) by the multiplicative formula with exact
// intermediate division. Returns 0 for k < 0 or k > n. Requires n >= 0.
ExactInt binomial(long n, long k);

bool is_prime(long v);

struct PrimePower {
  long p;
  int f;
};

// Decomposes q = p^f for prime p, or nullopt if q is not a prime power.
// Supported range 2 <= q <= 65536.
std::optional<PrimePower> prime_power_decompose(long q);

// "num" when the denominator is 1, otherwise "num/den".
std::string rat_to_string(const ExactRat& r);

// Dense univariate polynomial over ExactRat. Coefficient i is the
// coefficient of x^i; trailing zeros are stripped so the representation is
// canonical. The zero polynomial has an empty coefficient list and
// degree() == -1.
class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(std::vector<ExactRat> coeffs);

  static DensePoly zero() { return DensePoly{}; }
  static DensePoly constant(const ExactRat& c);
  // x^k with coefficient c
  static DensePoly monomial(const ExactRat& c, std::size_t k);

  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<ExactRat>& coeffs() const { return coeffs_; }
  ExactRat coeff(std::size_t i) const;

  ExactRat eval(const ExactRat& x) const;

  DensePoly operator+(const DensePoly& o) const;
  DensePoly operator-(const DensePoly& o) const;
  DensePoly operator*(const DensePoly& o) const;
  DensePoly scaled(const ExactRat& c) const;
  bool operator==(const DensePoly& o) const { return coeffs_ == o.coeffs_; }

  // Euclidean division: *this = q * divisor + r with deg r < deg divisor.
  // Throws on division by the zero polynomial.
  struct DivResult {
    DensePoly quotient;
    DensePoly remainder;
  };
  DivResult divrem(const DensePoly& divisor) const;

  // p(a*x + b)
  DensePoly compose_linear(const ExactRat& a, const ExactRat& b) const;

  // Human-readable form, e.g. "16 - 4x" or "1 - 3/2x + x^2".
  std::string to_string() const;

 private:
  void normalize();
  std::vector<ExactRat> coeffs_;
};

// All integers t in [lo, hi] with p(t) = 0, ascending, found by exact
// evaluation at every point. Throws for the zero polynomial (every point
// is a root) and for lo > hi.
std::vector<long> integer_roots(const DensePoly& p, long lo, long hi);

}  // namespace perfectum
