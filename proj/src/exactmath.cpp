#include "perfectum/exactmath.hpp"

#include <algorithm>
#include <sstream>

namespace perfectum {

ExactRat make_rat(const ExactInt& num, const ExactInt& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  ExactRat r(num, den);
  r.canonicalize();
  return r;
}

ExactInt pow_int(const ExactInt& base, unsigned long exp) {
  ExactInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

ExactInt binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  ExactInt r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    // division is exact: r holds C(n-k+i, i) * i! / i! at each step
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(i));
  }
  return r;
}

bool is_prime(long v) {
  if (v < 2) return false;
  for (long d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

std::optional<PrimePower> prime_power_decompose(long q) {
  if (q < 2 || q > 65536) return std::nullopt;
  long p = q;
  for (long d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  int f = 0;
  long rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++f;
  }
  if (rest != 1) return std::nullopt;
  return PrimePower{p, f};
}

std::string rat_to_string(const ExactRat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

DensePoly::DensePoly(std::vector<ExactRat> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

void DensePoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

DensePoly DensePoly::constant(const ExactRat& c) {
  return DensePoly{{c}};
}

DensePoly DensePoly::monomial(const ExactRat& c, std::size_t k) {
  std::vector<ExactRat> v(k + 1, ExactRat(0));
  v[k] = c;
  return DensePoly{std::move(v)};
}

ExactRat DensePoly::coeff(std::size_t i) const {
  if (i >= coeffs_.size()) return ExactRat(0);
  return coeffs_[i];
}

ExactRat DensePoly::eval(const ExactRat& x) const {
  ExactRat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

DensePoly DensePoly::operator+(const DensePoly& o) const {
  std::vector<ExactRat> v(std::max(coeffs_.size(), o.coeffs_.size()), ExactRat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
  return DensePoly{std::move(v)};
}

DensePoly DensePoly::operator-(const DensePoly& o) const {
  std::vector<ExactRat> v(std::max(coeffs_.size(), o.coeffs_.size()), ExactRat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] -= o.coeffs_[i];
  return DensePoly{std::move(v)};
}

DensePoly DensePoly::operator*(const DensePoly& o) const {
  if (is_zero() || o.is_zero()) return zero();
  std::vector<ExactRat> v(coeffs_.size() + o.coeffs_.size() - 1, ExactRat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  return DensePoly{std::move(v)};
}

DensePoly DensePoly::scaled(const ExactRat& c) const {
  std::vector<ExactRat> v = coeffs_;
  for (auto& x : v) x *= c;
  return DensePoly{std::move(v)};
}

DensePoly::DivResult DensePoly::divrem(const DensePoly& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("divrem: division by zero polynomial");
  std::vector<ExactRat> rem = coeffs_;
  long dd = divisor.degree();
  if (degree() < dd) return {zero(), *this};
  std::vector<ExactRat> quot(coeffs_.size() - dd, ExactRat(0));
  const ExactRat& lead = divisor.coeffs_.back();
  for (long i = static_cast<long>(rem.size()) - 1; i >= dd; --i) {
    if (rem[i] == 0) continue;
    ExactRat c = rem[i] / lead;
    quot[i - dd] = c;
    for (long j = 0; j <= dd; ++j) rem[i - dd + j] -= c * divisor.coeffs_[j];
  }
  return {DensePoly{std::move(quot)}, DensePoly{std::move(rem)}};
}

DensePoly DensePoly::compose_linear(const ExactRat& a, const ExactRat& b) const {
  // Horner with polynomial accumulator in (a*x + b)
  DensePoly lin{{b, a}};
  DensePoly acc = zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * lin + constant(*it);
  return acc;
}

std::string DensePoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const ExactRat& c = coeffs_[i];
    if (c == 0) continue;
    ExactRat mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool unit = (mag == 1);
    if (i == 0) {
      os << rat_to_string(mag);
    } else {
      if (!unit) os << rat_to_string(mag);
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::vector<long> integer_roots(const DensePoly& p, long lo, long hi) {
  if (p.is_zero())
    throw std::invalid_argument("integer_roots: zero polynomial, all points are roots");
  if (lo > hi) throw std::invalid_argument("integer_roots: lo > hi");
  std::vector<long> roots;
  for (long t = lo; t <= hi; ++t)
    if (p.eval(ExactRat(t)) == 0) roots.push_back(t);
  return roots;
}

}  // namespace perfectum
