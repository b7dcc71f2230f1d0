#pragma once

#include <utility>
#include <vector>

#include "perfectum/exactmath.hpp"

namespace perfectum {

// Context for Krawtchouk polynomials over the error-class alphabet of a
// length-n code on q-level systems. Each coordinate carries a pair over
// GF(q), so the alphabet size is Q = q^2.
struct KrawtchoukContext {
  long n;
  long q;
  long Q;
};

// Validates n >= 1 and q a prime power >= 2.
KrawtchoukContext kraw_context(long n, long q);

// P_i(w) = sum_r (-1)^r (Q-1)^{i-r} C(n-w, i-r) C(w, r), exact.
ExactInt kraw_eval(const KrawtchoukContext& ctx, long i, long w);

// P_i(x) as a degree-i polynomial in x (falling-factorial expansion of the
// binomials); agrees with kraw_eval at every integer 0..n.
DensePoly kraw_poly(const KrawtchoukContext& ctx, long i);

// One error class per coordinate: a pair (a, b) over the integers mod q.
using ErrorClassVector = std::vector<std::pair<int, int>>;

// Brute-force character sum over all weight-i error classes v against the
// fixed class u: sum of omega^{sum_j (a_j b'_j - a'_j b_j)} with omega a
// primitive q-th root of unity, accumulated exactly per power of omega and
// reduced with 1 + omega + ... + omega^{q-1} = 0. Restricted to n <= 6 and
// prime q in {2, 3}. Throws if the reduced value is not a rational integer.
ExactInt char_sum_bruteforce(const KrawtchoukContext& ctx, const ErrorClassVector& u, long i);

// Krawtchouk coefficients of alpha: alpha_i = (1/Q^n) sum_k alpha(k) P_k(i)
// for i = 0..deg(alpha). Requires deg(alpha) <= n. The reconstruction
// sum_i alpha_i P_i(x) equals alpha exactly.
std::vector<ExactRat> kraw_coefficients(const KrawtchoukContext& ctx, const DensePoly& alpha);

}  // namespace perfectum
