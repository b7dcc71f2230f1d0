#pragma once

#include <vector>

#include "perfectum/exactmath.hpp"
#include "perfectum/krawtchouk.hpp"

namespace perfectum {

// alpha(x) = (q^n / K) * prod_j (1 - x / sigma_j), vanishing at every
// nonzero weight sigma_j present in a code's weight distribution.
struct AnnihilatorPoly {
  DensePoly poly;
  std::vector<long> sigmas;  // ascending, in (0, n]
  ExactRat leading_scale;    // poly(0) = q^n / K
};

// Validated construction from the nonzero weights. Requires sigmas strictly
// increasing in (0, n] and K_num a positive divisor of q^n.
AnnihilatorPoly annihilator_from_sigmas(long n, long q, const ExactInt& K_num,
                                        const std::vector<long>& sigmas);

// Unchecked carrier for an arbitrary polynomial (negative controls). The
// sigma list is left empty; leading_scale = poly(0).
AnnihilatorPoly annihilator_from_poly(const DensePoly& poly);

// L_e(x) = P_0(x; n) + ... + P_e(x; n) = P_e(x-1; n-1)
//        = sum_j (-1)^j (q^2-1)^{e-j} C(x-1, j) C(n-x, e-j)
struct LloydPoly {
  long e;
  long n;
  long q;
  DensePoly poly;
};

// Builds the closed form and asserts exact equality with the partial-sum
// and shifted forms; a mismatch throws (it would falsify the implementation).
LloydPoly lloyd_poly(long e, long n, long q);

// Integer zeros of L_e in the open interval (0, n), ascending.
std::vector<long> lloyd_zeros(long e, long n, long q);

// True iff L_e has exactly e distinct integer zeros in (0, n), each simple
// (checked by exact synthetic division down to a nonzero constant).
bool lloyd_condition(long e, long n, long q);

// True iff the Krawtchouk coefficients of a.poly are s+1 ones, i.e. alpha
// is the Lloyd polynomial of its degree.
bool lemma5_check(const AnnihilatorPoly& a, const KrawtchoukContext& ctx);

// True iff a divides b exactly (zero remainder). Throws for zero a.
bool divides(const DensePoly& a, const DensePoly& b);

}  // namespace perfectum
