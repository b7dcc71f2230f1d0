#include "perfectum/annihilator.hpp"

namespace perfectum {

AnnihilatorPoly annihilator_from_sigmas(long n, long q, const ExactInt& K_num,
                                        const std::vector<long>& sigmas) {
  if (!prime_power_decompose(q))
    throw std::invalid_argument("annihilator_from_sigmas: q is not a prime power");
  for (std::size_t j = 0; j < sigmas.size(); ++j) {
    if (sigmas[j] <= 0 || sigmas[j] > n)
      throw std::invalid_argument("annihilator_from_sigmas: sigma out of (0, n]");
    if (j > 0 && sigmas[j] <= sigmas[j - 1])
      throw std::invalid_argument("annihilator_from_sigmas: sigmas not strictly increasing");
  }
  ExactInt qn = pow_int(ExactInt(q), static_cast<unsigned long>(n));
  if (K_num <= 0 || qn % K_num != 0)
    throw std::invalid_argument("annihilator_from_sigmas: K does not divide q^n");
  ExactRat scale = make_rat(qn, K_num);
  DensePoly p = DensePoly::constant(scale);
  for (long s : sigmas) p = p * DensePoly{{ExactRat(1), make_rat(-1, ExactInt(s))}};
  return AnnihilatorPoly{p, sigmas, scale};
}

AnnihilatorPoly annihilator_from_poly(const DensePoly& poly) {
  return AnnihilatorPoly{poly, {}, poly.eval(ExactRat(0))};
}

LloydPoly lloyd_poly(long e, long n, long q) {
  if (e < 0 || e >= n) throw std::invalid_argument("lloyd_poly: requires 0 <= e < n");
  KrawtchoukContext ctx = kraw_context(n, q);

  // closed form
  DensePoly closed;
  ExactInt qm1 = ctx.Q - 1;
  for (long j = 0; j <= e; ++j) {
    // C(x-1, j) * C(n-x, e-j)
    DensePoly cx = DensePoly::constant(ExactRat(1));
    ExactInt fact = 1;
    for (long t = 0; t < j; ++t) {
      cx = cx * DensePoly{{ExactRat(-1 - t), ExactRat(1)}};
      fact *= t + 1;
    }
    cx = cx.scaled(make_rat(1, fact));
    DensePoly cnx = DensePoly::constant(ExactRat(1));
    fact = 1;
    for (long t = 0; t < e - j; ++t) {
      cnx = cnx * DensePoly{{ExactRat(n - t), ExactRat(-1)}};
      fact *= t + 1;
    }
    cnx = cnx.scaled(make_rat(1, fact));
    ExactRat scale(pow_int(qm1, static_cast<unsigned long>(e - j)));
    if (j % 2 != 0) scale = -scale;
    closed = closed + (cx * cnx).scaled(scale);
  }

  // partial sum of Krawtchouk polynomials
  DensePoly partial;
  for (long i = 0; i <= e; ++i) partial = partial + kraw_poly(ctx, i);

  // shifted form P_e(x-1; n-1)
  DensePoly shifted =
      kraw_poly(kraw_context(n - 1, q), e).compose_linear(ExactRat(1), ExactRat(-1));

  if (!(closed == partial) || !(closed == shifted))
    throw std::logic_error("lloyd_poly: the three construction routes disagree");
  return LloydPoly{e, n, q, closed};
}

std::vector<long> lloyd_zeros(long e, long n, long q) {
  if (e == 0) return {};
  return integer_roots(lloyd_poly(e, n, q).poly, 1, n - 1);
}

bool lloyd_condition(long e, long n, long q) {
  LloydPoly L = lloyd_poly(e, n, q);
  std::vector<long> zeros = e == 0 ? std::vector<long>{} : integer_roots(L.poly, 1, n - 1);
  if (static_cast<long>(zeros.size()) != e) return false;
  // each zero must be simple: divide out and end at a nonzero constant
  DensePoly rest = L.poly;
  for (long z : zeros) {
    auto dr = rest.divrem(DensePoly{{ExactRat(-z), ExactRat(1)}});
    if (!dr.remainder.is_zero()) return false;
    rest = dr.quotient;
  }
  return rest.degree() == 0;
}

bool lemma5_check(const AnnihilatorPoly& a, const KrawtchoukContext& ctx) {
  std::vector<ExactRat> coeffs = kraw_coefficients(ctx, a.poly);
  if (a.poly.is_zero()) return false;
  for (const ExactRat& c : coeffs)
    if (c != 1) return false;
  return true;
}

bool divides(const DensePoly& a, const DensePoly& b) {
  if (a.is_zero()) throw std::invalid_argument("divides: zero divisor polynomial");
  return b.divrem(a).remainder.is_zero();
}

}  // namespace perfectum
