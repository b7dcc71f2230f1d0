#include "perfectum/krawtchouk.hpp"

#include <algorithm>

namespace perfectum {

KrawtchoukContext kraw_context(long n, long q) {
  if (n < 1) throw std::invalid_argument("kraw_context: n must be >= 1");
  if (!prime_power_decompose(q)) throw std::invalid_argument("kraw_context: q is not a prime power");
  return KrawtchoukContext{n, q, q * q};
}

ExactInt kraw_eval(const KrawtchoukContext& ctx, long i, long w) {
  if (i < 0 || i > ctx.n) throw std::out_of_range("kraw_eval: degree index out of range");
  if (w < 0 || w > ctx.n) throw std::out_of_range("kraw_eval: point out of range");
  ExactInt acc = 0;
  ExactInt qm1 = ctx.Q - 1;
  for (long r = 0; r <= i; ++r) {
    ExactInt term = pow_int(qm1, static_cast<unsigned long>(i - r)) * binomial(ctx.n - w, i - r) *
                    binomial(w, r);
    if (r % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

namespace {

// C(x, r) = x (x-1) ... (x-r+1) / r! as a polynomial in x
DensePoly binom_poly_x(long r) {
  DensePoly p = DensePoly::constant(ExactRat(1));
  ExactInt fact = 1;
  for (long t = 0; t < r; ++t) {
    p = p * DensePoly{{ExactRat(-t), ExactRat(1)}};
    fact *= t + 1;
  }
  return p.scaled(make_rat(1, fact));
}

// C(c - x, r) as a polynomial in x
DensePoly binom_poly_cminusx(long c, long r) {
  DensePoly p = DensePoly::constant(ExactRat(1));
  ExactInt fact = 1;
  for (long t = 0; t < r; ++t) {
    p = p * DensePoly{{ExactRat(c - t), ExactRat(-1)}};
    fact *= t + 1;
  }
  return p.scaled(make_rat(1, fact));
}

}  // namespace

DensePoly kraw_poly(const KrawtchoukContext& ctx, long i) {
  if (i < 0 || i > ctx.n) throw std::out_of_range("kraw_poly: degree index out of range");
  DensePoly acc;
  ExactInt qm1 = ctx.Q - 1;
  for (long r = 0; r <= i; ++r) {
    ExactRat scale(pow_int(qm1, static_cast<unsigned long>(i - r)));
    if (r % 2 != 0) scale = -scale;
    acc = acc + (binom_poly_cminusx(ctx.n, i - r) * binom_poly_x(r)).scaled(scale);
  }
  return acc;
}

ExactInt char_sum_bruteforce(const KrawtchoukContext& ctx, const ErrorClassVector& u, long i) {
  if (ctx.n > 6 || (ctx.q != 2 && ctx.q != 3))
    throw std::invalid_argument("char_sum_bruteforce: supported range is n <= 6, q in {2, 3}");
  if (static_cast<long>(u.size()) != ctx.n)
    throw std::invalid_argument("char_sum_bruteforce: u has wrong length");
  if (i < 0 || i > ctx.n) throw std::out_of_range("char_sum_bruteforce: weight out of range");

  const int q = static_cast<int>(ctx.q);
  const int pairs = q * q;  // per-coordinate classes including (0,0)
  std::vector<ExactInt> counts(static_cast<std::size_t>(q), ExactInt(0));

  // odometer over all (q^2)^n class vectors; keep those of weight i
  std::vector<int> v(static_cast<std::size_t>(ctx.n), 0);
  while (true) {
    long weight = 0;
    for (long j = 0; j < ctx.n; ++j)
      if (v[j] != 0) ++weight;
    if (weight == i) {
      int phase = 0;
      for (long j = 0; j < ctx.n; ++j) {
        int a = v[j] / q, b = v[j] % q;
        int au = u[j].first, bu = u[j].second;
        phase = (phase + au * b - bu * a) % q;
      }
      counts[static_cast<std::size_t>(((phase % q) + q) % q)] += 1;
    }
    long j = 0;
    while (j < ctx.n && ++v[j] == pairs) v[j++] = 0;
    if (j == ctx.n) break;
  }

  // reduce mod 1 + omega + ... + omega^{q-1}: subtract the top count from all
  ExactInt top = counts.back();
  for (int t = 1; t < q - 1; ++t)
    if (counts[t] != top)
      throw std::logic_error("char_sum_bruteforce: character sum is not a rational integer");
  return counts[0] - top;
}

std::vector<ExactRat> kraw_coefficients(const KrawtchoukContext& ctx, const DensePoly& alpha) {
  if (alpha.degree() > ctx.n)
    throw std::invalid_argument("kraw_coefficients: degree exceeds n");
  if (alpha.is_zero()) return {};
  ExactInt Qn = pow_int(ExactInt(ctx.Q), static_cast<unsigned long>(ctx.n));
  std::vector<ExactRat> values(static_cast<std::size_t>(ctx.n) + 1);
  for (long k = 0; k <= ctx.n; ++k) values[k] = alpha.eval(ExactRat(k));
  std::vector<ExactRat> out(static_cast<std::size_t>(alpha.degree()) + 1);
  for (long i = 0; i <= alpha.degree(); ++i) {
    ExactRat acc(0);
    for (long k = 0; k <= ctx.n; ++k) acc += values[k] * ExactRat(kraw_eval(ctx, k, i));
    out[i] = acc / ExactRat(Qn);
  }
  return out;
}

}  // namespace perfectum
