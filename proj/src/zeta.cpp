#include "zetalab/zeta.hpp"

#include <cmath>

namespace zetalab {

FunctionId FunctionId::parse(const std::string& name) {
  if (name == "zeta-star") return zeta_star();
  if (name == "zeta-trivial") return zeta_trivial();
  const std::string prefix = "zeta-hat:";
  if (name.rfind(prefix, 0) == 0) {
    long l = 0;
    try {
      l = std::stol(name.substr(prefix.size()));
    } catch (...) {
      throw DomainError("bad zeta-hat index in '" + name + "'");
    }
    return zeta_hat(l);
  }
  throw DomainError("unknown function '" + name +
                    "' (expected zeta-star, zeta-trivial, or zeta-hat:L)");
}

std::string FunctionId::label() const {
  switch (kind) {
    case Kind::ZetaStar: return "zeta-star";
    case Kind::ZetaTrivial: return "zeta-trivial";
    case Kind::ZetaHat: return "zeta-hat-" + std::to_string(hat_l);
  }
  return "?";
}

// Internal: eta(s) Taylor coefficients at s=0 through `order`, at precision
// wp, using N terms of the Euler-transformed alternating series with exact
// binomial-CDF weights c_{N,k} = 2^{-(N+1)} sum_{j>k} C(N+1,j).
static std::vector<Real> eta_coeffs(long order, long N, mpfr_prec_t wp) {
  // integer weight walk: A_k = sum_{j=k+1..N+1} C(N+1,j), downward in k
  std::vector<Real> c((size_t)N + 1, Real(wp));
  {
    Integer A(1);                     // A_N = C(N+1,N+1)
    Integer binom(1);                 // C(N+1, k+2) seeded at k = N-1
    Real scale = Real::pow2(-(N + 1), wp);
    c[N] = A.to_real(wp);
    c[N] *= scale;
    for (long k = N - 1; k >= 0; --k) {
      // C(N+1, k+1) = C(N+1, k+2) * (k+2) / (N-k)
      mpz_mul_ui(binom.raw(), binom.raw(), (unsigned long)(k + 2));
      mpz_divexact_ui(binom.raw(), binom.raw(), (unsigned long)(N - k));
      A += binom;
      c[k] = A.to_real(wp);
      c[k] *= scale;
    }
  }
  std::vector<Real> eta;
  eta.reserve(order + 1);
  for (long j = 0; j <= order; ++j) {
    eta.emplace_back(wp);
    eta.back().set_zero();
  }
  Real lnk(wp), t(wp), term(wp);
  for (long k = 0; k <= N; ++k) {
    if (k % 2 == 1) c[k].negate();
    if (k == 0) {
      eta[0] += c[0];  // ln 1 = 0: only the j=0 coefficient
      continue;
    }
    t.set(k + 1);
    mpfr_log(lnk.raw(), t.raw(), MPFR_RNDN);
    lnk.negate();  // -ln(k+1)
    term = c[k];
    for (long j = 0; j <= order; ++j) {
      eta[j] += term;
      if (j < order) {
        term *= lnk;
        term /= (j + 1);
      }
    }
  }
  return eta;
}

PowerSeries zeta_star_taylor(long order, const PrecisionContext& ctx) {
  if (order < 0) throw DomainError("zeta_star_taylor: order must be >= 0");
  // Alternating-series terms decay like 2^-N; the binomial transport to the
  // w-plane downstream amplifies absolute error by up to 2^order, so carry
  // order extra bits here.
  mpfr_prec_t wp = (mpfr_prec_t)(ctx.work() + order + 64);
  long N = ctx.bits + ctx.guard_bits + order + 48;
  long cap = 4 * ctx.bits + order + 48;
  if (N > cap)
    throw PrecisionError("zeta_star_taylor: term budget exceeded; increase bits");
  std::vector<Real> eta = eta_coeffs(order, N, wp);

  // numerator 2(s-1)eta(s)
  std::vector<Real> num;
  num.reserve(order + 1);
  num.emplace_back(wp);
  num[0].set(eta[0]);
  num[0] *= -2L;
  for (long j = 1; j <= order; ++j) {
    num.emplace_back(wp);
    sub(num[j], eta[j - 1], eta[j]);
    num[j] *= 2L;
  }
  // denominator 1 - 2^{1-s} = -1 + 2 s ln2 - ...: d_0 = -1, d_j = -2(-ln2)^j/j!
  Real ln2(wp);
  mpfr_const_log2(ln2.raw(), MPFR_RNDN);
  ln2.negate();
  std::vector<Real> den;
  den.reserve(order + 1);
  den.emplace_back(wp);
  den[0].set(-1L);
  Real t(wp);
  t.set(-2L);
  for (long j = 1; j <= order; ++j) {
    t *= ln2;
    t /= j;
    den.emplace_back(wp);
    den[j].set(t);
  }
  // divide: a_m = (num_m - sum_{k=1..m} den_k a_{m-k}) / den_0
  std::vector<Real> a;
  a.reserve(order + 1);
  for (long m = 0; m <= order; ++m) {
    a.emplace_back(wp);
    a[m].set(num[m]);
    for (long k = 1; k <= m; ++k) submul(a[m], den[k], a[m - k]);
    a[m] /= den[0];
  }
  // a_0 must equal 1; verify and snap
  Real dev(wp);
  dev.set(a[0]);
  dev -= Real::of(1L, wp);
  mpfr_abs(dev.raw(), dev.raw(), MPFR_RNDN);
  if (dev > Real::pow2(-(ctx.bits + ctx.guard_bits), wp))
    throw PrecisionError("zeta_star_taylor: normalization check a_0 = 1 failed");

  PowerSeries out(ctx, order, "zeta-star");
  out.at(0).set(1.0, 0.0);
  for (long m = 1; m <= order; ++m) out.at(m).re.set(a[m]);
  return out;
}

PowerSeries zeta_trivial_taylor(long order, const PrecisionContext& ctx, OracleTable& oracle) {
  if (order < 0) throw DomainError("zeta_trivial_taylor: order must be >= 0");
  // log zeta_T = (z/2) ln pi - ln Gamma(1 + z/2)
  //            = ((ln pi + gamma)/2) z + sum_{k>=2} (-1)^{k+1} zeta(k) z^k / (k 2^k)
  PowerSeries logser(ctx, order, "log-zeta-trivial");
  mpfr_prec_t wp = (mpfr_prec_t)ctx.work();
  if (order >= 1) {
    Real c1(wp);
    add(c1, oracle.ln_pi(), oracle.euler_gamma());
    c1 /= 2L;
    logser.at(1).re.set(c1);
  }
  Real pw(wp), c(wp);
  pw.set(1L);
  pw /= 2L;  // (1/2)^k running
  for (long k = 2; k <= order; ++k) {
    pw /= 2L;
    div(c, oracle.zeta_int(k), Real::of(k, wp));
    c *= pw;
    if (k % 2 == 0) c.negate();
    logser.at(k).re.set(c);
  }
  PowerSeries out = series_exp(logser);
  out.label = "zeta-trivial";
  return out;
}

PowerSeries zeta_hat_taylor(long l, long order, const PrecisionContext& ctx) {
  if (l < 1) throw DomainError("zeta_hat_taylor: l must be >= 1");
  PowerSeries star = zeta_star_taylor(order, ctx);
  if (l == 1) return star;
  // prod_{k=1..l-1} (1 - z/z_k) with z_k = -2k, i.e. (1 + z/(2k)); exact
  // rational convolution, then rounded once.
  std::vector<Rational> poly{Rational(1, 1)};
  for (long k = 1; k <= l - 1; ++k) {
    std::vector<Rational> next((size_t)poly.size() + 1);
    Rational step(1, 2 * k);
    for (size_t i = 0; i < poly.size(); ++i) {
      mpq_add(next[i].raw(), next[i].raw(), poly[i].raw());
      Rational shifted = poly[i];
      shifted *= step;
      mpq_add(next[i + 1].raw(), next[i + 1].raw(), shifted.raw());
    }
    poly = std::move(next);
  }
  mpfr_prec_t wp = (mpfr_prec_t)ctx.work();
  std::vector<Complex> p;
  p.reserve(poly.size());
  for (const Rational& q : poly) {
    Complex c(wp);
    c.re = q.to_real(wp);
    p.push_back(std::move(c));
  }
  PowerSeries out = series_div_poly(star, p);
  out.label = "zeta-hat-" + std::to_string(l);
  return out;
}

PowerSeries taylor_of(const FunctionId& f, long order, const PrecisionContext& ctx) {
  switch (f.kind) {
    case FunctionId::Kind::ZetaStar:
      return zeta_star_taylor(order, ctx);
    case FunctionId::Kind::ZetaTrivial: {
      OracleTable oracle(ctx);
      return zeta_trivial_taylor(order, ctx, oracle);
    }
    case FunctionId::Kind::ZetaHat:
      return zeta_hat_taylor(f.hat_l, order, ctx);
  }
  throw DomainError("taylor_of: bad function id");
}

PowerSeries moebius_pullback(const PowerSeries& a) {
  a.require_unit_head("moebius_pullback");
  long order = a.order();
  // theta_m = sum_{k=1..m} a_k (-1)^{m-k} C(m-1, k-1); binomials reach
  // 2^{m-1}, so the accumulation runs at order extra bits.
  mpfr_prec_t wp = (mpfr_prec_t)(a.ctx.work() + order + 32);
  PowerSeries out(a.ctx, order, a.label + "~");
  out.at(0).set(1.0, 0.0);
  Real accr(wp), acci(wp), w(wp), t(wp);
  Integer b;
  for (long m = 1; m <= order; ++m) {
    accr.set_zero();
    acci.set_zero();
    for (long k = 1; k <= m; ++k) {
      mpz_bin_uiui(b.raw(), (unsigned long)(m - 1), (unsigned long)(k - 1));
      if ((m - k) % 2 == 1) mpz_neg(b.raw(), b.raw());
      mpfr_set_z(w.raw(), b.raw(), MPFR_RNDN);
      addmul(accr, w, a[k].re);
      addmul(acci, w, a[k].im);
    }
    out.at(m).re.set(accr);
    out.at(m).im.set(acci);
  }
  return out;
}

PowerSeries moebius_pushforward(const PowerSeries& theta) {
  theta.require_unit_head("moebius_pushforward");
  long order = theta.order();
  mpfr_prec_t wp = (mpfr_prec_t)(theta.ctx.work() + order + 32);
  PowerSeries out(theta.ctx, order, theta.label + "-z");
  out.at(0).set(1.0, 0.0);
  Real accr(wp), acci(wp), w(wp);
  Integer b;
  for (long m = 1; m <= order; ++m) {
    accr.set_zero();
    acci.set_zero();
    for (long k = 1; k <= m; ++k) {
      // a_m = sum_k theta_k C(m-1, m-k)
      mpz_bin_uiui(b.raw(), (unsigned long)(m - 1), (unsigned long)(m - k));
      mpfr_set_z(w.raw(), b.raw(), MPFR_RNDN);
      addmul(accr, w, theta[k].re);
      addmul(acci, w, theta[k].im);
    }
    out.at(m).re.set(accr);
    out.at(m).im.set(acci);
  }
  return out;
}

PowerSeries tau_coefficients(const PowerSeries& theta) {
  PowerSeries out = series_reciprocal(theta);
  out.label = "tau(" + theta.label + ")";
  return out;
}

PowerSeries theta_of(const FunctionId& f, long order, const PrecisionContext& ctx) {
  PowerSeries a = taylor_of(f, order, ctx);
  PowerSeries th = moebius_pullback(a);
  th.label = "theta(" + f.label() + ")";
  return th;
}

}  // namespace zetalab
