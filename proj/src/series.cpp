#include "zetalab/series.hpp"

namespace zetalab {

Real PowerSeries::max_abs() const {
  mpfr_prec_t p = (mpfr_prec_t)ctx.work();
  Real best(p), t(p);
  best.set_zero();
  for (const Complex& c : coeffs) {
    c.abs1_to(t);
    if (t > best) best = t;
  }
  return best;
}

Complex PowerSeries::eval(const Real& z) const {
  mpfr_prec_t p = (mpfr_prec_t)ctx.work();
  Complex acc(p);
  for (long k = order(); k >= 0; --k) {
    acc.re *= z;
    acc.im *= z;
    acc += coeffs[k];
  }
  return acc;
}

PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b) {
  if (a.ctx != b.ctx)
    throw DomainError("series_mul: mismatched precision contexts");
  long order = std::min(a.order(), b.order());
  PowerSeries r(a.ctx, order, a.label + "*" + b.label);
  mpfr_prec_t p = (mpfr_prec_t)a.ctx.work();
  Real t(p);
  for (long m = 0; m <= order; ++m) {
    Complex& dst = r.at(m);
    for (long k = 0; k <= m; ++k) caddmul(dst, a[k], b[m - k], t);
  }
  return r;
}

PowerSeries series_reciprocal(const PowerSeries& a) {
  a.require_unit_head("series_reciprocal");
  long order = a.order();
  PowerSeries r(a.ctx, order, "1/(" + a.label + ")");
  mpfr_prec_t p = (mpfr_prec_t)a.ctx.work();
  r.at(0).set(1.0, 0.0);
  Real t(p);
  for (long m = 1; m <= order; ++m) {
    // sum_{k=0..m} a_k r_{m-k} = 0  =>  r_m = -sum_{k=1..m} a_k r_{m-k}
    Complex& dst = r.at(m);
    for (long k = 1; k <= m; ++k) csubmul(dst, a[k], r[m - k], t);
  }
  return r;
}

PowerSeries series_exp(const PowerSeries& a) {
  if (a.coeffs.empty() || !a.coeffs[0].is_zero())
    throw DomainError("series_exp: series must have constant term 0");
  long order = a.order();
  PowerSeries r(a.ctx, order, "exp(" + a.label + ")");
  mpfr_prec_t p = (mpfr_prec_t)a.ctx.work();
  r.at(0).set(1.0, 0.0);
  // r' = a'.r  =>  m r_m = sum_{k=1..m} k a_k r_{m-k}
  Real t(p);
  Complex ka(p);
  for (long m = 1; m <= order; ++m) {
    Complex& dst = r.at(m);
    for (long k = 1; k <= m; ++k) {
      ka.set(a[k]);
      ka.re *= k;
      ka.im *= k;
      caddmul(dst, ka, r[m - k], t);
    }
    dst.re /= m;
    dst.im /= m;
  }
  return r;
}

PowerSeries series_div_poly(const PowerSeries& a, const std::vector<Complex>& p) {
  if (p.empty() || !p[0].re.equals(1) || !p[0].im.is_zero())
    throw DomainError("series_div_poly: polynomial must have constant term 1");
  long order = a.order();
  PowerSeries r(a.ctx, order, a.label + "/poly");
  mpfr_prec_t wp = (mpfr_prec_t)a.ctx.work();
  Real t(wp);
  long pdeg = (long)p.size() - 1;
  for (long m = 0; m <= order; ++m) {
    // r_m = a_m - sum_{k=1..min(m,pdeg)} p_k r_{m-k}
    Complex& dst = r.at(m);
    dst.set(a[m]);
    long kmax = std::min(m, pdeg);
    for (long k = 1; k <= kmax; ++k) csubmul(dst, p[k], r[m - k], t);
  }
  return r;
}

}  // namespace zetalab
