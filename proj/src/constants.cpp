#include "zetalab/constants.hpp"

#include <cmath>

namespace zetalab {

namespace {

// Dual number (value, d/ds) for differentiating Euler-Maclaurin terms
// through zeros of the Pochhammer factors.
struct Dual {
  Real v, d;
  explicit Dual(mpfr_prec_t p) : v(p), d(p) {
    v.set_zero();
    d.set_zero();
  }
};

void dual_mul(Dual& dst, const Dual& a, const Dual& b, Real& t) {
  // dst.d = a.v*b.d + a.d*b.v ; dst.v = a.v*b.v  (dst may not alias a,b)
  mul(dst.d, a.v, b.d);
  addmul(dst.d, a.d, b.v);
  mul(dst.v, a.v, b.v);
  (void)t;
}

}  // namespace

void BernoulliTable::extend(long rmax) {
  if (rmax <= size()) return;
  // Tangent numbers T_1..T_rmax, integer in-place recurrence.
  long n = rmax;
  std::vector<Integer> T((size_t)n);
  T[0] = 1;
  for (long k = 2; k <= n; ++k) {
    T[k - 1] = T[k - 2];
    T[k - 1] *= (k - 1);
  }
  for (long k = 2; k <= n; ++k) {
    for (long j = k; j <= n; ++j) {
      // T[j] = (j-k)*T[j-1] + (j-k+2)*T[j]
      Integer a = T[j - 2];
      a *= (j - k);
      T[j - 1] *= (j - k + 2);
      T[j - 1] += a;
    }
  }
  nums_.clear();
  dens_.clear();
  nums_.reserve(n);
  dens_.reserve(n);
  Integer four_r(4);  // 4^r
  for (long r = 1; r <= n; ++r) {
    // B_{2r} = (-1)^{r-1} * 2r * T_r / (4^r (4^r - 1))
    Integer num = T[r - 1];
    num *= 2 * r;
    if (r % 2 == 0) num *= -1L;
    Integer den = four_r;
    Integer f = four_r;
    f -= Integer(1);
    den *= f;
    nums_.push_back(std::move(num));
    dens_.push_back(std::move(den));
    four_r *= 4L;
  }
}

Real BernoulliTable::to_real(long r, mpfr_prec_t prec) const {
  Real n = nums_[r - 1].to_real(prec);
  Real d = dens_[r - 1].to_real(prec);
  return n / d;
}

OracleTable::OracleTable(PrecisionContext ctx) : ctx_(ctx), wp_(ctx.work() + 32) {}

const Real& OracleTable::pi() {
  if (!have_pi_) {
    pi_ = Real((mpfr_prec_t)wp_);
    mpfr_const_pi(pi_.raw(), MPFR_RNDN);
    ln_pi_ = log(pi_);
    ln2_ = Real((mpfr_prec_t)wp_);
    mpfr_const_log2(ln2_.raw(), MPFR_RNDN);
    ln_2pi_ = ln_pi_ + ln2_;
    have_pi_ = true;
  }
  return pi_;
}
const Real& OracleTable::ln_pi() { pi(); return ln_pi_; }
const Real& OracleTable::ln_2pi() { pi(); return ln_2pi_; }
const Real& OracleTable::ln2() { pi(); return ln2_; }

const Real& OracleTable::euler_gamma() {
  if (have_gamma_) return gamma_;
  mpfr_prec_t p = wp_;
  long N = (long)(0.13 * (double)p) + 12;
  for (int attempt = 0;; ++attempt) {
    if (attempt > 6) throw PrecisionError("euler_gamma: Euler-Maclaurin failed to converge");
    // H_N - ln N - 1/(2N) + sum_r B_{2r}/(2r) N^{-2r}
    Real acc(p), t(p), nn(p);
    acc.set_zero();
    for (long k = 1; k <= N; ++k) {
      t.set(1L);
      t /= k;
      acc += t;
    }
    nn.set(N);
    acc -= log(nn);
    t.set(1L);
    t /= 2 * N;
    acc -= t;
    Real invN2(p);
    invN2.set(1L);
    invN2 /= N;
    invN2 *= invN2;
    Real pw = invN2;  // N^{-2r}
    Real prev_abs(p), term(p), ta(p);
    prev_abs.set_zero();
    bool done = false;
    Real tol = Real::pow2(-(long)p + 4, p);
    for (long r = 1; r <= 4 * N; ++r) {
      bern_.extend(r);
      term = bern_.to_real(r, p);
      term /= 2 * r;
      term *= pw;
      mpfr_abs(ta.raw(), term.raw(), MPFR_RNDN);
      if (r > 1 && ta > prev_abs) break;  // asymptotic tail turned around
      acc += term;
      prev_abs = ta;
      if (ta < tol) {
        done = true;
        break;
      }
      pw *= invN2;
    }
    if (done) {
      gamma_ = acc;
      break;
    }
    N *= 2;
  }
  // cross-check against the library constant
  Real ref((mpfr_prec_t)wp_);
  mpfr_const_euler(ref.raw(), MPFR_RNDN);
  Real diff = gamma_ - ref;
  mpfr_abs(diff.raw(), diff.raw(), MPFR_RNDN);
  if (diff > Real::pow2(-(long)wp_ + 8, wp_))
    throw PrecisionError("euler_gamma: Euler-Maclaurin disagrees with reference");
  have_gamma_ = true;
  return gamma_;
}

// Euler-Maclaurin for zeta(s) with derivative, s real, s != 1.
static Dual zeta_em_dual(const Real& s, mpfr_prec_t p, BernoulliTable& bern) {
  double sd = s.to_double();
  if (std::abs(sd - 1.0) < 1e-12) throw DomainError("zeta: pole at s = 1");
  long N = (long)(0.29 * (double)p) + 16;
  long from_s = (long)((std::abs(sd) + 8.0) / 4.0);
  if (from_s > N) N = from_s;
  Real tol = Real::pow2(-(long)p + 4, p);
  for (int attempt = 0;; ++attempt) {
    if (attempt > 6) throw PrecisionError("zeta: Euler-Maclaurin failed to converge");
    Dual acc(p);
    Real t(p), lnk(p), e(p), emag(p);
    Real cutoff = Real::pow2(-(long)p - 8, p);
    // sum_{k=1}^{N-1} k^{-s}
    for (long k = 2; k < N; ++k) {
      t.set(k);
      mpfr_log(lnk.raw(), t.raw(), MPFR_RNDN);
      mul(e, s, lnk);
      e.negate();
      mpfr_exp(e.raw(), e.raw(), MPFR_RNDN);  // k^{-s}
      acc.v += e;
      mpfr_abs(emag.raw(), e.raw(), MPFR_RNDN);
      e *= lnk;
      acc.d -= e;
      if (k > 2 && emag < cutoff) break;  // large s: series already exhausted
    }
    t.set(1L);
    acc.v += t;
    Real lnN(p), nms(p);
    t.set(N);
    mpfr_log(lnN.raw(), t.raw(), MPFR_RNDN);
    mul(nms, s, lnN);
    nms.negate();
    mpfr_exp(nms.raw(), nms.raw(), MPFR_RNDN);  // N^{-s}
    // N^{1-s}/(s-1)
    Real sm1(p), u(p);
    sm1.set(s);
    t.set(1L);
    sm1 -= t;
    mul(u, nms, Real::of((long)N, p));  // N^{1-s}
    div(t, u, sm1);
    acc.v += t;
    // d/ds: -u (lnN (s-1) + 1)/(s-1)^2
    Real num(p), den(p);
    mul(num, lnN, sm1);
    num += Real::of(1L, p);
    num *= u;
    num.negate();
    mul(den, sm1, sm1);
    div(t, num, den);
    acc.d += t;
    // N^{-s}/2
    t.set(nms);
    t /= 2L;
    acc.v += t;
    mul(t, lnN, nms);
    t /= 2L;
    acc.d -= t;
    // tail: sum_r B_{2r}/(2r)! * s(s+1)...(s+2r-2) * N^{-s-2r+1}
    Dual poch(p), npw(p), term(p), tmp(p);
    poch.v.set(s);
    poch.d.set(1L);
    div(npw.v, nms, Real::of((long)N, p));  // N^{-s-1}
    mul(npw.d, lnN, npw.v);
    npw.d.negate();
    Real invN2(p);
    invN2.set(1L);
    invN2 /= N;
    invN2 *= invN2;
    Real fac(p), bf(p), prev(p), mag(p);
    fac.set(2L);  // (2r)! at r=1
    prev.set_zero();
    bool done = false;
    long rcap = 2 * (long)p;
    for (long r = 1; r <= rcap; ++r) {
      bern.extend(r);
      Real brf = bern.to_real(r, p);
      div(bf, brf, fac);
      // term = bf * poch * npw
      dual_mul(term, poch, npw, t);
      term.v *= bf;
      term.d *= bf;
      acc.v += term.v;
      acc.d += term.d;
      mpfr_abs(mag.raw(), term.v.raw(), MPFR_RNDN);
      Real magd(p);
      mpfr_abs(magd.raw(), term.d.raw(), MPFR_RNDN);
      mag += magd;
      if (mag < tol) {
        done = true;
        break;
      }
      if (r > 2 && mag > prev) break;  // diverging tail: need larger N
      prev = mag;
      // poch *= (s + 2r-1)(s + 2r)
      for (long add = 2 * r - 1; add <= 2 * r; ++add) {
        Dual f(p);
        f.v.set(s);
        f.v += Real::of(add, p);
        f.d.set(1L);
        dual_mul(tmp, poch, f, t);
        poch.v = tmp.v;
        poch.d = tmp.d;
      }
      // npw *= N^{-2}
      npw.v *= invN2;
      npw.d *= invN2;
      // fac *= (2r+1)(2r+2)
      fac *= (2 * r + 1);
      fac *= (2 * r + 2);
    }
    if (done) return acc;
    N *= 2;
  }
}

const Real& OracleTable::zeta_int(long k) {
  if (k < 2) throw DomainError("zeta_int: k must be >= 2");
  if ((long)zeta_k_.size() >= k - 1 && !zeta_k_[k - 2].is_nan()) return zeta_k_[k - 2];
  while ((long)zeta_k_.size() < k - 1) zeta_k_.emplace_back();  // NaN slots
  zeta_k_[k - 2] = zeta_point(Real::of(k, wp_));
  return zeta_k_[k - 2];
}

Real OracleTable::zeta_point(const Real& s) {
  return zeta_em_dual(s, wp_, bern_).v;
}

Real OracleTable::zeta_deriv(const Real& s) {
  return zeta_em_dual(s, wp_, bern_).d;
}

const Real& OracleTable::zeta_half() {
  if (!have_zeta_half_) {
    Real h(wp_);
    h.set(1L);
    h /= 2L;
    zeta_half_ = zeta_point(h);
    have_zeta_half_ = true;
  }
  return zeta_half_;
}

const Real& OracleTable::zeta_three() {
  if (!have_zeta_three_) {
    zeta_three_ = zeta_int(3);
    have_zeta_three_ = true;
  }
  return zeta_three_;
}

const Real& OracleTable::r1() {
  if (have_r1_) return r1_;
  Real p2 = pi() * pi();
  Real nine_z3 = zeta_three();
  nine_z3 *= 9L;
  r1_ = p2 / nine_z3;
  // second route: -1/(36 zeta'(-2))
  Real zp = zeta_deriv(Real::of(-2L, wp_));
  Real alt(wp_);
  alt.set(-1L);
  Real d(wp_);
  d.set(zp);
  d *= 36L;
  alt /= d;
  Real diff = r1_ - alt;
  mpfr_abs(diff.raw(), diff.raw(), MPFR_RNDN);
  Real tol = Real::pow2(-(ctx_.bits - ctx_.guard_bits), wp_);
  tol *= r1_;
  if (diff > tol)
    throw PrecisionError("r1: pi^2/(9 zeta(3)) and -1/(36 zeta'(-2)) disagree");
  have_r1_ = true;
  return r1_;
}

Real OracleTable::zeta_star_at(const Real& z) {
  Real zv = zeta_point(z);
  Real f(wp_);
  f.set(z);
  f -= Real::of(1L, wp_);
  f *= 2L;
  return f * zv;
}

Real OracleTable::zeta_trivial_at(const Real& z) {
  // pi^{z/2} / Gamma(1 + z/2)
  Real half_z(wp_);
  half_z.set(z);
  half_z /= 2L;
  Real num(wp_);
  mpfr_pow(num.raw(), pi().raw(), half_z.raw(), MPFR_RNDN);
  Real g(wp_);
  g.set(half_z);
  g += Real::of(1L, wp_);
  mpfr_gamma(g.raw(), g.raw(), MPFR_RNDN);
  return num / g;
}

}  // namespace zetalab
