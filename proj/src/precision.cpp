#include "zetalab/precision.hpp"

#include <cstdlib>
#include <vector>

namespace zetalab {

Real Real::parse(const std::string& s, mpfr_prec_t prec) {
  Real r(prec);
  if (mpfr_set_str(r.raw(), s.c_str(), 10, MPFR_RNDN) != 0)
    throw DomainError("Real::parse: not a decimal number: '" + s + "'");
  return r;
}

std::string Real::to_string() const {
  return to_string(0);
}

std::string Real::to_string(int digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
  if (mpfr_zero_p(v_)) return "0";
  mpfr_exp_t e;
  char* s = mpfr_get_str(nullptr, &e, 10, digits < 0 ? 0 : (size_t)digits, v_, MPFR_RNDN);
  if (!s) throw PrecisionError("mpfr_get_str failed");
  std::string m(s);
  mpfr_free_str(s);
  bool neg = !m.empty() && m[0] == '-';
  std::string mag = neg ? m.substr(1) : m;
  // strip trailing zeros of the mantissa, keep at least one digit
  size_t last = mag.find_last_not_of('0');
  if (last != std::string::npos && last + 1 < mag.size()) mag.erase(last + 1);
  // mpfr convention: value = 0.mag * 10^e; render as d.ddd "e" (e-1)
  std::string out = neg ? "-" : "";
  out += mag.substr(0, 1);
  if (mag.size() > 1) out += "." + mag.substr(1);
  out += "e" + std::to_string((long)(e - 1));
  return out;
}

void cdiv(Complex& dst, const Complex& a, const Complex& b) {
  // Smith's formula, branching on the larger component of b.
  mpfr_prec_t p = dst.prec();
  Real t(p), r(p), den(p);
  Real babs_re(p), babs_im(p);
  mpfr_abs(babs_re.raw(), b.re.raw(), MPFR_RNDN);
  mpfr_abs(babs_im.raw(), b.im.raw(), MPFR_RNDN);
  if (babs_im <= babs_re) {
    // r = b.im/b.re; den = b.re + b.im*r
    div(r, b.im, b.re);
    den.set(b.re);
    addmul(den, b.im, r);
    // dst.re = (a.re + a.im*r)/den ; dst.im = (a.im - a.re*r)/den
    t.set(a.re);
    addmul(t, a.im, r);
    div(dst.re, t, den);
    t.set(a.im);
    submul(t, a.re, r);
    div(dst.im, t, den);
  } else {
    // r = b.re/b.im; den = b.im + b.re*r
    div(r, b.re, b.im);
    den.set(b.im);
    addmul(den, b.re, r);
    // dst.re = (a.re*r + a.im)/den ; dst.im = (a.im*r - a.re)/den
    t.set(a.im);
    addmul(t, a.re, r);
    div(dst.re, t, den);
    mul(t, a.im, r);
    t -= a.re;
    div(dst.im, t, den);
  }
}

Complex csqrt(const Complex& a) {
  mpfr_prec_t p = a.prec();
  Complex out(p);
  if (a.im.is_zero()) {
    if (a.re.sign() >= 0) {
      mpfr_sqrt(out.re.raw(), a.re.raw(), MPFR_RNDN);
    } else {
      Real t(p);
      mpfr_neg(t.raw(), a.re.raw(), MPFR_RNDN);
      mpfr_sqrt(out.im.raw(), t.raw(), MPFR_RNDN);
    }
    return out;
  }
  // w = sqrt((|a| + |re|)/2); branch keeps cancellation out of the result
  Real mag = a.abs();
  Real t(p);
  mpfr_abs(t.raw(), a.re.raw(), MPFR_RNDN);
  t += mag;
  t /= 2L;
  Real w = sqrt(t);
  Real half_im(p);
  div(half_im, a.im, w);
  half_im /= 2L;
  if (a.re.sign() >= 0) {
    out.re.set(w);
    out.im.set(half_im);
  } else {
    mpfr_abs(out.re.raw(), half_im.raw(), MPFR_RNDN);
    out.im.set(w);
    if (a.im.sign() < 0) out.im.negate();
  }
  return out;
}

Complex clog(const Complex& a) {
  mpfr_prec_t p = a.prec();
  Complex out(p);
  Real mag = a.abs();
  mpfr_log(out.re.raw(), mag.raw(), MPFR_RNDN);
  mpfr_atan2(out.im.raw(), a.im.raw(), a.re.raw(), MPFR_RNDN);
  return out;
}

std::string Integer::to_string() const {
  char* s = mpz_get_str(nullptr, 10, v_);
  std::string out(s);
  std::free(s);
  return out;
}

std::string Rational::to_string() const {
  char* s = mpq_get_str(nullptr, 10, v_);
  std::string out(s);
  std::free(s);
  return out;
}

Integer binomial(long n, long k) {
  Integer r;
  if (k < 0 || k > n || n < 0) return r;  // 0
  mpz_bin_uiui(r.raw(), (unsigned long)n, (unsigned long)k);
  return r;
}

}  // namespace zetalab
