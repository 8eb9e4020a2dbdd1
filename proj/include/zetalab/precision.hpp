// High-precision real/complex scalars on top of GNU MPFR, plus the
// precision context threaded through every computation in the project.
#pragma once

#include <gmp.h>
#include <mpfr.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace zetalab {

// Invalid input (bad series normalization, mismatched contexts, malformed
// configuration).  CLI maps this to exit code 2.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A computation could not reach the requested accuracy (series cap hit,
// QR failed to deflate).  CLI maps this to exit code 3.
struct PrecisionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Filesystem trouble.  CLI maps this to exit code 4.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Working precision for a run.  `bits` is the headline mantissa precision:
// every published tolerance is expressed as a power of 2^-bits.  `guard_bits`
// extra bits are carried by all internal arithmetic.
struct PrecisionContext {
  long bits = 256;
  long guard_bits = 64;

  PrecisionContext() = default;
  PrecisionContext(long b, long g = 64) : bits(b), guard_bits(g) {
    if (bits < 64) throw DomainError("PrecisionContext: bits must be >= 64");
    if (guard_bits < 0) throw DomainError("PrecisionContext: guard_bits must be >= 0");
  }

  // Precision used by internal arithmetic.
  long work() const { return bits + guard_bits; }

  // Default precision rule for computations targeting L_{l,m}: the
  // determinants grow like W_l^m and the spectra are ill-conditioned, so
  // precision scales linearly with the matrix size.
  static long default_bits(long l, long m) {
    long scaled = 12 * (l + m);
    return scaled > 256 ? scaled : 256;
  }

  bool operator==(const PrecisionContext&) const = default;
};

// RAII value wrapper around mpfr_t.  Copy preserves precision; arithmetic
// helpers write into a caller-supplied destination so hot loops can run
// allocation-free.  All rounding is to nearest.
class Real {
 public:
  Real() { mpfr_init2(v_, 64); }  // NaN
  explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, 64);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

  static Real of(double x, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_d(r.v_, x, MPFR_RNDN);
    return r;
  }
  static Real of(long x, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_si(r.v_, x, MPFR_RNDN);
    return r;
  }
  // Parses decimal scientific notation; throws DomainError on junk.
  static Real parse(const std::string& s, mpfr_prec_t prec);
  // 2^e at the given precision (exact).
  static Real pow2(long e, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
    return r;
  }

  void set_zero() { mpfr_set_zero(v_, 1); }
  void set(double x) { mpfr_set_d(v_, x, MPFR_RNDN); }
  void set(long x) { mpfr_set_si(v_, x, MPFR_RNDN); }
  void set(const Real& o) { mpfr_set(v_, o.v_, MPFR_RNDN); }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  // Shortest decimal string that round-trips at this precision.
  std::string to_string() const;
  // Fixed number of significant digits.
  std::string to_string(int digits) const;

  bool operator<(const Real& o) const { return mpfr_cmp(v_, o.v_) < 0; }
  bool operator>(const Real& o) const { return mpfr_cmp(v_, o.v_) > 0; }
  bool operator<=(const Real& o) const { return mpfr_cmp(v_, o.v_) <= 0; }
  bool operator>=(const Real& o) const { return mpfr_cmp(v_, o.v_) >= 0; }
  bool equals(long x) const { return mpfr_cmp_si(v_, x) == 0; }

  Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(long x) { mpfr_mul_si(v_, v_, x, MPFR_RNDN); return *this; }
  Real& operator/=(long x) { mpfr_div_si(v_, v_, x, MPFR_RNDN); return *this; }
  Real& negate() { mpfr_neg(v_, v_, MPFR_RNDN); return *this; }

 private:
  mpfr_t v_;
};

// Allocating convenience operators; results carry max precision of operands.
inline mpfr_prec_t join_prec(const Real& a, const Real& b) {
  return a.prec() > b.prec() ? a.prec() : b.prec();
}
inline Real operator+(const Real& a, const Real& b) {
  Real r(join_prec(a, b));
  mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
inline Real operator-(const Real& a, const Real& b) {
  Real r(join_prec(a, b));
  mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
inline Real operator*(const Real& a, const Real& b) {
  Real r(join_prec(a, b));
  mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
inline Real operator/(const Real& a, const Real& b) {
  Real r(join_prec(a, b));
  mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
inline Real operator-(const Real& a) {
  Real r(a.prec());
  mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline Real abs(const Real& a) {
  Real r(a.prec());
  mpfr_abs(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline Real sqrt(const Real& a) {
  Real r(a.prec());
  mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline Real log(const Real& a) {
  Real r(a.prec());
  mpfr_log(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline Real exp(const Real& a) {
  Real r(a.prec());
  mpfr_exp(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

// In-place kernels; destination precision decides rounding.  Destinations
// must not alias operands unless noted.
inline void add(Real& dst, const Real& a, const Real& b) { mpfr_add(dst.raw(), a.raw(), b.raw(), MPFR_RNDN); }
inline void sub(Real& dst, const Real& a, const Real& b) { mpfr_sub(dst.raw(), a.raw(), b.raw(), MPFR_RNDN); }
inline void mul(Real& dst, const Real& a, const Real& b) { mpfr_mul(dst.raw(), a.raw(), b.raw(), MPFR_RNDN); }
inline void div(Real& dst, const Real& a, const Real& b) { mpfr_div(dst.raw(), a.raw(), b.raw(), MPFR_RNDN); }
// dst += a*b and dst -= a*b (fused, single rounding).
inline void addmul(Real& dst, const Real& a, const Real& b) { mpfr_fma(dst.raw(), a.raw(), b.raw(), dst.raw(), MPFR_RNDN); }
inline void submul(Real& dst, const Real& a, const Real& b) { mpfr_fms(dst.raw(), a.raw(), b.raw(), dst.raw(), MPFR_RNDN); mpfr_neg(dst.raw(), dst.raw(), MPFR_RNDN); }

// High-precision complex value as an explicit (re, im) pair.
class Complex {
 public:
  Real re, im;

  Complex() = default;
  explicit Complex(mpfr_prec_t prec) : re(prec), im(prec) {
    re.set_zero();
    im.set_zero();
  }
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  static Complex of(double r, double i, mpfr_prec_t prec) {
    return Complex(Real::of(r, prec), Real::of(i, prec));
  }
  static Complex real_of(const Real& r) {
    Complex c(r.prec());
    c.re.set(r);
    return c;
  }

  mpfr_prec_t prec() const { return re.prec(); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }

  void set_zero() { re.set_zero(); im.set_zero(); }
  void set(const Complex& o) { re.set(o.re); im.set(o.im); }
  void set(double r, double i) { re.set(r); im.set(i); }

  Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
  Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
  Complex& negate() { re.negate(); im.negate(); return *this; }
  Complex conj() const {
    Complex c(*this);
    c.im.negate();
    return c;
  }

  // |z|, and a cheap magnitude proxy |re|+|im| for pivoting.
  Real abs() const {
    Real r(re.prec());
    mpfr_hypot(r.raw(), re.raw(), im.raw(), MPFR_RNDN);
    return r;
  }
  void abs_to(Real& dst) const { mpfr_hypot(dst.raw(), re.raw(), im.raw(), MPFR_RNDN); }
  void abs1_to(Real& dst) const {
    mpfr_abs(dst.raw(), re.raw(), MPFR_RNDN);
    Real t(im.prec());
    mpfr_abs(t.raw(), im.raw(), MPFR_RNDN);
    dst += t;
  }

  std::string to_string() const { return re.to_string() + (im.sign() < 0 ? "" : "+") + im.to_string() + "i"; }
};

// dst = a*b; dst must not alias a or b; t is scratch.
inline void cmul(Complex& dst, const Complex& a, const Complex& b, Real& t) {
  mul(dst.re, a.re, b.re);
  mul(t, a.im, b.im);
  dst.re -= t;
  mul(dst.im, a.re, b.im);
  mul(t, a.im, b.re);
  dst.im += t;
}
// dst += a*b; dst must not alias a or b; t is scratch.
inline void caddmul(Complex& dst, const Complex& a, const Complex& b, Real& t) {
  addmul(dst.re, a.re, b.re);
  mul(t, a.im, b.im);
  dst.re -= t;
  addmul(dst.im, a.re, b.im);
  addmul(dst.im, a.im, b.re);
}
// dst -= a*b; same aliasing rules.
inline void csubmul(Complex& dst, const Complex& a, const Complex& b, Real& t) {
  submul(dst.re, a.re, b.re);
  addmul(dst.re, a.im, b.im);
  submul(dst.im, a.re, b.im);
  submul(dst.im, a.im, b.re);
}
// dst = a/b; dst must not alias a or b.
void cdiv(Complex& dst, const Complex& a, const Complex& b);

inline Complex operator+(const Complex& a, const Complex& b) {
  return Complex(a.re + b.re, a.im + b.im);
}
inline Complex operator-(const Complex& a, const Complex& b) {
  return Complex(a.re - b.re, a.im - b.im);
}
inline Complex operator*(const Complex& a, const Complex& b) {
  Complex r(join_prec(a.re, b.re));
  Real t(r.prec());
  cmul(r, a, b, t);
  return r;
}
inline Complex operator/(const Complex& a, const Complex& b) {
  Complex r(join_prec(a.re, b.re));
  cdiv(r, a, b);
  return r;
}
inline Complex operator-(const Complex& a) {
  Complex r(a);
  r.negate();
  return r;
}

// Principal square root.
Complex csqrt(const Complex& a);
// Principal logarithm.
Complex clog(const Complex& a);

// Exact integers (GMP) for binomial tables and weight computations.
class Integer {
 public:
  Integer() { mpz_init(v_); }
  Integer(long x) { mpz_init_set_si(v_, x); }
  Integer(const Integer& o) { mpz_init_set(v_, o.v_); }
  Integer(Integer&& o) noexcept {
    mpz_init(v_);
    mpz_swap(v_, o.v_);
  }
  Integer& operator=(const Integer& o) {
    if (this != &o) mpz_set(v_, o.v_);
    return *this;
  }
  Integer& operator=(Integer&& o) noexcept {
    if (this != &o) mpz_swap(v_, o.v_);
    return *this;
  }
  ~Integer() { mpz_clear(v_); }

  mpz_ptr raw() { return v_; }
  mpz_srcptr raw() const { return v_; }

  Integer& operator+=(const Integer& o) { mpz_add(v_, v_, o.v_); return *this; }
  Integer& operator-=(const Integer& o) { mpz_sub(v_, v_, o.v_); return *this; }
  Integer& operator*=(const Integer& o) { mpz_mul(v_, v_, o.v_); return *this; }
  Integer& operator*=(long x) { mpz_mul_si(v_, v_, x); return *this; }
  bool operator==(const Integer& o) const { return mpz_cmp(v_, o.v_) == 0; }
  bool operator==(long x) const { return mpz_cmp_si(v_, x) == 0; }

  Real to_real(mpfr_prec_t prec) const {
    Real r(prec);
    mpfr_set_z(r.raw(), v_, MPFR_RNDN);
    return r;
  }
  std::string to_string() const;

 private:
  mpz_t v_;
};

// Exact rationals (GMP) for the trivial-zero table and W_l limits.
class Rational {
 public:
  Rational() { mpq_init(v_); }
  Rational(long num, long den) {
    mpq_init(v_);
    mpq_set_si(v_, num, den);
    mpq_canonicalize(v_);
  }
  Rational(const Rational& o) {
    mpq_init(v_);
    mpq_set(v_, o.v_);
  }
  Rational(Rational&& o) noexcept {
    mpq_init(v_);
    mpq_swap(v_, o.v_);
  }
  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(v_, o.v_);
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    if (this != &o) mpq_swap(v_, o.v_);
    return *this;
  }
  ~Rational() { mpq_clear(v_); }

  mpq_ptr raw() { return v_; }
  mpq_srcptr raw() const { return v_; }

  Rational& operator*=(const Rational& o) {
    mpq_mul(v_, v_, o.v_);
    return *this;
  }
  bool operator==(const Rational& o) const { return mpq_equal(v_, o.v_) != 0; }

  Real to_real(mpfr_prec_t prec) const {
    Real r(prec);
    mpfr_set_q(r.raw(), v_, MPFR_RNDN);
    return r;
  }
  std::string to_string() const;

 private:
  mpq_t v_;
};

// C(n, k) with the out-of-range convention C(n, k) = 0 for k < 0 or k > n.
Integer binomial(long n, long k);

}  // namespace zetalab
