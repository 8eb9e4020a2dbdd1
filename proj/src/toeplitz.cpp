#include "zetalab/toeplitz.hpp"

#include <algorithm>
#include <cmath>

namespace zetalab {

ToeplitzMatrix build_toeplitz(long l, long m, const PowerSeries& theta,
                              const FunctionId& source) {
  if (l < 1 || m < 1) throw DomainError("build_toeplitz: l and m must be >= 1");
  if (theta.order() < l + m - 1)
    throw DomainError("build_toeplitz: theta order " + std::to_string(theta.order()) +
                      " insufficient, need at least " + std::to_string(l + m - 1));
  ToeplitzMatrix A;
  A.l = l;
  A.m = m;
  A.source = source;
  A.ctx = theta.ctx;
  mpfr_prec_t wp = (mpfr_prec_t)theta.ctx.work();
  A.entries = CMat(m, wp);
  for (long i = 0; i < m; ++i) {
    for (long j = 0; j < m; ++j) {
      long idx = l + i - j;
      Complex& e = A.entries.at(i, j);
      if (idx < 0) {
        e.set_zero();
      } else if (idx == 0) {
        e.set(1.0, 0.0);
      } else {
        e.set(theta[idx]);
      }
    }
  }
  return A;
}

// Shared LU with partial pivoting (by |re|+|im|).  Returns the permutation
// sign, or 0 if a pivot column is exactly zero.
static int lu_factor(CMat& A, std::vector<long>& perm) {
  long n = A.n;
  mpfr_prec_t p = A.a.empty() ? 64 : A.a[0].prec();
  perm.resize(n);
  for (long i = 0; i < n; ++i) perm[i] = i;
  int sign = 1;
  Real best(p), cand(p), t(p);
  Complex factor(p), tmp(p);
  for (long k = 0; k < n; ++k) {
    long piv = k;
    A.at(k, k).abs1_to(best);
    for (long i = k + 1; i < n; ++i) {
      A.at(i, k).abs1_to(cand);
      if (cand > best) {
        best = cand;
        piv = i;
      }
    }
    if (best.is_zero()) return 0;  // exactly singular
    if (piv != k) {
      for (long j = 0; j < n; ++j) std::swap(A.at(k, j), A.at(piv, j));
      std::swap(perm[k], perm[piv]);
      sign = -sign;
    }
    for (long i = k + 1; i < n; ++i) {
      cdiv(factor, A.at(i, k), A.at(k, k));
      A.at(i, k) = factor;
      for (long j = k + 1; j < n; ++j) csubmul(A.at(i, j), factor, A.at(k, j), t);
    }
  }
  return sign;
}

Complex lu_det(CMat work, const PrecisionContext& ctx) {
  mpfr_prec_t p = (mpfr_prec_t)ctx.work();
  std::vector<long> perm;
  int sign = lu_factor(work, perm);
  Complex det(p);
  if (sign == 0) return det;  // 0
  det.set(1.0, 0.0);
  Real t(p);
  Complex acc(p);
  for (long k = 0; k < work.n; ++k) {
    cmul(acc, det, work.at(k, k), t);
    det = acc;
  }
  if (sign < 0) det.negate();
  return det;
}

std::vector<Complex> lu_solve(CMat A, std::vector<Complex> b, const PrecisionContext& ctx) {
  long n = A.n;
  mpfr_prec_t p = (mpfr_prec_t)ctx.work();
  std::vector<long> perm;
  int sign = lu_factor(A, perm);
  if (sign == 0) throw PrecisionError("lu_solve: singular system");
  std::vector<Complex> x;
  x.reserve(n);
  for (long i = 0; i < n; ++i) x.push_back(b[perm[i]]);
  Real t(p);
  // forward substitution (unit lower)
  for (long i = 1; i < n; ++i)
    for (long j = 0; j < i; ++j) csubmul(x[i], A.at(i, j), x[j], t);
  // back substitution
  Complex tmp(p);
  for (long i = n - 1; i >= 0; --i) {
    for (long j = i + 1; j < n; ++j) csubmul(x[i], A.at(i, j), x[j], t);
    cdiv(tmp, x[i], A.at(i, i));
    x[i] = tmp;
  }
  return x;
}

Complex determinant(const ToeplitzMatrix& A) { return lu_det(A.entries, A.ctx); }

// ---------------------------------------------------------------------------
// Complex Householder Hessenberg reduction with transform accumulation.

HessenbergResult hessenberg(const CMat& A, const PrecisionContext& ctx) {
  long n = A.n;
  mpfr_prec_t p = (mpfr_prec_t)ctx.work();
  HessenbergResult res;
  res.H = A;
  res.Q = CMat(n, p);
  for (long i = 0; i < n; ++i) res.Q.at(i, i).set(1.0, 0.0);
  if (n <= 2) return res;

  CMat& H = res.H;
  CMat& Q = res.Q;
  std::vector<Complex> u;
  u.reserve(n);
  for (long i = 0; i < n; ++i) u.emplace_back(p);
  Real sigma(p), ax0(p), gamma(p), t(p), tr(p);
  Complex beta(p), w(p), phi(p), acc(p);

  for (long k = 0; k + 2 < n; ++k) {
    long len = n - k - 1;
    // sigma = ||H[k+1..n-1][k]||
    sigma.set_zero();
    for (long i = 0; i < len; ++i) {
      const Complex& z = H.at(k + 1 + i, k);
      addmul(sigma, z.re, z.re);
      addmul(sigma, z.im, z.im);
    }
    mpfr_sqrt(sigma.raw(), sigma.raw(), MPFR_RNDN);
    if (sigma.is_zero()) continue;
    const Complex& x0 = H.at(k + 1, k);
    x0.abs_to(ax0);
    if (ax0.is_zero()) {
      phi.set(1.0, 0.0);
    } else {
      div(phi.re, x0.re, ax0);
      div(phi.im, x0.im, ax0);
    }
    // beta = -phi * sigma ; u = x - beta e1 ; gamma = 1/(sigma(sigma+|x0|))
    mul(beta.re, phi.re, sigma);
    beta.re.negate();
    mul(beta.im, phi.im, sigma);
    beta.im.negate();
    for (long i = 0; i < len; ++i) u[i].set(H.at(k + 1 + i, k));
    u[0] -= beta;
    add(t, sigma, ax0);
    mul(gamma, sigma, t);
    Real one(p);
    one.set(1L);
    div(t, one, gamma);
    gamma = t;
    // H <- P H  (rows k+1.., P = I - gamma u u^H): col j: H_col -= gamma (u^H H_col) u
    for (long j = k; j < n; ++j) {
      acc.set_zero();
      for (long i = 0; i < len; ++i) {
        // acc += conj(u[i]) * H[k+1+i][j]
        const Complex& h = H.at(k + 1 + i, j);
        addmul(acc.re, u[i].re, h.re);
        addmul(acc.re, u[i].im, h.im);
        addmul(acc.im, u[i].re, h.im);
        submul(acc.im, u[i].im, h.re);
      }
      acc.re *= gamma;
      acc.im *= gamma;
      for (long i = 0; i < len; ++i) csubmul(H.at(k + 1 + i, j), acc, u[i], tr);
    }
    // H <- H P  (cols k+1..): row i: H_row -= gamma (H_row u) u^H
    for (long i = 0; i < n; ++i) {
      acc.set_zero();
      for (long j = 0; j < len; ++j) caddmul(acc, H.at(i, k + 1 + j), u[j], tr);
      acc.re *= gamma;
      acc.im *= gamma;
      for (long j = 0; j < len; ++j) {
        // H[i][k+1+j] -= acc * conj(u[j])
        Complex& h = H.at(i, k + 1 + j);
        submul(h.re, acc.re, u[j].re);
        addmul(h.re, acc.im, u[j].im);
        submul(h.im, acc.im, u[j].re);
        addmul(h.im, acc.re, u[j].im);
      }
    }
    // Q <- Q P (same right update)
    for (long i = 0; i < n; ++i) {
      acc.set_zero();
      for (long j = 0; j < len; ++j) caddmul(acc, Q.at(i, k + 1 + j), u[j], tr);
      acc.re *= gamma;
      acc.im *= gamma;
      for (long j = 0; j < len; ++j) {
        Complex& h = Q.at(i, k + 1 + j);
        submul(h.re, acc.re, u[j].re);
        addmul(h.re, acc.im, u[j].im);
        submul(h.im, acc.im, u[j].re);
        addmul(h.im, acc.re, u[j].im);
      }
    }
    H.at(k + 1, k) = beta;
    for (long i = k + 2; i < n; ++i) H.at(i, k).set_zero();
  }
  return res;
}

// ---------------------------------------------------------------------------
// Complex single-shift (Wilkinson) QR on an upper Hessenberg matrix.

namespace {

struct GivensC {
  Real c;
  Complex s;
  explicit GivensC(mpfr_prec_t p) : c(p), s(p) {}
};

// Rotation zeroing y against x: G [x y]^T = [r 0]^T with real c.
void make_givens(const Complex& x, const Complex& y, GivensC& g, Real& ax, Real& ay, Real& r2, Real& t) {
  y.abs_to(ay);
  if (ay.is_zero()) {
    g.c.set(1L);
    g.s.set_zero();
    return;
  }
  x.abs_to(ax);
  if (ax.is_zero()) {
    g.c.set_zero();
    div(g.s.re, y.re, ay);
    div(g.s.im, y.im, ay);
    g.s.im.negate();  // s = conj(y)/|y|
    return;
  }
  // r2 = sqrt(ax^2 + ay^2)
  mpfr_hypot(r2.raw(), ax.raw(), ay.raw(), MPFR_RNDN);
  div(g.c, ax, r2);
  mul(t, ax, r2);
  // s = x conj(y) / (ax r2)
  mul(g.s.re, x.re, y.re);
  addmul(g.s.re, x.im, y.im);
  g.s.re /= t;
  mul(g.s.im, x.im, y.re);
  submul(g.s.im, x.re, y.im);
  g.s.im /= t;
}

struct RotWork {
  Complex t1, t2;
  Real tr;
  explicit RotWork(mpfr_prec_t p) : t1(p), t2(p), tr(p) {}
};

// (u, v) <- (c u + s v, -conj(s) u + c v)
inline void rot_left(const GivensC& g, Complex& u, Complex& v, RotWork& w) {
  mul(w.t1.re, g.c, u.re);
  mul(w.t1.im, g.c, u.im);
  caddmul(w.t1, g.s, v, w.tr);
  mul(w.t2.re, g.c, v.re);
  mul(w.t2.im, g.c, v.im);
  submul(w.t2.re, g.s.re, u.re);
  submul(w.t2.re, g.s.im, u.im);
  submul(w.t2.im, g.s.re, u.im);
  addmul(w.t2.im, g.s.im, u.re);
  u.set(w.t1);
  v.set(w.t2);
}

// (u, v) <- (c u + conj(s) v, -s u + c v)   [right multiplication by G^H]
inline void rot_right(const GivensC& g, Complex& u, Complex& v, RotWork& w) {
  mul(w.t1.re, g.c, u.re);
  mul(w.t1.im, g.c, u.im);
  addmul(w.t1.re, g.s.re, v.re);
  addmul(w.t1.re, g.s.im, v.im);
  addmul(w.t1.im, g.s.re, v.im);
  submul(w.t1.im, g.s.im, v.re);
  mul(w.t2.re, g.c, v.re);
  mul(w.t2.im, g.c, v.im);
  csubmul(w.t2, g.s, u, w.tr);
  u.set(w.t1);
  v.set(w.t2);
}

// Eigenvalues of [[a,b],[c,d]] appended to out.
void eig2x2(const Complex& a, const Complex& b, const Complex& c, const Complex& d,
            std::vector<Complex>& out, mpfr_prec_t p) {
  Complex h = (a - d);
  h.re /= 2L;
  h.im /= 2L;
  Complex disc = h * h + b * c;
  Complex sq = csqrt(disc);
  Complex mean = (a + d);
  mean.re /= 2L;
  mean.im /= 2L;
  out.push_back(mean + sq);
  out.push_back(mean - sq);
}

// Wilkinson shift: eigenvalue of the trailing 2x2 nearest d.
Complex wilkinson_shift(const Complex& a, const Complex& b, const Complex& c, const Complex& d,
                        mpfr_prec_t p) {
  Complex h = (a - d);
  h.re /= 2L;
  h.im /= 2L;
  Complex bc = b * c;
  Complex sq = csqrt(h * h + bc);
  Complex d1 = h + sq;
  Complex d2 = h - sq;
  Real a1(p), a2(p);
  d1.abs1_to(a1);
  d2.abs1_to(a2);
  const Complex& denom = (a1 > a2) ? d1 : d2;
  Real dn(p);
  denom.abs1_to(dn);
  if (dn.is_zero()) return d;
  return d - bc / denom;
}

}  // namespace

std::vector<Complex> eig_complex(CMat A, const PrecisionContext& ctx) {
  long n = A.n;
  mpfr_prec_t p = (mpfr_prec_t)ctx.work();
  std::vector<Complex> out;
  out.reserve(n);
  if (n == 0) return out;
  if (n == 1) {
    out.push_back(A.at(0, 0));
    return out;
  }
  HessenbergResult hr = hessenberg(A, ctx);
  CMat& H = hr.H;

  Real reltol = Real::pow2(-(ctx.bits - ctx.guard_bits), p);
  Real scale0(p), t(p);
  scale0.set_zero();
  for (const Complex& z : H.a) {
    z.abs1_to(t);
    if (t > scale0) scale0 = t;
  }
  Real floor_tol(p);
  mul(floor_tol, reltol, scale0);

  long sweeps = 0;
  const long max_sweeps = 40 * n;
  long hi = n - 1;
  long since_deflation = 0;
  GivensC g(p);
  RotWork w(p);
  Real ax(p), ay(p), r2(p), lhs(p), rhs(p);
  Complex x(p), y(p), mu(p), xs(p);

  while (hi >= 0) {
    if (hi == 0) {
      out.push_back(H.at(0, 0));
      break;
    }
    // find active block [lo..hi]
    long lo = hi;
    while (lo > 0) {
      H.at(lo, lo - 1).abs1_to(lhs);
      H.at(lo - 1, lo - 1).abs1_to(rhs);
      H.at(lo, lo).abs1_to(t);
      rhs += t;
      mul(t, reltol, rhs);
      if (rhs.is_zero()) t = floor_tol;
      if (lhs <= t) {
        H.at(lo, lo - 1).set_zero();
        break;
      }
      --lo;
    }
    if (lo == hi) {
      out.push_back(H.at(hi, hi));
      --hi;
      since_deflation = 0;
      continue;
    }
    if (lo == hi - 1) {
      eig2x2(H.at(lo, lo), H.at(lo, hi), H.at(hi, lo), H.at(hi, hi), out, p);
      hi -= 2;
      since_deflation = 0;
      continue;
    }
    if (++sweeps > max_sweeps)
      throw PrecisionError("eig_complex: QR did not deflate within 40*m sweeps (block " +
                           std::to_string(lo) + ".." + std::to_string(hi) + ")");
    ++since_deflation;
    if (since_deflation % 10 == 0) {
      // deterministic exceptional shift
      mu.set(H.at(hi, hi));
      H.at(hi, hi - 1).abs1_to(t);
      t *= 3L;
      t /= 4L;
      mu.re += t;
    } else {
      mu = wilkinson_shift(H.at(hi - 1, hi - 1), H.at(hi - 1, hi), H.at(hi, hi - 1),
                           H.at(hi, hi), p);
    }
    // implicit single-shift sweep
    x.set(H.at(lo, lo));
    x -= mu;
    y.set(H.at(lo + 1, lo));
    for (long k = lo; k < hi; ++k) {
      make_givens(x, y, g, ax, ay, r2, t);
      long jfrom = (k - 1 > lo) ? k - 1 : lo;
      for (long j = jfrom; j <= hi; ++j) rot_left(g, H.at(k, j), H.at(k + 1, j), w);
      long ito = (k + 2 < hi) ? k + 2 : hi;
      for (long i = lo; i <= ito; ++i) rot_right(g, H.at(i, k), H.at(i, k + 1), w);
      if (k < hi - 1) {
        x.set(H.at(k + 1, k));
        y.set(H.at(k + 2, k));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Real path: Householder Hessenberg + Francis double-shift QR.

namespace {

struct RMat {
  long n = 0;
  std::vector<Real> a;
  RMat(long size, mpfr_prec_t p) : n(size) {
    a.reserve((size_t)size * size);
    for (long i = 0; i < size * size; ++i) {
      a.emplace_back(p);
      a.back().set_zero();
    }
  }
  Real& at(long i, long j) { return a[(size_t)i * n + j]; }
  const Real& at(long i, long j) const { return a[(size_t)i * n + j]; }
};

void real_hessenberg(RMat& A, mpfr_prec_t p) {
  long n = A.n;
  std::vector<Real> v;
  v.reserve(n);
  for (long i = 0; i < n; ++i) {
    v.emplace_back(p);
  }
  Real sigma(p), alpha(p), beta(p), acc(p), t(p);
  for (long k = 0; k + 2 < n; ++k) {
    long len = n - k - 1;
    sigma.set_zero();
    for (long i = 0; i < len; ++i) addmul(sigma, A.at(k + 1 + i, k), A.at(k + 1 + i, k));
    mpfr_sqrt(sigma.raw(), sigma.raw(), MPFR_RNDN);
    if (sigma.is_zero()) continue;
    // alpha = -sign(x0) sigma ; v = x - alpha e1 ; beta = 2/(v.v) = 1/(sigma(sigma+|x0|))
    alpha = sigma;
    if (A.at(k + 1, k).sign() >= 0) alpha.negate();
    for (long i = 0; i < len; ++i) v[i].set(A.at(k + 1 + i, k));
    v[0] -= alpha;
    mpfr_abs(t.raw(), A.at(k + 1, k).raw(), MPFR_RNDN);
    t += sigma;
    mul(beta, sigma, t);
    t.set(1L);
    div(beta, t, beta);
    // left: rows k+1.., columns k..n-1
    for (long j = k; j < n; ++j) {
      acc.set_zero();
      for (long i = 0; i < len; ++i) addmul(acc, v[i], A.at(k + 1 + i, j));
      acc *= beta;
      for (long i = 0; i < len; ++i) submul(A.at(k + 1 + i, j), acc, v[i]);
    }
    // right: all rows, columns k+1..
    for (long i = 0; i < n; ++i) {
      acc.set_zero();
      for (long j = 0; j < len; ++j) addmul(acc, A.at(i, k + 1 + j), v[j]);
      acc *= beta;
      for (long j = 0; j < len; ++j) submul(A.at(i, k + 1 + j), acc, v[j]);
    }
    A.at(k + 1, k) = alpha;
    for (long i = k + 2; i < n; ++i) A.at(i, k).set_zero();
  }
}

// Householder for a 3-vector (x,y,z); false when already zero.
bool make_house3(const Real& x, const Real& y, const Real& z, Real* v, Real& beta,
                 mpfr_prec_t p) {
  Real norm(p), t(p);
  norm.set_zero();
  addmul(norm, x, x);
  addmul(norm, y, y);
  addmul(norm, z, z);
  mpfr_sqrt(norm.raw(), norm.raw(), MPFR_RNDN);
  if (norm.is_zero()) return false;
  Real alpha = norm;
  if (x.sign() >= 0) alpha.negate();
  v[0] = x - alpha;
  v[1] = y;
  v[2] = z;
  // beta = 2/(v.v) = 1/(norm(norm+|x|))
  mpfr_abs(t.raw(), x.raw(), MPFR_RNDN);
  t += norm;
  mul(beta, norm, t);
  t.set(1L);
  div(beta, t, beta);
  return true;
}

void real_eig2x2(const Real& a, const Real& b, const Real& c, const Real& d,
                 std::vector<Complex>& out, mpfr_prec_t p) {
  Real mean(p), disc(p), t(p);
  add(mean, a, d);
  mean /= 2L;
  sub(disc, a, d);
  disc /= 2L;
  disc *= disc;
  addmul(disc, b, c);
  if (disc.sign() >= 0) {
    Real sq = sqrt(disc);
    Real l1(p), l2(p);
    if (mean.sign() >= 0)
      add(l1, mean, sq);
    else
      sub(l1, mean, sq);
    // l1 l2 = det = mean^2 - disc
    Real det(p);
    mul(det, mean, mean);
    det -= disc;
    Complex e1(p), e2(p);
    e1.re.set(l1);
    if (l1.is_zero())
      l2.set_zero();
    else
      div(l2, det, l1);
    e2.re.set(l2);
    out.push_back(std::move(e1));
    out.push_back(std::move(e2));
  } else {
    disc.negate();
    Real sq = sqrt(disc);
    Complex e1(p), e2(p);
    e1.re.set(mean);
    e1.im.set(sq);
    e2.re.set(mean);
    e2.im.set(sq);
    e2.im.negate();
    out.push_back(std::move(e1));
    out.push_back(std::move(e2));
  }
}

}  // namespace

std::vector<Complex> eig_real(const CMat& A, const PrecisionContext& ctx) {
  long n = A.n;
  mpfr_prec_t p = (mpfr_prec_t)ctx.work();
  std::vector<Complex> out;
  out.reserve(n);
  if (n == 0) return out;
  RMat H(n, p);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) H.at(i, j).set(A.at(i, j).re);
  if (n == 1) {
    Complex e(p);
    e.re.set(H.at(0, 0));
    out.push_back(std::move(e));
    return out;
  }
  real_hessenberg(H, p);

  Real reltol = Real::pow2(-(ctx.bits - ctx.guard_bits), p);
  Real scale0(p), t(p);
  scale0.set_zero();
  for (const Real& z : H.a) {
    mpfr_abs(t.raw(), z.raw(), MPFR_RNDN);
    if (t > scale0) scale0 = t;
  }
  Real floor_tol(p);
  mul(floor_tol, reltol, scale0);

  long sweeps = 0;
  const long max_sweeps = 40 * n;
  long hi = n - 1;
  long since_deflation = 0;
  Real lhs(p), rhs(p);
  Real s(p), tt(p), x(p), y(p), z(p), acc(p), beta(p);
  Real v[3] = {Real(p), Real(p), Real(p)};

  while (hi >= 0) {
    if (hi == 0) {
      Complex e(p);
      e.re.set(H.at(0, 0));
      out.push_back(std::move(e));
      break;
    }
    long lo = hi;
    while (lo > 0) {
      mpfr_abs(lhs.raw(), H.at(lo, lo - 1).raw(), MPFR_RNDN);
      mpfr_abs(rhs.raw(), H.at(lo - 1, lo - 1).raw(), MPFR_RNDN);
      mpfr_abs(t.raw(), H.at(lo, lo).raw(), MPFR_RNDN);
      rhs += t;
      mul(t, reltol, rhs);
      if (rhs.is_zero()) t = floor_tol;
      if (lhs <= t) {
        H.at(lo, lo - 1).set_zero();
        break;
      }
      --lo;
    }
    if (lo == hi) {
      Complex e(p);
      e.re.set(H.at(hi, hi));
      out.push_back(std::move(e));
      --hi;
      since_deflation = 0;
      continue;
    }
    if (lo == hi - 1) {
      real_eig2x2(H.at(lo, lo), H.at(lo, hi), H.at(hi, lo), H.at(hi, hi), out, p);
      hi -= 2;
      since_deflation = 0;
      continue;
    }
    if (++sweeps > max_sweeps)
      throw PrecisionError("eig_real: QR did not deflate within 40*m sweeps (block " +
                           std::to_string(lo) + ".." + std::to_string(hi) + ")");
    ++since_deflation;
    // Francis double shift: s = trace, tt = det of trailing 2x2
    if (since_deflation % 10 == 0) {
      // deterministic exceptional shift: double real shift at h_nn + 0.75 w
      mpfr_abs(s.raw(), H.at(hi, hi - 1).raw(), MPFR_RNDN);
      mpfr_abs(t.raw(), H.at(hi - 1, hi - 2).raw(), MPFR_RNDN);
      s += t;
      s *= 3L;
      s /= 4L;
      s += H.at(hi, hi);
      mul(tt, s, s);
      s *= 2L;
    } else {
      add(s, H.at(hi - 1, hi - 1), H.at(hi, hi));
      mul(tt, H.at(hi - 1, hi - 1), H.at(hi, hi));
      submul(tt, H.at(hi - 1, hi), H.at(hi, hi - 1));
    }
    // first column of (H - aI)(H - bI)
    // x = h00^2 + h01 h10 - s h00 + t ; y = h10 (h00 + h11 - s) ; z = h10 h21
    {
      const Real& h00 = H.at(lo, lo);
      const Real& h01 = H.at(lo, lo + 1);
      const Real& h10 = H.at(lo + 1, lo);
      const Real& h11 = H.at(lo + 1, lo + 1);
      const Real& h21 = H.at(lo + 2, lo + 1);
      mul(x, h00, h00);
      addmul(x, h01, h10);
      submul(x, s, h00);
      x += tt;
      add(acc, h00, h11);
      acc -= s;
      mul(y, h10, acc);
      mul(z, h10, h21);
    }
    for (long k = lo; k <= hi - 2; ++k) {
      if (make_house3(x, y, z, v, beta, p)) {
        long jfrom = (k - 1 > lo) ? k - 1 : lo;
        // left: rows k..k+2
        for (long j = jfrom; j <= hi; ++j) {
          acc.set_zero();
          addmul(acc, v[0], H.at(k, j));
          addmul(acc, v[1], H.at(k + 1, j));
          addmul(acc, v[2], H.at(k + 2, j));
          acc *= beta;
          submul(H.at(k, j), acc, v[0]);
          submul(H.at(k + 1, j), acc, v[1]);
          submul(H.at(k + 2, j), acc, v[2]);
        }
        long ito = (k + 3 < hi) ? k + 3 : hi;
        for (long i = lo; i <= ito; ++i) {
          acc.set_zero();
          addmul(acc, H.at(i, k), v[0]);
          addmul(acc, H.at(i, k + 1), v[1]);
          addmul(acc, H.at(i, k + 2), v[2]);
          acc *= beta;
          submul(H.at(i, k), acc, v[0]);
          submul(H.at(i, k + 1), acc, v[1]);
          submul(H.at(i, k + 2), acc, v[2]);
        }
      }
      x.set(H.at(k + 1, k));
      y.set(H.at(k + 2, k));
      if (k + 3 <= hi)
        z.set(H.at(k + 3, k));
      else
        z.set_zero();
    }
    // final 2x1 rotation in plane (hi-1, hi)
    {
      Real norm(p);
      norm.set_zero();
      addmul(norm, x, x);
      addmul(norm, y, y);
      mpfr_sqrt(norm.raw(), norm.raw(), MPFR_RNDN);
      if (!norm.is_zero()) {
        Real alpha = norm;
        if (x.sign() >= 0) alpha.negate();
        v[0] = x - alpha;
        v[1] = y;
        mpfr_abs(t.raw(), x.raw(), MPFR_RNDN);
        t += norm;
        mul(beta, norm, t);
        t.set(1L);
        div(beta, t, beta);
        long jfrom = hi - 2;
        for (long j = jfrom; j <= hi; ++j) {
          acc.set_zero();
          addmul(acc, v[0], H.at(hi - 1, j));
          addmul(acc, v[1], H.at(hi, j));
          acc *= beta;
          submul(H.at(hi - 1, j), acc, v[0]);
          submul(H.at(hi, j), acc, v[1]);
        }
        for (long i = lo; i <= hi; ++i) {
          acc.set_zero();
          addmul(acc, H.at(i, hi - 1), v[0]);
          addmul(acc, H.at(i, hi), v[1]);
          acc *= beta;
          submul(H.at(i, hi - 1), acc, v[0]);
          submul(H.at(i, hi), acc, v[1]);
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

Real eps_real(const Complex& lambda, const PrecisionContext& ctx) {
  mpfr_prec_t p = (mpfr_prec_t)ctx.work();
  Real e = Real::pow2(-(ctx.bits / 3), p);
  Real mag = lambda.abs();
  mag += Real::of(1L, p);
  e *= mag;
  return e;
}

void symmetrize_spectrum(std::vector<Complex>& eigs, const PrecisionContext& ctx) {
  mpfr_prec_t p = (mpfr_prec_t)ctx.work();
  Real t(p);
  std::vector<size_t> complex_idx;
  for (size_t i = 0; i < eigs.size(); ++i) {
    mpfr_abs(t.raw(), eigs[i].im.raw(), MPFR_RNDN);
    if (t <= eps_real(eigs[i], ctx))
      eigs[i].im.set_zero();
    else
      complex_idx.push_back(i);
  }
  // greedy conjugate pairing, averaged
  std::vector<bool> used(complex_idx.size(), false);
  Real best(p), cand(p), dr(p), di(p);
  for (size_t i = 0; i < complex_idx.size(); ++i) {
    if (used[i]) continue;
    Complex& u = eigs[complex_idx[i]];
    long best_j = -1;
    for (size_t j = i + 1; j < complex_idx.size(); ++j) {
      if (used[j]) continue;
      const Complex& v = eigs[complex_idx[j]];
      if ((u.im.sign() > 0) == (v.im.sign() > 0)) continue;
      sub(dr, u.re, v.re);
      add(di, u.im, v.im);
      mpfr_hypot(cand.raw(), dr.raw(), di.raw(), MPFR_RNDN);
      if (best_j < 0 || cand < best) {
        best = cand;
        best_j = (long)j;
      }
    }
    if (best_j < 0) {
      // no conjugate partner: collapse to the axis
      u.im.set_zero();
      used[i] = true;
      continue;
    }
    Complex& v = eigs[complex_idx[best_j]];
    add(dr, u.re, v.re);
    dr /= 2L;
    sub(di, u.im, v.im);
    di /= 2L;  // (im(u) - im(v))/2, opposite signs
    u.re.set(dr);
    u.im.set(di);
    v.re.set(dr);
    v.im.set(di);
    v.im.negate();
    used[i] = true;
    used[best_j] = true;
  }
  std::sort(eigs.begin(), eigs.end(), [](const Complex& a, const Complex& b) {
    int c = mpfr_cmp(a.re.raw(), b.re.raw());
    if (c != 0) return c < 0;
    return mpfr_cmp(a.im.raw(), b.im.raw()) < 0;
  });
}

Spectrum eigenvalues(const ToeplitzMatrix& A) {
  const PrecisionContext& ctx = A.ctx;
  mpfr_prec_t p = (mpfr_prec_t)ctx.work();
  Spectrum spec;
  spec.l = A.l;
  spec.m = A.m;
  spec.source = A.source;
  spec.ctx = ctx;
  spec.eigenvalues = A.entries.all_real() ? eig_real(A.entries, ctx) : eig_complex(A.entries, ctx);
  symmetrize_spectrum(spec.eigenvalues, ctx);
  spec.det = lu_det(A.entries, ctx);
  spec.trace = Complex(p);
  for (long i = 0; i < A.m; ++i) spec.trace += A.entries.at(i, i);

  // certify: product of eigenvalues vs det, sum vs trace
  Complex prod(p), tmp(p);
  Real t(p);
  prod.set(1.0, 0.0);
  Complex sum(p);
  for (const Complex& e : spec.eigenvalues) {
    cmul(tmp, prod, e, t);
    prod = tmp;
    sum += e;
  }
  Real tol4 = Real::pow2(-(ctx.bits / 4), p);
  Real diff(p), scale(p);
  Complex d = prod - spec.det;
  d.abs_to(diff);
  spec.det.abs_to(scale);
  mul(t, tol4, scale);
  if (diff > t && !(scale.is_zero() && diff.is_zero()))
    throw PrecisionError("eigenvalues: product/determinant identity failed at l=" +
                         std::to_string(A.l) + " m=" + std::to_string(A.m));
  d = sum - spec.trace;
  d.abs_to(diff);
  spec.trace.abs_to(scale);
  scale += Real::of(1L, p);
  mul(t, tol4, scale);
  if (diff > t)
    throw PrecisionError("eigenvalues: sum/trace identity failed at l=" +
                         std::to_string(A.l) + " m=" + std::to_string(A.m));
  return spec;
}

}  // namespace zetalab
