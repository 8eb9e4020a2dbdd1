// Reference constants computed by routes independent of the series
// generators: Euler-Maclaurin point evaluation of zeta and its derivative,
// Bernoulli numbers, Euler's constant, pi and logarithms.  Everything here
// is an oracle used to cross-check the main coefficient pipeline.
#pragma once

#include <vector>

#include "zetalab/precision.hpp"

namespace zetalab {

// Exact Bernoulli numbers B_2, B_4, ..., B_{2n} via tangent numbers
// (integer-only recurrence, no rational gcd churn).
class BernoulliTable {
 public:
  // Ensures B_{2r} is available for r <= rmax.
  void extend(long rmax);
  // B_{2r} as num/den, r >= 1.
  const Integer& num(long r) const { return nums_[r - 1]; }
  const Integer& den(long r) const { return dens_[r - 1]; }
  long size() const { return (long)nums_.size(); }
  Real to_real(long r, mpfr_prec_t prec) const;

 private:
  std::vector<Integer> nums_;
  std::vector<Integer> dens_;
};

// Memoized per-context constants table.  Build fully before sharing across
// threads; accessors are non-const because they fill the cache.
class OracleTable {
 public:
  explicit OracleTable(PrecisionContext ctx);

  const PrecisionContext& ctx() const { return ctx_; }

  const Real& pi();
  const Real& ln_pi();
  const Real& ln_2pi();
  const Real& ln2();
  const Real& euler_gamma();  // Euler-Maclaurin, checked against mpfr

  // zeta(k) for integer k >= 2, memoized.
  const Real& zeta_int(long k);

  // Euler-Maclaurin evaluation of zeta at a real point s != 1.
  Real zeta_point(const Real& s);
  // d/ds zeta(s) at a real point s != 1.
  Real zeta_deriv(const Real& s);

  const Real& zeta_half();   // zeta(1/2)
  const Real& zeta_three();  // zeta(3)

  // R_1 = pi^2 / (9 zeta(3)), verified against -1/(36 zeta'(-2)) to
  // bits - guard_bits; the mismatch of the two routes throws.
  const Real& r1();

  // Point oracles for the generated series: 2(z-1)zeta(z) and
  // pi^{z/2}/Gamma(1+z/2) evaluated directly (mpfr gamma, not our series).
  Real zeta_star_at(const Real& z);
  Real zeta_trivial_at(const Real& z);

  BernoulliTable& bernoulli() { return bern_; }

 private:
  PrecisionContext ctx_;
  mpfr_prec_t wp_;
  BernoulliTable bern_;
  std::vector<Real> zeta_k_;  // index k-2
  Real pi_, ln_pi_, ln_2pi_, ln2_, gamma_, zeta_half_, zeta_three_, r1_;
  bool have_pi_ = false, have_gamma_ = false, have_zeta_half_ = false,
       have_zeta_three_ = false, have_r1_ = false;
};

}  // namespace zetalab
