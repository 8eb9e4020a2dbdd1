// Pade [l/m] approximants of the transported series, the determinant-ratio
// route to the leading numerator coefficient, and the W_l / R_l estimators.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "zetalab/toeplitz.hpp"

namespace zetalab {

// A Pade table entry is degenerate (singular linear system / vanishing
// determinant); reported, never silently perturbed.
struct DegeneracyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PadeResult {
  long l = 0;
  long m = 0;
  std::vector<Complex> P;  // numerator coefficients 0..l, P[0] = 1
  std::vector<Complex> Q;  // denominator coefficients 0..m, Q[0] = 1
  long residual_order = 0;  // verified contact order (>= l+m+1)
};

struct REstimate {
  long l = 1;
  PrecisionContext ctx;
  std::vector<std::pair<long, Real>> samples;      // (m, det(L_{l,m})/W_l^m)
  std::vector<std::pair<long, Real>> tau_samples;  // l=1 only: tau_m/(-3/2)^m
  Real extrapolated;
};

// Solves the m x m Toeplitz system for Q from the contact conditions on
// degrees l+1..l+m, reads P off degrees 0..l, and verifies the contact
// order before returning.
PadeResult pade_approximant(long l, long m, const PowerSeries& theta);

// p_{l,m,l} = det(L_{l,m+1}) / det(L_{l,m}).
Complex leading_coeff_det_ratio(long l, long m, const PowerSeries& theta);

// W_l = prod_{k=1..l} (2k+1)/(2k), exact.
Rational W_limit(long l);

// Samples det(L_{l,m})/W_l^m over [m_lo, m_hi] and extrapolates the limit by
// iterated Aitken (order 2) on the last quarter of the samples.
REstimate estimate_R(long l, const PowerSeries& theta, long m_lo, long m_hi);

struct NumeratorRoots {
  std::vector<Complex> roots;
  bool reduced_degree = false;  // leading coefficient vanished
};

// The l roots of P_{l,m}(w); closed form for degree <= 2, otherwise
// companion-matrix eigenvalues refined by Newton.
NumeratorRoots numerator_roots(const PadeResult& pade, const PrecisionContext& ctx);

// Iterated Aitken delta-squared extrapolation (two passes) of a sequence
// with geometric error decay; returns the last accelerated value.
Real aitken_extrapolate(const std::vector<Real>& xs, const PrecisionContext& ctx);

}  // namespace zetalab
