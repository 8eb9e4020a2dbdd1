// Truncated Taylor series with high-precision complex coefficients.
#pragma once

#include <string>
#include <vector>

#include "zetalab/precision.hpp"

namespace zetalab {

// Coefficient sequence of degree 0..order for one named function.  Immutable
// by convention after construction; every operation returns a fresh series.
struct PowerSeries {
  PrecisionContext ctx;
  std::string label;
  std::vector<Complex> coeffs;  // coeffs[k] multiplies w^k

  PowerSeries() = default;
  PowerSeries(PrecisionContext c, long order, std::string lab = "")
      : ctx(c), label(std::move(lab)) {
    coeffs.reserve(order + 1);
    for (long k = 0; k <= order; ++k) coeffs.emplace_back((mpfr_prec_t)c.work());
  }

  long order() const { return (long)coeffs.size() - 1; }
  const Complex& operator[](long k) const { return coeffs[k]; }
  Complex& at(long k) { return coeffs[k]; }

  // Largest |re|+|im| over all coefficients.
  Real max_abs() const;

  // Horner evaluation at a real point.
  Complex eval(const Real& z) const;

  void require_unit_head(const char* who) const {
    if (coeffs.empty() || !coeffs[0].re.equals(1) || !coeffs[0].im.is_zero())
      throw DomainError(std::string(who) + ": series must have constant term 1");
  }
};

// Cauchy product truncated to min(a.order, b.order).
PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b);

// Multiplicative inverse of a series with constant term 1.
PowerSeries series_reciprocal(const PowerSeries& a);

// exp of a series with constant term 0.
PowerSeries series_exp(const PowerSeries& a);

// Divide a series by a polynomial with constant term 1 (polynomial given in
// ascending degree order; may be shorter than the series).
PowerSeries series_div_poly(const PowerSeries& a, const std::vector<Complex>& p);

}  // namespace zetalab
