// Taylor coefficient generators for zeta*(z) = 2(z-1)zeta(z), the trivial
// comparator zeta_T(z) = pi^{z/2}/Gamma(1+z/2), the deflated zeta-hat_l, and
// the transports between the z-plane, the w-plane (theta) and the
// reciprocal (tau).
#pragma once

#include <string>

#include "zetalab/constants.hpp"
#include "zetalab/series.hpp"

namespace zetalab {

struct FunctionId {
  enum class Kind { ZetaStar, ZetaTrivial, ZetaHat };
  Kind kind = Kind::ZetaStar;
  long hat_l = 0;  // only for ZetaHat, >= 1

  static FunctionId zeta_star() { return {Kind::ZetaStar, 0}; }
  static FunctionId zeta_trivial() { return {Kind::ZetaTrivial, 0}; }
  static FunctionId zeta_hat(long l) {
    if (l < 1) throw DomainError("zeta-hat index must be >= 1");
    return {Kind::ZetaHat, l};
  }
  // "zeta-star" | "zeta-trivial" | "zeta-hat:L"
  static FunctionId parse(const std::string& name);

  std::string label() const;
  bool operator==(const FunctionId&) const = default;
};

// Exact locations of the trivial zeros and the W_l limits.
struct TrivialZeroTable {
  // z_n = -2n
  static Rational z(long n) { return Rational(-2 * n, 1); }
  // w_n = -2n/(2n+1)
  static Rational w(long n) { return Rational(-2 * n, 2 * n + 1); }
  // W_l = prod_{k=1..l} (2k+1)/(2k)
  static Rational W(long l) {
    Rational r(1, 1);
    for (long k = 1; k <= l; ++k) r *= Rational(2 * k + 1, 2 * k);
    return r;
  }
};

// z-plane Taylor coefficients of zeta*(z), a_0 = 1.  Computed from Hasse's
// globally convergent binomial series for the alternating zeta function,
// reassembled as 2(s-1)eta(s)/(1-2^{1-s}) by truncated-series division.
PowerSeries zeta_star_taylor(long order, const PrecisionContext& ctx);

// z-plane Taylor coefficients of zeta_T(z) = pi^{z/2}/Gamma(1+z/2) via
// series_exp of the log-gamma series; coefficient 0 equals 1.
PowerSeries zeta_trivial_taylor(long order, const PrecisionContext& ctx, OracleTable& oracle);

// zeta-hat_l: zeta* with the first l-1 trivial zeros divided out.
PowerSeries zeta_hat_taylor(long l, long order, const PrecisionContext& ctx);

// Dispatch on FunctionId (builds its own OracleTable for ZetaTrivial).
PowerSeries taylor_of(const FunctionId& f, long order, const PrecisionContext& ctx);

// theta_m: w-plane coefficients of f(w/(w+1)), binomial pullback.
PowerSeries moebius_pullback(const PowerSeries& a);

// Inverse transport back to the z-plane (exact on truncations).
PowerSeries moebius_pushforward(const PowerSeries& theta);

// tau_m: coefficients of 1/f~(w).
PowerSeries tau_coefficients(const PowerSeries& theta);

// Convenience: theta series of f through the given order.
PowerSeries theta_of(const FunctionId& f, long order, const PrecisionContext& ctx);

}  // namespace zetalab
