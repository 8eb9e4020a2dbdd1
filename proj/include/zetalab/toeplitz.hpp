// L_{l,m}(f) construction and dense high-precision linear algebra: LU
// determinants and the in-house Hessenberg + shifted-QR eigensolver.
#pragma once

#include <vector>

#include "zetalab/series.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab {

// Dense square complex matrix, row-major.
struct CMat {
  long n = 0;
  std::vector<Complex> a;

  CMat() = default;
  CMat(long size, mpfr_prec_t prec) : n(size) {
    a.reserve((size_t)size * size);
    for (long i = 0; i < size * size; ++i) a.emplace_back(prec);
  }
  Complex& at(long i, long j) { return a[(size_t)i * n + j]; }
  const Complex& at(long i, long j) const { return a[(size_t)i * n + j]; }
  bool all_real() const {
    for (const Complex& z : a)
      if (!z.im.is_zero()) return false;
    return true;
  }
};

// m x m Toeplitz slice of a theta series: entries[i][j] = theta_{l+i-j},
// with theta_0 = 1 and theta_j = 0 for j < 0.
struct ToeplitzMatrix {
  long l = 1;
  long m = 1;
  FunctionId source;
  PrecisionContext ctx;
  CMat entries;
};

// Eigenvalue multiset of one L_{l,m}(f) plus the identities that certify it.
struct Spectrum {
  long l = 1;
  long m = 1;
  FunctionId source;
  PrecisionContext ctx;
  std::vector<Complex> eigenvalues;  // sorted by (re, im)
  Complex det;
  Complex trace;
};

ToeplitzMatrix build_toeplitz(long l, long m, const PowerSeries& theta,
                              const FunctionId& source = FunctionId::zeta_star());

// Determinant via dense LU with partial pivoting on a copy.  An exactly zero
// pivot column yields determinant 0.
Complex determinant(const ToeplitzMatrix& A);
Complex lu_det(CMat work, const PrecisionContext& ctx);

// Solves A x = b by LU with partial pivoting; throws DegeneracyError from
// pade when the pivot falls under 2^-(bits-guard) relative to the matrix
// scale (reported via PrecisionError here).
std::vector<Complex> lu_solve(CMat A, std::vector<Complex> b, const PrecisionContext& ctx);

struct HessenbergResult {
  CMat H;  // upper Hessenberg, unitarily similar to the input
  CMat Q;  // accumulated transform: input = Q H Q^*
};
HessenbergResult hessenberg(const CMat& A, const PrecisionContext& ctx);

// All m eigenvalues with multiplicity.  Real input takes the Francis
// double-shift path; complex input the Wilkinson single-shift path.  The
// returned spectrum satisfies the det-product and trace-sum identities to
// 2^-(bits/4) or a PrecisionError is thrown.
Spectrum eigenvalues(const ToeplitzMatrix& A);

// Eigensolver cores, exposed for cross-path testing.
std::vector<Complex> eig_complex(CMat A, const PrecisionContext& ctx);
std::vector<Complex> eig_real(const CMat& A, const PrecisionContext& ctx);

// Snap near-real eigenvalues to the axis and enforce exact conjugate
// symmetry (greedy pairing + averaging), then sort by (re, im).
void symmetrize_spectrum(std::vector<Complex>& eigs, const PrecisionContext& ctx);

// eps_real rule shared with the classifier: 2^(-bits/3) * (1 + |lambda|).
Real eps_real(const Complex& lambda, const PrecisionContext& ctx);

}  // namespace zetalab
