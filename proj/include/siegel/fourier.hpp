#pragma once

#include <vector>

#include "siegel/residue.hpp"
#include "siegel/specfun.hpp"
#include "siegel/symcore.hpp"

namespace siegel {

/// One Fourier term coeff * e(sigma(h x)); h = 0 for the constant families.
struct FourierTerm {
  HalfIntegralForm h;
  Complex coeff;
};

/// Fourier coefficients of E_0^(m)(z, s) at fixed y and s; x enters only through value_at.
struct FourierExpansion {
  int m = 0;
  Complex s;
  double T = 0.0;
  std::vector<FourierTerm> terms;
  /// Sum of |coeff| over the outermost unit shell of the truncation.
  double last_shell = 0.0;

  Complex value_at(const SymMatrix& x) const;
};

/// Terms of F_{0,nu,lambda}^(m)(z, s) with sum of |eigenvalues of y h| <= T; m in {1, 2}.
FourierExpansion fourier_family(const PosDefMatrix& y, int nu, int lambda, Complex s, double T,
                                const PrecisionConfig& prec = {});

/// F_{0,nu,lambda}^(m)(z, s), Re s > m.
Complex fourier_term_F(int nu, int lambda, const UpperHalfPoint& z, Complex s, double T,
                       const PrecisionConfig& prec = {});

/// All families merged, Re s > m.
FourierExpansion fourier_expansion(const PosDefMatrix& y, Complex s, double T, const PrecisionConfig& prec = {});

Complex eisenstein_via_fourier(const UpperHalfPoint& z, Complex s, double T, const PrecisionConfig& prec = {});

/// Extrapolated residues at s = 1 of the singular degree-2 families for one delta ladder.
struct ResidueLimitReport {
  double constant_est = 0.0;
  double constant_err = 0.0;
  double constant_expected = 0.0;
  Rank1Form h;
  double coeff_est = 0.0;
  double coeff_err = 0.0;
  double coeff_expected = 0.0;
};

/// Evaluates F_{0,1,0} + F_{0,2,0} and the F_{0,2,1} coefficient of h at s = 1 +- delta,
/// Richardson-extrapolates delta -> 0 and compares with residue_fourier_series.
ResidueLimitReport residue_limit_check(const UpperHalfPoint& z, const std::vector<double>& deltas,
                                       const Rank1Form& h);

/// Number of worker threads: RESIDUE_THREADS if set, else hardware concurrency.
int worker_threads();

}  // namespace siegel
