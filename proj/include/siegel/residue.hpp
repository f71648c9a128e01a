#pragma once

#include <optional>
#include <vector>

#include "siegel/specfun.hpp"
#include "siegel/symcore.hpp"
#include "siegel/zetalattice.hpp"

namespace siegel {

/// z = x + i y in the Siegel upper half space.
struct UpperHalfPoint {
  SymMatrix x;
  PosDefMatrix y;

  UpperHalfPoint(const SymMatrix& x_, const PosDefMatrix& y_);
  int size() const { return y.size(); }
};

// Holomorphic factors of the two double-pole constant-term families at s = m/2.
Complex alpha_m(int m, const PosDefMatrix& y, Complex s);
Complex alpha_m_prime(int m, const PosDefMatrix& y, Complex s);
/// Carries the factor zeta(2s - m) split off with Gamma(2s - m) zeta(4s - 2m + 1).
Complex beta_m(int m, const PosDefMatrix& y, Complex s);
Complex beta_m_prime(int m, const PosDefMatrix& y, Complex s);

/// Laurent windows at s = m/2 of F_{0,m-1,0} (A) and F_{0,m,0} (B). C is needed for A's c_{-1}.
LaurentWindow laurent_A(const PosDefMatrix& y, int m, std::optional<double> km_constant = std::nullopt);
LaurentWindow laurent_B(const PosDefMatrix& y, int m);

/// Fully expanded products for A_{-2} and B_{-2}.
double explicit_A_minus2(const PosDefMatrix& y, int m);
double explicit_B_minus2(const PosDefMatrix& y, int m);

/// Residue of the constant-term families at s = m/2.
double residue_A_constant(const PosDefMatrix& y, int m, std::optional<double> km_constant = std::nullopt);
/// Residue coefficient in front of the rank-one Fourier sum.
double residue_B_coefficient(const PosDefMatrix& y, int m);

struct ResidueTerm {
  Rank1Form h;
  double coeff = 0.0;
};

struct ResidueReport {
  int m = 0;
  double A_term = 0.0;
  double B_coeff = 0.0;
  std::vector<ResidueTerm> terms;
  double trace_bound = 0.0;
  double tail_bound = 0.0;

  Complex value_at(const SymMatrix& x) const;
};

struct ResidueOptions {
  std::optional<double> km_constant;
  /// Raise DomainError when the tail bound exceeds this.
  std::optional<double> tolerance;
};

/// Res_{s=m/2} E_0^(m)(z, s) as A + B sum over rank-one h with trace <= T, m in {2, 3}.
ResidueReport residue_fourier_series(const UpperHalfPoint& z, double T, const ResidueOptions& opt = {});

/// Res_{s=(m+1)/2} E_0^(m)(z, s).
double residue_at_next_point(int m);
/// Residue of E_0^(m)(z, s/2) at s = m + 1.
double residue_at_next_point_rescaled(int m);

enum class Singularity { Holomorphic, SimplePole, DoublePole };

Singularity classify_singularity(int m, int nu, int lambda);
const char* to_string(Singularity s);

}  // namespace siegel
