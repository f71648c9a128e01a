#pragma once

#include <optional>

#include "siegel/specfun.hpp"
#include "siegel/symcore.hpp"

namespace siegel {

/// v' = g11, w = g12, W = (w + i sqrt(det g)) / v' for a binary form g.
struct KroneckerData {
  double v_prime = 0.0;
  double w = 0.0;
  Complex W;

  static KroneckerData from(const PosDefMatrix& g);
};

/// Laurent coefficients c_{-2}, c_{-1}, c_0 at center; absent entries are empty.
struct LaurentWindow {
  Complex center;
  std::optional<Complex> c_minus2;
  std::optional<Complex> c_minus1;
  std::optional<Complex> c_0;
};

struct SeriesValue {
  Complex value;
  double error = 0.0;
};

/// pi^{-s} Gamma(s) sum_{a != 0} g[a]^{-s} for g of any size, continued to s != 0, m/2.
Complex epstein_lambda(const PosDefMatrix& g, Complex s, const PrecisionConfig& prec = {});

/// zeta_g(s) = sum_{a != 0 mod +-1} g[a]^{-s}, binary g, continued to s != 1.
Complex epstein_zeta(const PosDefMatrix& g, Complex s, const PrecisionConfig& prec = {});

/// Shell sum over g[a] <= radius with the lattice-count corrected tail, Re s > 1.
SeriesValue epstein_zeta_direct(const PosDefMatrix& g, Complex s, double radius);

/// gamma + 1/2 log(v' / (2 sqrt det g)) - log|eta(W)|^2.
double kronecker_beta(const PosDefMatrix& g);

struct KroneckerCheck {
  double residue_est = 0.0;
  double residue_expected = 0.0;
  double const_est = 0.0;
  double const_expected = 0.0;
};

/// Richardson-extrapolated residue and bracket constant of zeta_g at s = 1 from s = 1 +- delta.
KroneckerCheck kronecker_limit_check(const PosDefMatrix& g, double delta);

/// zeta_nu^(m)(g, s); nu in {0, m} any m, nu = 1 for m <= 4 (continued through the theta split).
Complex km_zeta(int nu, int m, const PosDefMatrix& g, Complex s, const PrecisionConfig& prec = {});

/// Primitive shell sum for nu = 1 over g[a] <= radius with corrected tail, Re s > m/2.
SeriesValue km_zeta_primitive_direct(const PosDefMatrix& g, Complex s, double radius);

/// xi_nu^(m)(g, s) = prod_{i<nu} xi(2s - i) zeta_nu^(m)(g, s).
Complex km_xi_completed(int nu, int m, const PosDefMatrix& g, Complex s, const PrecisionConfig& prec = {});

enum class ResiduePoint { Low, High };

/// Residue of xi_nu^(m)(g, s) at s = mu/2 (Low) or s = (m - mu)/2 (High).
Complex arakawa_residue(int nu, int m, const PosDefMatrix& g, int mu, ResiduePoint at,
                        const PrecisionConfig& prec = {});

/// Constant term C_{m-1}^(m)(y) of xi_{m-1}^(m)(2y, s) at s = m/2. A supplied value wins;
/// otherwise closed form for m = 2 and MissingInputError for m >= 3.
double km_constant_term_C(int m, const PosDefMatrix& y, std::optional<double> supplied = std::nullopt);

/// Laurent window of xi_1^(2)(2y, s) at s = 1 by symmetric extrapolation (oracle for the closed form).
LaurentWindow km_xi_laurent_numeric(const PosDefMatrix& y, double delta);

}  // namespace siegel
