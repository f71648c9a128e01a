#pragma once

#include "siegel/specfun.hpp"
#include "siegel/symcore.hpp"

namespace siegel {

/// Eigenvalue signature of g^{1/2} h g^{1/2}: p positive, q negative, r zero;
/// delta_plus / delta_minus are products of |eigenvalues| (1 when empty).
struct SignatureData {
  int p = 0;
  int q = 0;
  int r = 0;
  double delta_plus = 1.0;
  double delta_minus = 1.0;
};

struct EtaValue {
  Complex value;
  double error = 0.0;
};

/// eta_m(g, h; alpha, beta) = int_{x +- h > 0} e^{-tr(gx)} det(x+h)^{alpha-kappa} det(x-h)^{beta-kappa} dx
/// by double-exponential cubature, m in {1, 2}.
EtaValue eta_quadrature(const PosDefMatrix& g, const SymMatrix& h, Complex alpha, Complex beta,
                        const PrecisionConfig& prec = {});

/// det(g)^{alpha+beta-kappa} eta_m(g, h; alpha, beta).
EtaValue eta_star(const PosDefMatrix& g, const SymMatrix& h, Complex alpha, Complex beta,
                  const PrecisionConfig& prec = {});

/// xi_m(g, h) = i^{m(beta-alpha)} 2^m pi^{m kappa} Gamma_m(alpha)^{-1} Gamma_m(beta)^{-1} eta_m(2g, pi h).
EtaValue xi_from_eta(const PosDefMatrix& g, const SymMatrix& h, Complex alpha, Complex beta,
                     const PrecisionConfig& prec = {});

/// Closed form of xi_m(g, 0; alpha, beta), Re(alpha + beta) > 2 kappa(m) - 1.
Complex xi_zero_closed(int m, const PosDefMatrix& g, Complex alpha, Complex beta);

/// eta_1(g, H; a, a) = Gamma(a)/sqrt(pi) (2|H|/g)^{a-1/2} K_{a-1/2}(g|H|), H != 0.
Complex eta1_equal_params(double g, double H, Complex a);

SignatureData signature(const PosDefMatrix& g, const SymMatrix& h);

/// Normalized omega_m built from eta_star by cubature.
EtaValue omega(const PosDefMatrix& g, const SymMatrix& h, Complex alpha, Complex beta,
               const PrecisionConfig& prec = {});

/// eta_m(2y, pi t w tw; m/2, m/2) in closed form via K_0.
double eta_rank1_residue_point(const PosDefMatrix& y, const Rank1Form& h1);

}  // namespace siegel
