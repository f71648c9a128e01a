#pragma once

#include <complex>
#include <cstdint>
#include <string>

namespace siegel {

using Complex = std::complex<double>;

/// Working precision knobs shared by series, lattice sums and cubature.
struct PrecisionConfig {
  double abs_tol = 1e-13;
  double rel_tol = 1e-12;
  int max_terms = 200000;
  int quadrature_depth = 6;
};

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

/// kappa(nu) = (nu + 1) / 2.
constexpr double kappa(int nu) { return 0.5 * (nu + 1); }

// Gamma family. Poles raise PoleError.
Complex gamma(Complex s);
Complex log_gamma(Complex s);
Complex digamma(Complex s);
double gamma(double s);
double digamma(double s);

/// Multivariate gamma pi^{m(m-1)/4} prod_{nu<m} Gamma(s - nu/2); gamma_m(0, s) = 1.
Complex gamma_m(int m, Complex s);
/// d/ds log gamma_m(m, s) = sum_{nu<m} psi(s - nu/2).
Complex digamma_like_logderiv_gamma_m(int m, Complex s);

/// Hurwitz zeta sum_{n>=0} (n+a)^{-s}, a > 0, s != 1, by Euler-Maclaurin.
Complex hurwitz_zeta(Complex s, double a);
Complex riemann_zeta(Complex s);
/// zeta'(s) by term-wise differentiated Euler-Maclaurin.
Complex riemann_zeta_deriv(Complex s);
double riemann_zeta(double s);
double riemann_zeta_deriv(double s);

/// xi(s) = pi^{-s/2} Gamma(s/2) zeta(s); uses xi(s) = xi(1-s) for Re s < 1/2.
Complex xi_completed(Complex s);
double xi_completed(double s);

/// v(nu) = prod_{i=2}^{nu} xi(i), v(1) = 1.
double v_constant(int nu);

/// Dedekind eta e(z/24) prod (1 - e(nz)), Im z > 0.
Complex dedekind_eta(Complex z);

/// Modified Bessel function K_nu(x) for x > 0 and complex order.
Complex bessel_k(Complex nu, double x);
double bessel_k(double nu, double x);

/// Upper incomplete gamma Gamma(a, x), x > 0.
Complex upper_incomplete_gamma(Complex a, double x);

/// sigma_s(a) = sum_{d | a} d^s.
Complex sigma_power(std::int64_t a, Complex s);
double sigma_power(std::int64_t a, double s);
std::int64_t divisor_count(std::int64_t a);

/// Kronecker symbol (d/n).
int kronecker_symbol(std::int64_t d, std::int64_t n);

/// L(s, chi_d) with chi_d(n) = (d/n). d = 1 gives zeta(s). Re s > 0.
Complex dirichlet_l(Complex s, std::int64_t d);
double dirichlet_l(double s, std::int64_t d);

}  // namespace siegel
