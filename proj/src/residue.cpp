#include "siegel/residue.hpp"

#include <cmath>

#include "siegel/errors.hpp"
#include "siegel/hypergeom.hpp"

namespace siegel {

namespace {

Complex cpow(double x, Complex e) { return std::exp(e * std::log(x)); }

Complex zeta_logderiv(Complex s) { return riemann_zeta_deriv(s) / riemann_zeta(s); }

void require_degree(int m) {
  if (m < 2) throw DomainError("degree m must be >= 2");
}

double det2y_pow(const PosDefMatrix& y, double e) {
  return std::pow(std::pow(2.0, y.size()) * y.det(), e);
}

}  // namespace

UpperHalfPoint::UpperHalfPoint(const SymMatrix& x_, const PosDefMatrix& y_) : x(x_), y(y_) {
  if (x.rows() != y.size() || x.cols() != y.size()) throw DomainError("UpperHalfPoint: x and y sizes differ");
  if (!x.isApprox(x.transpose(), 1e-14)) throw DomainError("UpperHalfPoint: x not symmetric");
}

Complex alpha_m(int m, const PosDefMatrix& y, Complex s) {
  require_degree(m);
  Complex acc = std::pow(2.0, m - 1) * cpow(kPi, 2.0 * (m - 1) * s) * cpow(y.det(), s);
  const Complex g = gamma_m(m - 1, s);
  acc /= g * g * riemann_zeta(2.0 * s);
  for (int j = 1; j <= m - 1; ++j) acc /= riemann_zeta(4.0 * s - 2.0 * j);
  return acc;
}

Complex alpha_m_prime(int m, const PosDefMatrix& y, Complex s) {
  Complex d = 2.0 * (m - 1) * std::log(kPi) + std::log(y.det()) -
              2.0 * digamma_like_logderiv_gamma_m(m - 1, s) - 2.0 * zeta_logderiv(2.0 * s);
  for (int j = 1; j <= m - 1; ++j) d -= 4.0 * zeta_logderiv(4.0 * s - 2.0 * j);
  return d * alpha_m(m, y, s);
}

Complex beta_m(int m, const PosDefMatrix& y, Complex s) {
  require_degree(m);
  const double k = kappa(m);
  Complex acc = cpow(2.0, -2.0 * m * s + 0.5 * m * (m + 3)) * std::pow(kPi, 0.5 * (m * m + 2 * m - 1)) *
                cpow(y.det(), -s + 0.5 * (m + 1));
  const Complex g = gamma_m(m, s);
  acc *= gamma_m(m - 1, 2.0 * s - k) / (g * g * riemann_zeta(2.0 * s));
  for (int j = 1; j <= m - 2; ++j) acc *= riemann_zeta(4.0 * s - double(m + j));
  for (int j = 1; j <= m - 1; ++j) acc /= riemann_zeta(4.0 * s - 2.0 * j);
  return acc * riemann_zeta(2.0 * s - double(m));
}

Complex beta_m_prime(int m, const PosDefMatrix& y, Complex s) {
  const double k = kappa(m);
  Complex d = -2.0 * m * std::log(2.0) - std::log(y.det()) +
              2.0 * digamma_like_logderiv_gamma_m(m - 1, 2.0 * s - k) - 2.0 * digamma_like_logderiv_gamma_m(m, s) -
              2.0 * zeta_logderiv(2.0 * s) + 2.0 * zeta_logderiv(2.0 * s - double(m));
  for (int j = 1; j <= m - 2; ++j) d += 4.0 * zeta_logderiv(4.0 * s - double(m + j));
  for (int j = 1; j <= m - 1; ++j) d -= 4.0 * zeta_logderiv(4.0 * s - 2.0 * j);
  return d * beta_m(m, y, s);
}

LaurentWindow laurent_A(const PosDefMatrix& y, int m, std::optional<double> km_constant) {
  require_degree(m);
  const Complex s0 = 0.5 * m;
  const double lead = v_constant(m - 1) * det2y_pow(y, -0.5 * (m - 1));
  const Complex a = alpha_m(m, y, s0);
  LaurentWindow out;
  out.center = s0;
  out.c_minus2 = 0.125 * lead * a;
  if (m == 2 || km_constant) {
    const double C = km_constant_term_C(m, y, km_constant);
    out.c_minus1 = a * (0.5 * C + 0.25 * kEulerGamma * lead) + 0.125 * lead * alpha_m_prime(m, y, s0);
  }
  return out;
}

LaurentWindow laurent_B(const PosDefMatrix& y, int m) {
  require_degree(m);
  const Complex s0 = 0.5 * m;
  const Complex b = beta_m(m, y, s0);
  LaurentWindow out;
  out.center = s0;
  out.c_minus2 = 0.125 * b;
  out.c_minus1 = 0.25 * kEulerGamma * b + 0.125 * beta_m_prime(m, y, s0);
  return out;
}

double explicit_A_minus2(const PosDefMatrix& y, int m) {
  require_degree(m);
  const double md = m;
  double acc = std::pow(2.0, 0.5 * (-md * md + 2 * md - 8)) * std::pow(kPi, 0.25 * (md * md + 3 * md - 2)) *
               det2y_pow(y, 0.5) / riemann_zeta(md);
  for (int i = 2; i <= m - 1; ++i) acc *= gamma(0.5 * i) * riemann_zeta(double(i));
  for (int j = 0; j <= m - 2; ++j) acc /= std::pow(gamma(0.5 * (m - j)), 2);
  for (int j = 1; j <= m - 1; ++j) acc /= riemann_zeta(2.0 * (m - j));
  return acc;
}

double explicit_B_minus2(const PosDefMatrix& y, int m) {
  require_degree(m);
  const double md = m;
  double acc = -std::pow(2.0, 0.5 * (-md * md + 2 * md - 8)) * std::pow(kPi, 0.25 * (md * md + 3 * md)) *
               det2y_pow(y, 0.5) / riemann_zeta(md);
  for (int j = 0; j <= m - 2; ++j) acc *= gamma(0.5 * (m - 1 - j));
  for (int j = 0; j <= m - 1; ++j) acc /= std::pow(gamma(0.5 * (m - j)), 2);
  for (int j = 1; j <= m - 2; ++j) acc *= riemann_zeta(double(m - j));
  for (int j = 1; j <= m - 1; ++j) acc /= riemann_zeta(2.0 * (m - j));
  return acc;
}

double residue_A_constant(const PosDefMatrix& y, int m, std::optional<double> km_constant) {
  require_degree(m);
  const Complex s0 = 0.5 * m;
  const double C = km_constant_term_C(m, y, km_constant);
  const double lead = v_constant(m - 1) * det2y_pow(y, -0.5 * (m - 1));
  return (0.5 * alpha_m(m, y, s0) * C + 0.125 * lead * alpha_m_prime(m, y, s0) + 0.125 * beta_m_prime(m, y, s0))
      .real();
}

double residue_B_coefficient(const PosDefMatrix& y, int m) {
  require_degree(m);
  const double g = gamma_m(m, 0.5 * m).real();
  double acc = std::pow(2.0, m - 2) * std::pow(kPi, m * kappa(m)) * std::pow(y.det(), 0.5 * m) / (g * g) /
               riemann_zeta(double(m));
  for (int j = 1; j <= m - 2; ++j) acc *= riemann_zeta(double(m - j));
  for (int j = 1; j <= m - 1; ++j) acc /= riemann_zeta(2.0 * (m - j));
  return acc;
}

Complex ResidueReport::value_at(const SymMatrix& x) const {
  Complex acc = A_term;
  for (const auto& term : terms) {
    const double phase = 2.0 * kPi * term.h.reconstruct().trace_with(x);
    acc += term.coeff * Complex(std::cos(phase), std::sin(phase));
  }
  return acc;
}

ResidueReport residue_fourier_series(const UpperHalfPoint& z, double T, const ResidueOptions& opt) {
  const int m = z.size();
  if (m != 2 && m != 3) throw DomainError("residue_fourier_series: degree must be 2 or 3");
  if (!(T > 0)) throw DomainError("residue_fourier_series: trace bound must be positive");
  ResidueReport rep;
  rep.m = m;
  rep.A_term = residue_A_constant(z.y, m, opt.km_constant);
  rep.B_coeff = residue_B_coefficient(z.y, m);
  rep.trace_bound = T;
  for (const auto& h : rank1_enumerate(m, T)) {
    const double sigma0 = static_cast<double>(divisor_count(h.t < 0 ? -h.t : h.t));
    rep.terms.push_back({h, rep.B_coeff * sigma0 * eta_rank1_residue_point(z.y, h)});
  }
  // tail: y[w] |t| >= lambda_min tr(h); at most sigma_0(n) (2 sqrt(n) + 1)^m forms of trace n per sign
  const double lmin = Eigen::SelfAdjointEigenSolver<SymMatrix>(z.y.matrix()).eigenvalues().minCoeff();
  const double lead = std::pow(kPi, 0.5 * (m - 1)) * gamma_m(m - 1, 0.5 * (m - 1)).real() *
                      det2y_pow(z.y, -0.5 * (m - 1));
  double tail = 0.0;
  for (std::int64_t n = static_cast<std::int64_t>(std::floor(T)) + 1;; ++n) {
    const double nd = static_cast<double>(n);
    const double sig = static_cast<double>(divisor_count(n));
    const double term = 2.0 * sig * sig * std::pow(2.0 * std::sqrt(nd) + 1.0, m) *
                        bessel_k(0.0, 2.0 * kPi * lmin * nd);
    tail += term;
    if (term <= 1e-6 * tail) break;
  }
  rep.tail_bound = std::abs(rep.B_coeff) * lead * tail;
  if (opt.tolerance && rep.tail_bound > *opt.tolerance) {
    throw DomainError("residue_fourier_series: tail bound exceeds tolerance; raise the trace bound");
  }
  return rep;
}

double residue_at_next_point(int m) {
  require_degree(m);
  // xi(2s - m) has residue 1/2 in s at s = (m+1)/2; the other factors are regular there
  double acc = 0.5 / xi_completed(double(m + 1));
  for (int j = 1; j <= m / 2; ++j) acc *= xi_completed(double(1 + 2 * j)) / xi_completed(double(2 * m + 2 - 2 * j));
  return acc;
}

double residue_at_next_point_rescaled(int m) { return 2.0 * residue_at_next_point(m); }

Singularity classify_singularity(int m, int nu, int lambda) {
  if (m < 1 || nu < 0 || nu > m || lambda < 0 || lambda > nu) {
    throw DomainError("classify_singularity: need 0 <= lambda <= nu <= m");
  }
  if (lambda == 0 && (nu == m - 1 || nu == m)) return Singularity::DoublePole;
  if (nu == m && lambda == 1) return Singularity::SimplePole;
  return Singularity::Holomorphic;
}

const char* to_string(Singularity s) {
  switch (s) {
    case Singularity::Holomorphic:
      return "holomorphic";
    case Singularity::SimplePole:
      return "simple_pole";
    case Singularity::DoublePole:
      return "double_pole";
  }
  return "?";
}

}  // namespace siegel
