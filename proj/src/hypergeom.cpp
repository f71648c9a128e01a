#include "siegel/hypergeom.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "siegel/errors.hpp"
#include "siegel/quadrature.hpp"

namespace siegel {

namespace {

constexpr double kCutoff = 60.0;  // e^{-60} below any tolerance in use

template <class T>
T cpow(double x, const T& e) {
  if constexpr (std::is_same_v<T, double>) {
    return std::pow(x, e);
  } else {
    return std::exp(e * std::log(x));
  }
}

template <class T>
T half_line_cut(const quad::DeRule& r, const auto& f) {
  T acc{};
  for (std::size_t i = 0; i < r.x.size() && r.x[i] <= kCutoff; ++i) acc += r.w[i] * f(r.x[i]);
  return acc;
}

// eta_1(1, H; alpha, beta) with x = |H| + u.
template <class T>
T eta1_normalized(double H, const T& alpha, const T& beta, int level) {
  const double aH = std::abs(H);
  const auto& rule = quad::exp_sinh_half(level);
  const T ea = alpha - 1.0;
  const T eb = beta - 1.0;
  const T sum = half_line_cut<T>(rule, [&](double u) {
    const double plus = H >= 0 ? 2.0 * aH + u : u;   // x + H
    const double minus = H >= 0 ? u : 2.0 * aH + u;  // x - H
    return std::exp(-u) * cpow(plus, ea) * cpow(minus, eb);
  });
  return std::exp(-aH) * sum;
}

// eta_2(1, diag(d1, d2); alpha, beta). x = [[a, b], [b, c]], a = |d1| + u, c = |d2| + v.
template <class T>
class Eta2Normalized {
 public:
  Eta2Normalized(double d1, double d2, T alpha, T beta)
      : d1_(d1), d2_(d2), ea_(alpha - 1.5), eb_(beta - 1.5), ab_(alpha + beta - 3.0) {}

  T at_level(int level) const {
    const auto& outer = quad::exp_sinh_half(level);
    const auto& unit = quad::tanh_sinh_unit(level);
    const bool kink = (d1_ > 0 && d2_ < 0) || (d1_ < 0 && d2_ > 0);
    T total{};
    if (!kink) {
      total = half_line_cut<T>(outer, [&](double u) {
        return half_line_cut<T>(outer, [&](double v) {
          const double qmp = -2.0 * (std::abs(d1_) * d2_ + std::abs(d2_) * d1_) - 2.0 * (u * d2_ + v * d1_);
          return std::exp(-u - v) * inner(u, v, qmp, unit);
        });
      });
    } else {
      // P = Q along v = k u; integrate the two wedges separately
      const double k = std::abs(d2_) / std::abs(d1_);
      const T w1 = half_line_cut<T>(outer, [&](double u) {
        return quad::unit_sum(unit, [&](double tau, double ctau) {
          const double v = k * u * tau;
          return k * u * std::exp(-u - v) * inner(u, v, -2.0 * u * d2_ * ctau, unit);
        });
      });
      const T w2 = half_line_cut<T>(outer, [&](double v) {
        return quad::unit_sum(unit, [&](double tau, double ctau) {
          const double u = v * tau / k;
          return v / k * std::exp(-u - v) * inner(u, v, -2.0 * v * d1_ * ctau, unit);
        });
      });
      total = w1 + w2;
    }
    return std::exp(-std::abs(d1_) - std::abs(d2_)) * total;
  }

 private:
  // 2 sqrt(M) int_0^1 (P - M t^2)^{alpha-3/2} (Q - M t^2)^{beta-3/2} dt, M = min(P, Q).
  // With e = 1 - t^2 this is sqrt(M) M^{g1} int_0^1 e^{g1} (D + M e)^{g2} (1 - e)^{-1/2} de,
  // D = |Q - P|; then e = z^{1/c}, c = Re g1 + 1, absorbs the e^{g1} endpoint singularity.
  // qmp = Q - P is passed in, computed without cancellation by the caller.
  T inner(double u, double v, double qmp, const quad::DeRule& unit) const {
    const double ap = d1_ >= 0 ? 2.0 * d1_ + u : u;  // a + d1
    const double am = d1_ >= 0 ? u : 2.0 * std::abs(d1_) + u;
    const double cp = d2_ >= 0 ? 2.0 * d2_ + v : v;
    const double cm = d2_ >= 0 ? v : 2.0 * std::abs(d2_) + v;
    const double P = ap * cp;
    const double Q = am * cm;
    const bool flat = d1_ == 0.0 && d2_ == 0.0;
    const double M = qmp >= 0.0 ? P : Q;
    const double D = flat ? 0.0 : std::abs(qmp);
    const T g1 = flat ? ab_ : (qmp >= 0.0 ? ea_ : eb_);
    const T g2 = flat ? T{} : (qmp >= 0.0 ? eb_ : ea_);
    const double cexp = std::real(g1) + 1.0;
    const T phase = (g1 - cexp + 1.0) / cexp;  // purely imaginary
    const T body = quad::unit_sum(unit, [&](double z, double cz) {
      const double logz = z < 0.5 ? std::log(z) : std::log1p(-cz);
      const double e = std::exp(logz / cexp);
      const double one_minus_e = -std::expm1(logz / cexp);
      T val = flat ? T(1.0) : cpow(D + M * e, g2);
      if constexpr (!std::is_same_v<T, double>) val *= std::exp(phase * logz);
      return val / std::sqrt(one_minus_e);
    });
    return std::sqrt(M) * cpow(M, g1) / cexp * body;
  }

  double d1_, d2_;
  T ea_, eb_, ab_;
};

void check_convergence(int m, const Eigen::VectorXd& eig, Complex alpha, Complex beta) {
  const double kap = kappa(m);
  const double scale = std::max(1.0, eig.cwiseAbs().maxCoeff());
  int zeros = 0;
  for (int i = 0; i < eig.size(); ++i)
    if (std::abs(eig(i)) <= 1e-14 * scale) ++zeros;
  if (!(alpha.real() > kap - 1.0) || !(beta.real() > kap - 1.0)) {
    throw DomainError("eta_quadrature: divergent parameters (need Re alpha, Re beta > kappa(m) - 1)");
  }
  // degenerate h: integrability at the cone boundary needs Re(alpha + beta) above
  // 1 (m = 1), 3/2 (m = 2, rank 1), 2 (m = 2, h = 0)
  if (zeros > 0) {
    const double need = m == 1 ? 1.0 : (zeros == 1 ? 1.5 : 2.0);
    if (!((alpha + beta).real() > need)) throw DomainError("eta_quadrature: divergent parameters for degenerate h");
  }
}

template <class T>
quad::Result<T> eta_normalized(int m, const Eigen::VectorXd& d, T alpha, T beta, const PrecisionConfig& prec) {
  const int min_level = 3;
  const int max_level = m == 1 ? quad::kMaxLevel : 6;
  if (m == 1) {
    return quad::refine([&](int level) { return eta1_normalized<T>(d(0), alpha, beta, level); }, prec.abs_tol,
                        prec.rel_tol, min_level, max_level);
  }
  const double rel = std::max(prec.rel_tol, 1e-9);
  Eta2Normalized<T> f(d(0), d(1), alpha, beta);
  return quad::refine([&](int level) { return f.at_level(level); }, prec.abs_tol, rel, min_level, max_level);
}

}  // namespace

SignatureData signature(const PosDefMatrix& g, const SymMatrix& h) {
  if (h.rows() != g.size()) throw DomainError("signature: size mismatch");
  Eigen::SelfAdjointEigenSolver<SymMatrix> es(g.matrix());
  const SymMatrix root = es.operatorSqrt();
  Eigen::SelfAdjointEigenSolver<SymMatrix> hs(root * h * root);
  const Eigen::VectorXd eig = hs.eigenvalues();
  const double tol = 1e-9 * std::max(eig.cwiseAbs().maxCoeff(), 1e-300);
  SignatureData out;
  for (int i = 0; i < eig.size(); ++i) {
    const double e = eig(i);
    if (std::abs(e) < tol) {
      ++out.r;
    } else if (std::abs(e) < 10.0 * tol) {
      throw DomainError("signature: eigenvalue within tolerance band of zero");
    } else if (e > 0) {
      ++out.p;
      out.delta_plus *= e;
    } else {
      ++out.q;
      out.delta_minus *= -e;
    }
  }
  if (eig.cwiseAbs().maxCoeff() == 0.0) out = SignatureData{0, 0, static_cast<int>(eig.size()), 1.0, 1.0};
  return out;
}

EtaValue eta_quadrature(const PosDefMatrix& g, const SymMatrix& h, Complex alpha, Complex beta,
                        const PrecisionConfig& prec) {
  const int m = g.size();
  if (m < 1 || m > 2) throw DomainError("eta_quadrature: only m in {1, 2}");
  if (h.rows() != m || h.cols() != m) throw DomainError("eta_quadrature: size mismatch");
  // reduce to g = 1, h diagonal: eta(g, h) = det(g)^{kappa - alpha - beta} eta(1, g^{1/2} h g^{1/2})
  Eigen::SelfAdjointEigenSolver<SymMatrix> es(g.matrix());
  const SymMatrix root = es.operatorSqrt();
  Eigen::SelfAdjointEigenSolver<SymMatrix> hs(root * h * root);
  Eigen::VectorXd d = hs.eigenvalues();
  const double scale = std::max(d.cwiseAbs().maxCoeff(), 1e-300);
  for (int i = 0; i < m; ++i)
    if (std::abs(d(i)) <= 1e-14 * scale) d(i) = 0.0;
  check_convergence(m, d, alpha, beta);
  const Complex factor = std::pow(Complex(g.det()), kappa(m) - alpha - beta);
  if (alpha.imag() == 0.0 && beta.imag() == 0.0) {
    const auto r = eta_normalized<double>(m, d, alpha.real(), beta.real(), prec);
    return {factor * r.value, std::abs(factor) * r.error};
  }
  const auto r = eta_normalized<Complex>(m, d, alpha, beta, prec);
  return {factor * r.value, std::abs(factor) * r.error};
}

EtaValue eta_star(const PosDefMatrix& g, const SymMatrix& h, Complex alpha, Complex beta,
                  const PrecisionConfig& prec) {
  const EtaValue e = eta_quadrature(g, h, alpha, beta, prec);
  const Complex f = std::pow(Complex(g.det()), alpha + beta - kappa(g.size()));
  return {f * e.value, std::abs(f) * e.error};
}

namespace {

Complex i_power(Complex z) { return std::exp(Complex(0.0, 0.5 * kPi) * z); }

// 1/Gamma_m(s), zero at poles
Complex rgamma_m(int m, Complex s) {
  try {
    return 1.0 / gamma_m(m, s);
  } catch (const PoleError&) {
    return 0.0;
  }
}

}  // namespace

EtaValue xi_from_eta(const PosDefMatrix& g, const SymMatrix& h, Complex alpha, Complex beta,
                     const PrecisionConfig& prec) {
  const int m = g.size();
  const EtaValue e = eta_quadrature(PosDefMatrix(2.0 * g.matrix()), kPi * h, alpha, beta, prec);
  const Complex f = i_power(double(m) * (beta - alpha)) * std::pow(2.0, m) * std::pow(kPi, m * kappa(m)) *
                    rgamma_m(m, alpha) * rgamma_m(m, beta);
  return {f * e.value, std::abs(f) * e.error};
}

Complex xi_zero_closed(int m, const PosDefMatrix& g, Complex alpha, Complex beta) {
  if (g.size() != m) throw DomainError("xi_zero_closed: size mismatch");
  const double kap = kappa(m);
  if (!((alpha + beta).real() > 2.0 * kap - 1.0)) throw DomainError("xi_zero_closed: Re(alpha+beta) too small");
  const double det2g = std::pow(2.0, m) * g.det();
  return i_power(double(m) * (beta - alpha)) * std::pow(2.0, m * (1.0 - kap)) * std::pow(2.0 * kPi, m * kap) *
         rgamma_m(m, alpha) * rgamma_m(m, beta) * gamma_m(m, alpha + beta - kap) * std::pow(Complex(det2g), kap - alpha - beta);
}

Complex eta1_equal_params(double g, double H, Complex a) {
  if (!(g > 0.0)) throw DomainError("eta1_equal_params: g must be positive");
  if (H == 0.0) {
    if (!(a.real() > 0.5)) throw DomainError("eta1_equal_params: divergent at H = 0");
    return gamma(2.0 * a - 1.0) * std::pow(Complex(g), 1.0 - 2.0 * a);
  }
  const double aH = std::abs(H);
  return gamma(a) / std::sqrt(kPi) * std::pow(Complex(2.0 * aH / g), a - 0.5) * bessel_k(a - 0.5, g * aH);
}

EtaValue omega(const PosDefMatrix& g, const SymMatrix& h, Complex alpha, Complex beta, const PrecisionConfig& prec) {
  const int m = g.size();
  const double kap = kappa(m);
  const SignatureData sd = signature(g, h);
  const EtaValue es = eta_star(g, h, alpha, beta, prec);
  const Complex f = std::pow(2.0, -double(sd.p) * alpha - double(sd.q) * beta) *
                    rgamma_m(sd.p, beta - 0.5 * (m - sd.p)) * rgamma_m(sd.q, alpha - 0.5 * (m - sd.q)) *
                    rgamma_m(sd.r, alpha + beta - kap) *
                    std::pow(Complex(sd.delta_plus), kap - alpha - 0.25 * sd.q) *
                    std::pow(Complex(sd.delta_minus), kap - beta - 0.25 * sd.p);
  return {f * es.value, std::abs(f) * es.error};
}

double eta_rank1_residue_point(const PosDefMatrix& y, const Rank1Form& h1) {
  const int m = y.size();
  if (h1.w.size() != m || h1.t == 0) throw DomainError("eta_rank1_residue_point: bad rank-1 form");
  const Eigen::VectorXd w = h1.w.cast<double>();
  const double yw = w.dot(y.matrix() * w);
  const double det2y = std::pow(2.0, m) * y.det();
  const double lead = std::pow(kPi, 0.5 * (m - 1)) * gamma_m(m - 1, 0.5 * (m - 1)).real() *
                      std::pow(det2y, -0.5 * (m - 1));
  return lead * bessel_k(0.0, 2.0 * kPi * yw * std::abs(static_cast<double>(h1.t)));
}

}  // namespace siegel
