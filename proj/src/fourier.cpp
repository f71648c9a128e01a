#include "siegel/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <thread>

#include "siegel/errors.hpp"
#include "siegel/hypergeom.hpp"
#include "siegel/siegelseries.hpp"
#include "siegel/zetalattice.hpp"

namespace siegel {

namespace {

Complex cpow(double x, Complex e) { return std::exp(e * std::log(x)); }

Complex inv_gamma_sq(int nu, Complex s) {
  const Complex g = gamma_m(nu, s);
  return 1.0 / (g * g);
}

// lambda = 0: 2^nu pi^{nu kappa} Gamma_nu(2s - kappa) Gamma_nu(s)^{-2} S_nu(0, 2s) det(y)^s zeta_nu^(m)(2y, 2s - kappa)
Complex constant_family(const PosDefMatrix& y, int nu, Complex s) {
  const int m = y.size();
  if (nu == 0) return cpow(y.det(), s);
  const double k = kappa(nu);
  const PosDefMatrix g2(SymMatrix(2.0 * y.matrix()));
  return std::pow(2.0, nu) * std::pow(kPi, nu * k) * gamma_m(nu, 2.0 * s - k) * inv_gamma_sq(nu, s) *
         siegel_rank0(nu, 2.0 * s) * cpow(y.det(), s) * km_zeta(nu, m, g2, 2.0 * s - k);
}

// lambda = 1: coefficient of e(sigma(t w tw x)) in F_{0,nu,1}^(m)
Complex rank1_coefficient(const PosDefMatrix& y, int nu, std::int64_t t, const IntVector& w, Complex s) {
  const int m = y.size();
  const double k = kappa(nu);
  const Eigen::VectorXd wd = w.cast<double>();
  const double g = 2.0 * wd.dot(y.matrix() * wd);
  const Complex a = s + 0.5 * (1 - nu);
  IntMatrix h1(1, 1);
  h1(0, 0) = 2 * t;
  const Complex siegel = siegel_reduce(HalfIntegralForm(h1), nu, 2.0 * s);
  // eta*_1(g, H; a, a) = g^{2a - 1} eta_1
  const Complex eta_star = cpow(g, 2.0 * a - 1.0) * eta1_equal_params(g, kPi * static_cast<double>(t), a);
  Complex zeta_rest = 1.0;
  if (nu >= 2) {
    IntMatrix r(m, 1);
    for (int i = 0; i < m; ++i) r(i, 0) = w(i);
    const SymMatrix comp = 2.0 * jacobi_complement(y, complete_to_unimodular(r));
    zeta_rest = km_zeta(nu - 1, m - 1, PosDefMatrix(comp), 2.0 * s - k);
  }
  return std::pow(2.0, nu) * std::pow(kPi, nu * k + 0.5 * (nu - 1)) * gamma_m(nu - 1, 2.0 * s - k) *
         inv_gamma_sq(nu, s) * siegel * cpow(y.det(), s) * cpow(g, k - 2.0 * s) * eta_star * zeta_rest;
}

// lambda = nu = m = 2: 4 pi^3 Gamma_2(s)^{-2} S_2(h, 2s) det(y)^s eta_2(2y, pi h; s, s)
Complex rank2_coefficient(const PosDefMatrix& y, const HalfIntegralForm& h, Complex s, const PrecisionConfig& prec) {
  const PosDefMatrix g2(SymMatrix(2.0 * y.matrix()));
  // double-exponential convergence: the last level difference overstates the error by far
  PrecisionConfig local = prec;
  local.rel_tol = std::max(prec.rel_tol, 1e-6);
  const EtaValue eta = eta_quadrature(g2, kPi * h.to_real(), s, s, local);
  return 4.0 * std::pow(kPi, 3) * inv_gamma_sq(2, s) * siegel_rank2(h, 2.0 * s) * cpow(y.det(), s) * eta.value;
}

// sum of |eigenvalues| of y h
double abs_trace(const PosDefMatrix& y, const SymMatrix& h) {
  const Eigen::MatrixXd yh = y.matrix() * h;
  if (h.rows() == 1) return std::abs(yh(0, 0));
  const double tr = yh.trace();
  const double det = yh.determinant();
  if (det >= 0) return std::abs(tr);
  return std::sqrt(tr * tr - 4.0 * det);
}

// unimodular u with entries in {-1, 0, 1} and y[u] = y
std::vector<IntMatrix> automorphisms(const PosDefMatrix& y) {
  std::vector<IntMatrix> out;
  const SymMatrix& a = y.matrix();
  for (int code = 0; code < 81; ++code) {
    IntMatrix u(2, 2);
    int c = code;
    for (int i = 0; i < 4; ++i) {
      u(i / 2, i % 2) = c % 3 - 1;
      c /= 3;
    }
    const std::int64_t det = int_determinant(u);
    if (det != 1 && det != -1) continue;
    const SymMatrix t = quadratic_transform(a, u);
    if ((t - a).cwiseAbs().maxCoeff() <= 1e-13 * a.cwiseAbs().maxCoeff()) out.push_back(u);
  }
  return out;
}

// h -> h[t u^{-1}] for u in Aut(y), plus h -> -h, leave the coefficient unchanged
HalfIntegralForm canonical(const HalfIntegralForm& h, const std::vector<IntMatrix>& auts) {
  HalfIntegralForm best = h;
  for (const auto& u : auts) {
    IntMatrix inv(2, 2);
    const std::int64_t det = int_determinant(u);
    inv << u(1, 1) * det, -u(0, 1) * det, -u(1, 0) * det, u(0, 0) * det;
    const HalfIntegralForm t = h.transform(IntMatrix(inv.transpose()));
    for (const auto& c : {t, t.scaled(-1)}) {
      if (c < best) best = c;
    }
  }
  return best;
}

template <class F>
void parallel_for(std::size_t n, F&& body) {
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(worker_threads()), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (std::size_t wkr = 0; wkr < workers; ++wkr) {
    pool.emplace_back([&, wkr] {
      try {
        for (std::size_t i = wkr; i < n; i += workers) body(i);
      } catch (...) {
        errors[wkr] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

void check_region(int m, Complex s) {
  if (m != 1 && m != 2) throw DomainError("Fourier expansion: degree must be 1 or 2");
  if (s.real() <= m) throw DomainError("Fourier expansion: requires Re(s) > m");
}

double shell_weight(double tau, double T, Complex coeff) { return tau > T - 1.0 ? std::abs(coeff) : 0.0; }

}  // namespace

int worker_threads() {
  if (const char* env = std::getenv("RESIDUE_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

Complex FourierExpansion::value_at(const SymMatrix& x) const {
  Complex acc = 0.0;
  for (const auto& term : terms) {
    const double phase = 2.0 * kPi * term.h.trace_with(x);
    acc += term.coeff * Complex(std::cos(phase), std::sin(phase));
  }
  return acc;
}

FourierExpansion fourier_family(const PosDefMatrix& y, int nu, int lambda, Complex s, double T,
                                const PrecisionConfig& prec) {
  const int m = y.size();
  check_region(m, s);
  if (nu < 0 || nu > m || lambda < 0 || lambda > nu) throw DomainError("fourier_family: need 0 <= lambda <= nu <= m");
  FourierExpansion out;
  out.m = m;
  out.s = s;
  out.T = T;
  if (lambda == 0) {
    out.terms.push_back({HalfIntegralForm::zero(m), constant_family(y, nu, s)});
    return out;
  }
  if (lambda == 1) {
    for (const auto& w : primitive_vectors(y, T)) {
      const Eigen::VectorXd wd = w.cast<double>();
      const double yw = wd.dot(y.matrix() * wd);
      const auto tmax = static_cast<std::int64_t>(std::floor(T / yw));
      for (std::int64_t t = 1; t <= tmax; ++t) {
        // eta_1 with equal parameters is even in H and S depends on |t|
        const Complex c = rank1_coefficient(y, nu, t, w, s);
        const Rank1Form plus{t, w};
        const Rank1Form minus{-t, w};
        out.terms.push_back({plus.reconstruct(), c});
        out.terms.push_back({minus.reconstruct(), c});
        out.last_shell += 2.0 * shell_weight(t * yw, T, c);
      }
    }
    return out;
  }
  // lambda = nu = m = 2: all nondegenerate h with abs_trace <= T
  const double lmin = Eigen::SelfAdjointEigenSolver<SymMatrix>(y.matrix()).eigenvalues().minCoeff();
  const auto box = static_cast<std::int64_t>(std::floor(T / lmin));
  const auto auts = automorphisms(y);
  std::vector<HalfIntegralForm> forms;
  std::map<HalfIntegralForm, std::size_t> index;
  std::vector<HalfIntegralForm> reps;
  std::vector<double> taus;
  for (std::int64_t a = -box; a <= box; ++a)
    for (std::int64_t b = -2 * box; b <= 2 * box; ++b)
      for (std::int64_t c = -box; c <= box; ++c) {
        IntMatrix d(2, 2);
        d << 2 * a, b, b, 2 * c;
        const HalfIntegralForm h(d);
        if (h.det_doubled() == 0) continue;
        const double tau = abs_trace(y, h.to_real());
        if (tau > T) continue;
        forms.push_back(h);
        taus.push_back(tau);
        const HalfIntegralForm key = canonical(h, auts);
        if (index.emplace(key, reps.size()).second) reps.push_back(key);
      }
  std::vector<Complex> coeffs(reps.size());
  parallel_for(reps.size(), [&](std::size_t i) { coeffs[i] = rank2_coefficient(y, reps[i], s, prec); });
  for (std::size_t i = 0; i < forms.size(); ++i) {
    const Complex c = coeffs[index.at(canonical(forms[i], auts))];
    out.terms.push_back({forms[i], c});
    out.last_shell += shell_weight(taus[i], T, c);
  }
  return out;
}

Complex fourier_term_F(int nu, int lambda, const UpperHalfPoint& z, Complex s, double T, const PrecisionConfig& prec) {
  return fourier_family(z.y, nu, lambda, s, T, prec).value_at(z.x);
}

FourierExpansion fourier_expansion(const PosDefMatrix& y, Complex s, double T, const PrecisionConfig& prec) {
  const int m = y.size();
  check_region(m, s);
  FourierExpansion out;
  out.m = m;
  out.s = s;
  out.T = T;
  for (int nu = 0; nu <= m; ++nu)
    for (int lambda = 0; lambda <= nu; ++lambda) {
      FourierExpansion part = fourier_family(y, nu, lambda, s, T, prec);
      out.last_shell += part.last_shell;
      for (auto& term : part.terms) out.terms.push_back(std::move(term));
    }
  return out;
}

Complex eisenstein_via_fourier(const UpperHalfPoint& z, Complex s, double T, const PrecisionConfig& prec) {
  return fourier_expansion(z.y, s, T, prec).value_at(z.x);
}

namespace {

// Neville extrapolation to delta = 0 in the variable delta^2; error from the last two orders
std::pair<double, double> extrapolate(const std::vector<double>& deltas, const std::vector<double>& values) {
  const std::size_t n = deltas.size();
  std::vector<double> p(values);
  double prev = values.back();
  double best = values.back();
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = 0; i + k < n; ++i) {
      const double xi = deltas[i] * deltas[i];
      const double xk = deltas[i + k] * deltas[i + k];
      p[i] = (xk * p[i] - xi * p[i + 1]) / (xk - xi);
    }
    prev = best;
    best = p[0];
  }
  return {best, std::abs(best - prev)};
}

}  // namespace

ResidueLimitReport residue_limit_check(const UpperHalfPoint& z, const std::vector<double>& deltas, const Rank1Form& h) {
  if (z.size() != 2) throw DomainError("residue_limit_check: degree 2 only");
  if (deltas.size() < 2) throw DomainError("residue_limit_check: need at least two deltas");
  for (double d : deltas)
    if (!(d > 1e-4 && d < 1e-1)) throw DomainError("residue_limit_check: deltas must lie in (1e-4, 1e-1)");
  if (h.w.size() != 2 || h.t == 0) throw DomainError("residue_limit_check: bad rank-one form");
  const PosDefMatrix& y = z.y;
  auto constant = [&](double s) { return (constant_family(y, 1, s) + constant_family(y, 2, s)).real(); };
  auto coeff = [&](double s) { return rank1_coefficient(y, 2, h.t < 0 ? -h.t : h.t, h.w, s).real(); };
  std::vector<double> cvals, hvals;
  for (double d : deltas) {
    cvals.push_back(0.5 * d * (constant(1.0 + d) - constant(1.0 - d)));
    hvals.push_back(0.5 * d * (coeff(1.0 + d) - coeff(1.0 - d)));
  }
  ResidueLimitReport rep;
  std::tie(rep.constant_est, rep.constant_err) = extrapolate(deltas, cvals);
  std::tie(rep.coeff_est, rep.coeff_err) = extrapolate(deltas, hvals);
  rep.h = h;
  rep.constant_expected = residue_A_constant(y, 2);
  const double sigma0 = static_cast<double>(divisor_count(h.t < 0 ? -h.t : h.t));
  rep.coeff_expected = residue_B_coefficient(y, 2) * sigma0 * eta_rank1_residue_point(y, h);
  return rep;
}

}  // namespace siegel
