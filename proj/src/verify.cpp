#include "siegel/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "siegel/errors.hpp"
#include "siegel/fourier.hpp"
#include "siegel/hypergeom.hpp"
#include "siegel/oracle.hpp"
#include "siegel/residue.hpp"
#include "siegel/siegelseries.hpp"
#include "siegel/zetalattice.hpp"

namespace siegel {

namespace {

CheckResult check(std::string name, double measured, double tol) {
  return {std::move(name), tol, measured, measured <= tol};
}

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

std::vector<CheckResult> residue_suite() {
  std::vector<CheckResult> out;
  out.push_back(check("residue_next_point_45_over_pi2", std::abs(residue_at_next_point(2) - 45.0 / (kPi * kPi)), 1e-12));
  out.push_back(check("residue_next_point_rescaled_90_over_pi2",
                      std::abs(residue_at_next_point_rescaled(2) - 90.0 / (kPi * kPi)), 1e-12));
  double cancel = 0.0, paths = 0.0;
  for (int m = 2; m <= 5; ++m)
    for (unsigned seed = 1; seed <= 3; ++seed) {
      const PosDefMatrix y = random_spd(m, 100 * m + seed);
      const Complex a = *laurent_A(y, m).c_minus2;
      const Complex b = *laurent_B(y, m).c_minus2;
      cancel = std::max(cancel, std::abs(a + b) / std::abs(a));
      paths = std::max(paths, std::max(rel(a, explicit_A_minus2(y, m)), rel(b, explicit_B_minus2(y, m))));
    }
  out.push_back(check("laurent_double_pole_cancellation", cancel, 1e-10));
  out.push_back(check("laurent_explicit_path_agreement", paths, 1e-10));
  double closed = 0.0;
  for (unsigned seed = 1; seed <= 3; ++seed) {
    const PosDefMatrix y = random_spd(2, seed);
    const KroneckerData k = KroneckerData::from(y);
    const double eta = std::abs(dedekind_eta(k.W));
    const double expected = 18.0 * std::sqrt(y.det()) / (kPi * kPi) *
                            (0.5 * kEulerGamma + 0.5 * std::log(k.v_prime / (4.0 * kPi)) - 2.0 * std::log(eta));
    closed = std::max(closed, std::abs(residue_A_constant(y, 2) - expected) / std::abs(expected));
  }
  out.push_back(check("residue_constant_degree2_closed_form", closed, 1e-9));
  SymMatrix x = SymMatrix::Zero(2, 2);
  IntVector w(2);
  w << 1, 1;
  const auto lim = residue_limit_check(UpperHalfPoint(x, PosDefMatrix(SymMatrix::Identity(2, 2))),
                                       {0.04, 0.02, 0.01, 0.005}, Rank1Form{1, w});
  out.push_back(check("residue_limit_constant", rel(lim.constant_est, lim.constant_expected), 1e-4));
  out.push_back(check("residue_limit_rank1_coefficient", rel(lim.coeff_est, lim.coeff_expected), 1e-4));
  return out;
}

std::vector<CheckResult> zeta_suite() {
  std::vector<CheckResult> out;
  double kron = 0.0, theta = 0.0, prim = 0.0;
  for (unsigned seed = 1; seed <= 2; ++seed) {
    const PosDefMatrix g = random_spd(2, 10 + seed);
    const KroneckerCheck k = kronecker_limit_check(g, 1e-3);
    kron = std::max({kron, rel(k.const_est, k.const_expected), rel(k.residue_est, k.residue_expected)});
    theta = std::max(theta, rel(epstein_zeta(g, 2.0), epstein_zeta_direct(g, 2.0, 2e5).value));
    prim = std::max(prim, rel(km_zeta(1, 2, g, 2.0), km_zeta_primitive_direct(g, 2.0, 2e5).value));
  }
  out.push_back(check("kronecker_limit_constant", kron, 1e-6));
  out.push_back(check("epstein_theta_vs_direct", theta, 1e-8));
  out.push_back(check("km_zeta_theta_vs_primitive_sum", prim, 1e-8));
  return out;
}

std::vector<CheckResult> hypergeom_suite() {
  std::vector<CheckResult> out;
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> par(1.6, 3.0);
  double xi = 0.0;
  for (int m = 1; m <= 2; ++m)
    for (unsigned seed = 1; seed <= 3; ++seed) {
      const PosDefMatrix g = random_spd(m, 30 + seed);
      const double a = par(rng), b = par(rng);
      xi = std::max(xi, rel(xi_from_eta(g, SymMatrix::Zero(m, m), a, b).value, xi_zero_closed(m, g, a, b)));
    }
  out.push_back(check("xi_from_eta_vs_closed_form", xi, 1e-6));
  double eta = 0.0;
  for (unsigned seed = 1; seed <= 3; ++seed) {
    const PosDefMatrix y = random_spd(2, 50 + seed);
    IntVector w(2);
    w << 1, static_cast<std::int64_t>(seed) - 2;
    const Rank1Form h{static_cast<std::int64_t>(seed), w};
    const EtaValue q =
        eta_quadrature(PosDefMatrix(SymMatrix(2.0 * y.matrix())), kPi * h.reconstruct().to_real(), 1.0, 1.0);
    eta = std::max(eta, rel(eta_rank1_residue_point(y, h), q.value));
  }
  out.push_back(check("eta_rank1_residue_point_vs_cubature", eta, 1e-5));
  return out;
}

std::vector<CheckResult> specfun_suite() {
  std::vector<CheckResult> out;
  out.push_back(check("zeta_2", std::abs(riemann_zeta(2.0) - kPi * kPi / 6.0), 1e-14));
  out.push_back(check("zeta_minus_1", std::abs(riemann_zeta(-1.0) + 1.0 / 12.0), 1e-14));
  // eta(i) = Gamma(1/4) / (2 pi^{3/4})
  out.push_back(check("dedekind_eta_at_i",
                      rel(dedekind_eta(Complex(0.0, 1.0)), gamma(0.25) / (2.0 * std::pow(kPi, 0.75))), 1e-13));
  double bk = 0.0;
  for (double x : {0.1, 1.0, 7.5}) bk = std::max(bk, rel(bessel_k(0.5, x), std::sqrt(kPi / (2.0 * x)) * std::exp(-x)));
  out.push_back(check("bessel_k_half_order", bk, 1e-12));
  double gm = 0.0;
  for (double s : {1.3, 2.0, 3.7})
    gm = std::max(gm, rel(gamma_m(2, s), std::sqrt(kPi) * gamma(s) * gamma(s - 0.5)));
  out.push_back(check("gamma_2_product", gm, 1e-13));
  return out;
}

std::vector<CheckResult> siegel_suite() {
  std::vector<CheckResult> out;
  std::set<HalfIntegralForm> enumerated;
  for (const auto& h : rank1_enumerate(2, 6.0)) {
    const HalfIntegralForm f = h.reconstruct();
    if (f.to_real().cwiseAbs().maxCoeff() <= 3.0) enumerated.insert(f);
  }
  const auto brute = brute_rank1_set(2, 3);
  out.push_back(check("rank1_enumerate_vs_brute_force", enumerated == brute ? 0.0 : 1.0, 0.0));
  double ram = 0.0;
  for (std::int64_t h : {1, 2, 4, 6}) {
    const Complex expected = sigma_power(h, Complex(-2.0)) / riemann_zeta(Complex(3.0));
    ram = std::max(ram, rel(brute_siegel1(h, 3.0, 200), expected));
  }
  out.push_back(check("ramanujan_sum_vs_divisor_formula", ram, 1e-4));
  double r1 = 0.0;
  for (std::int64_t h : {1, 3, 12}) r1 = std::max(r1, rel(siegel_rank1(h, 4.0), brute_siegel1(h, 4.0, 200)));
  out.push_back(check("siegel_rank1_vs_ramanujan_sum", r1, 1e-5));
  return out;
}

std::vector<CheckResult> fourier_suite() {
  std::vector<CheckResult> out;
  const Degree1Residue d = degree1_residue_check();
  out.push_back(check("degree1_residue_z_independence", std::abs(d.at_i - d.at_other), 1e-6));
  out.push_back(check("degree1_residue_3_over_pi", std::abs(d.at_i - 3.0 / kPi), 1e-6));
  const UpperHalfPoint z(SymMatrix::Zero(2, 2), PosDefMatrix(SymMatrix::Identity(2, 2)));
  out.push_back(check("fourier_vs_direct_degree2",
                      rel(eisenstein_via_fourier(z, 3.0, 8.0), eisenstein_direct(z, 3.0).value), 1e-5));
  return out;
}

}  // namespace

PosDefMatrix random_spd(int m, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> eig(0.5, 2.0);
  Eigen::MatrixXd a(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) a(i, j) = gauss(rng);
  const Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(a).householderQ();
  Eigen::VectorXd d(m);
  for (int i = 0; i < m; ++i) d(i) = eig(rng);
  const SymMatrix y = q * d.asDiagonal() * q.transpose();
  return PosDefMatrix(SymMatrix(0.5 * (y + y.transpose())));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"specfun", "hypergeom", "siegel", "zeta", "residue", "fourier", "all"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& name) {
  if (name == "residue") return residue_suite();
  if (name == "zeta") return zeta_suite();
  if (name == "hypergeom") return hypergeom_suite();
  if (name == "specfun") return specfun_suite();
  if (name == "siegel") return siegel_suite();
  if (name == "fourier") return fourier_suite();
  if (name == "all") {
    std::vector<CheckResult> out;
    for (const auto& n : suite_names()) {
      if (n == "all") continue;
      auto part = run_suite(n);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw DomainError("unknown suite '" + name + "'");
}

Json suite_report(const std::string& name, const std::vector<CheckResult>& checks) {
  Json arr = Json::array();
  bool ok = true;
  for (const auto& c : checks) {
    arr.push_back(to_json(c));
    ok = ok && c.passed;
  }
  return {{"suite", name}, {"passed", ok}, {"checks", arr}};
}

}  // namespace siegel
