// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "siegel/fourier.hpp"
#include "siegel/hypergeom.hpp"
#include "siegel/oracle.hpp"
#include "siegel/residue.hpp"
#include "siegel/siegelseries.hpp"
#include "siegel/verify.hpp"
#include "siegel/zetalattice.hpp"

using siegel::Complex;
using siegel::PosDefMatrix;
using siegel::SymMatrix;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kGamma = 0.57721566490153286061;

struct Outcome {
  bool passed;
  std::string detail;
};

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

std::string fmt(const char* f, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

// eta(tau) = q^{1/24} prod (1 - q^n), q = e^{2 pi i tau}
Complex eta_product(Complex tau) {
  const Complex q = std::exp(Complex(0.0, 2.0 * kPi) * tau);
  Complex p = std::exp(Complex(0.0, 2.0 * kPi / 24.0) * tau);
  Complex qn = q;
  for (int n = 1; n < 400 && std::abs(qn) > 1e-18; ++n, qn *= q) p *= 1.0 - qn;
  return p;
}

Outcome c1() {
  const double a = siegel::residue_at_next_point(2), b = siegel::residue_at_next_point_rescaled(2);
  const double e = std::max(std::abs(a - 45.0 / (kPi * kPi)), std::abs(b - 90.0 / (kPi * kPi)));
  return {e < 1e-12, fmt("45/pi^2 and 90/pi^2, max error %.2g (tol %.0e)", e, 1e-12)};
}

Outcome c2() {
  double cancel = 0.0, paths = 0.0;
  for (int m = 2; m <= 5; ++m)
    for (unsigned k = 0; k < 10; ++k) {
      const PosDefMatrix y = siegel::random_spd(m, 9000 + 100 * m + k);
      const double a = siegel::laurent_A(y, m).c_minus2->real();
      const double b = siegel::laurent_B(y, m).c_minus2->real();
      cancel = std::max(cancel, std::abs(a + b) / std::abs(a));
      paths = std::max({paths, std::abs(a - siegel::explicit_A_minus2(y, m)) / std::abs(a),
                        std::abs(b - siegel::explicit_B_minus2(y, m)) / std::abs(b)});
    }
  return {cancel < 1e-10 && paths < 1e-10, fmt("|A+B|/|A| %.2g, path agreement %.2g (tol 1e-10)", cancel, paths)};
}

Outcome c3() {
  double closed = 0.0, laurent = 0.0;
  for (unsigned k = 0; k < 5; ++k) {
    const PosDefMatrix y = siegel::random_spd(2, 300 + k);
    const double a = y(0, 0), b = y(0, 1), d = y.det();
    const Complex w(b / a, std::sqrt(d) / a);
    const double expected = 18.0 * std::sqrt(d) / (kPi * kPi) *
                            (0.5 * kGamma + 0.5 * std::log(a / (4.0 * kPi)) - 2.0 * std::log(std::abs(eta_product(w))));
    const double got = siegel::residue_A_constant(y, 2);
    closed = std::max(closed, std::abs(got - expected) / std::abs(expected));
    // constant term of xi_1^(2)(2y, s) at s = 1 by symmetric extrapolation instead of the Kronecker formula
    const auto window = siegel::km_xi_laurent_numeric(y, 1e-3);
    const double via_limit = siegel::residue_A_constant(y, 2, window.c_0->real());
    laurent = std::max(laurent, std::abs(via_limit - got) / std::abs(got));
  }
  return {closed < 1e-9 && laurent < 1e-5,
          fmt("closed form %.2g (tol 1e-9), Laurent-limit oracle %.2g (tol 1e-5)", closed, laurent)};
}

Outcome c4() {
  SymMatrix x0(2, 2);
  x0 << 0.25, 0.1, 0.1, -0.15;
  SymMatrix d12(2, 2);
  d12 << 1, 0, 0, 2;
  const std::vector<siegel::UpperHalfPoint> points = {
      {SymMatrix::Zero(2, 2), PosDefMatrix(SymMatrix::Identity(2, 2))},
      {x0, PosDefMatrix(SymMatrix::Identity(2, 2))},
      {SymMatrix::Zero(2, 2), PosDefMatrix(d12)}};
  double worst = 0.0;
  for (double s : {2.5, 3.0})
    for (const auto& z : points) {
      const Complex f = siegel::eisenstein_via_fourier(z, s, 8.0);
      const Complex d = siegel::eisenstein_direct(z, s).value;
      const double e = rel(d, f);
      std::printf("     s = %.1f: fourier %.12f direct %.12f rel %.2g\n", s, f.real(), d.real(), e);
      worst = std::max(worst, e);
    }
  return {worst < 1e-5, fmt("6 points, worst relative difference %.2g (tol %.0e)", worst, 1e-5)};
}

Outcome c5() {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> par(1.6, 3.0);
  double xi = 0.0;
  for (int k = 0; k < 20; ++k) {
    const int m = 1 + k % 2;
    const PosDefMatrix g = siegel::random_spd(m, 500 + k);
    const double a = par(rng), b = par(rng);
    xi = std::max(xi, rel(siegel::xi_from_eta(g, SymMatrix::Zero(m, m), a, b).value, siegel::xi_zero_closed(m, g, a, b)));
  }
  // omega(alpha, beta) = omega(kappa - beta, kappa - alpha), kappa = (m + 1) / 2
  double om = 0.0;
  {
    const PosDefMatrix g2(siegel::parse_matrix("1.3,0.4;0.4,0.8"));
    const SymMatrix h2 = siegel::parse_matrix("0.6,0.1;0.1,0.4");
    om = std::max(om, rel(siegel::omega(g2, h2, 0.9, 0.7).value, siegel::omega(g2, h2, 0.8, 0.6).value));
    const PosDefMatrix g1(SymMatrix::Identity(1, 1));
    SymMatrix h1(1, 1);
    for (double t : {1.0, -0.7}) {
      h1 << t;
      om = std::max(om, rel(siegel::omega(g1, h1, 0.7, 0.4).value, siegel::omega(g1, h1, 0.6, 0.3).value));
    }
  }
  double eta = 0.0;
  for (unsigned k = 0; k < 10; ++k) {
    const PosDefMatrix y = siegel::random_spd(2, 700 + k);
    siegel::IntVector w(2);
    w << 1 + static_cast<std::int64_t>(k % 2), static_cast<std::int64_t>(k % 3) - 1;
    if (std::gcd(w(0), w(1)) != 1) w << 1, 1;
    const std::int64_t t = 1 + static_cast<std::int64_t>(k % 3);
    // h = t w w^T, eta_2(2y, pi h; 1, 1) by cubature
    SymMatrix h(2, 2);
    h << double(w(0) * w(0)), double(w(0) * w(1)), double(w(0) * w(1)), double(w(1) * w(1));
    h *= kPi * static_cast<double>(t);
    const auto q = siegel::eta_quadrature(PosDefMatrix(SymMatrix(2.0 * y.matrix())), h, 1.0, 1.0);
    eta = std::max(eta, rel(siegel::eta_rank1_residue_point(y, siegel::Rank1Form{t, w}), q.value));
  }
  return {xi < 1e-6 && om < 1e-5 && eta < 1e-5,
          fmt("xi %.2g (tol 1e-6), omega symmetry %.2g (tol 1e-5), ", xi, om) + fmt("eta rank-1 %.2g (tol %.0e)", eta, 1e-5)};
}

Outcome c6() {
  siegel::IntVector w(2);
  w << 1, 1;
  const siegel::UpperHalfPoint z(SymMatrix::Zero(2, 2), PosDefMatrix(SymMatrix::Identity(2, 2)));
  const auto r = siegel::residue_limit_check(z, {0.04, 0.02, 0.01, 0.005}, siegel::Rank1Form{1, w});
  const double ec = std::abs(r.constant_est - r.constant_expected) / std::abs(r.constant_expected);
  const double eh = std::abs(r.coeff_est - r.coeff_expected) / std::abs(r.coeff_expected);
  return {ec < 1e-4 && eh < 1e-4, fmt("constant %.2g, rank-1 coefficient %.2g (tol 1e-4)", ec, eh)};
}

Outcome c7() {
  const auto d = siegel::degree1_residue_check();
  const double spread = std::abs(d.at_i - d.at_other), e = std::abs(d.at_i - 3.0 / kPi);
  return {spread < 1e-6 && e < 1e-6, fmt("z-spread %.2g, |value - 3/pi| %.2g (tol 1e-6)", spread, e)};
}

Outcome c8() {
  std::set<siegel::HalfIntegralForm> enumerated;
  for (const auto& h : siegel::rank1_enumerate(2, 6.0)) {
    const auto f = h.reconstruct();
    if (f.to_real().cwiseAbs().maxCoeff() <= 3.0) enumerated.insert(f);
  }
  const bool same = enumerated == siegel::brute_rank1_set(2, 3);
  // zeta(3)^{-1} sigma_{-2}(h)
  const double zeta3 = 1.2020569031595942854;
  double worst = 0.0;
  for (std::int64_t h : {1, 2, 4, 6}) {
    double sigma = 0.0;
    for (std::int64_t d = 1; d <= h; ++d)
      if (h % d == 0) sigma += 1.0 / double(d * d);
    worst = std::max(worst, rel(siegel::brute_siegel1(h, 3.0, 200), sigma / zeta3));
  }
  return {same && worst < 1e-4,
          std::string("rank-1 set ") + (same ? "equal" : "DIFFERS") + fmt(", Ramanujan sums %.2g (tol %.0e)", worst, 1e-4)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"residue at (m+1)/2", c1},        {"Laurent cancellation", c2}, {"degree-2 residue constant", c3},
      {"Fourier vs direct sum", c4},     {"hypergeometric identities", c5},
      {"residue limit", c6},             {"degree-1 residue", c7},     {"combinatorial oracles", c8}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %zu (%s): %s [%.1f s]\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), sec);
    std::fflush(stdout);
    failed += !o.passed;
  }
  return failed == 0 ? 0 : 1;
}
