#include <doctest.h>

#include <cmath>

#include "siegel/errors.hpp"
#include "siegel/hypergeom.hpp"

using namespace siegel;

namespace {

// int_{x > |H|} e^{-g x} (x^2 - H^2)^{a-1} dx via the standard library Bessel K
double eta1_equal_oracle(double g, double H, double a) {
  const double nu = a - 0.5;
  return std::tgamma(a) / std::sqrt(kPi) * std::pow(2.0 * std::abs(H) / g, nu) * std::cyl_bessel_k(nu, g * std::abs(H));
}

PosDefMatrix spd(const char* text) { return PosDefMatrix(parse_matrix(text)); }

}  // namespace

TEST_CASE("degree one eta against Bessel K") {
  SymMatrix h(1, 1);
  for (double a : {0.5, 1.3, 2.5})
    for (double H : {0.3, 1.0, 4.0}) {
      h(0, 0) = H;
      const double g = 1.7;
      const EtaValue e = eta_quadrature(PosDefMatrix(SymMatrix::Constant(1, 1, g)), h, a, a);
      CHECK(e.value.real() == doctest::Approx(eta1_equal_oracle(g, H, a)).epsilon(1e-10));
      CHECK(eta1_equal_params(g, H, a).real() == doctest::Approx(eta1_equal_oracle(g, H, a)).epsilon(1e-12));
    }
}

TEST_CASE("degree one eta at h = 0 is a Gamma value") {
  // eta_1(g, 0; a, b) = Gamma(a + b - 1) g^{1 - a - b}
  const EtaValue e = eta_quadrature(PosDefMatrix(SymMatrix::Constant(1, 1, 0.8)), SymMatrix::Zero(1, 1), 1.2, 0.9);
  CHECK(e.value.real() == doctest::Approx(std::tgamma(1.1) * std::pow(0.8, -1.1)).epsilon(1e-10));
}

TEST_CASE("xi at h = 0 matches the closed form") {
  const PosDefMatrix g = spd("1.3,0.4;0.4,0.8");
  const EtaValue x = xi_from_eta(g, SymMatrix::Zero(2, 2), 2.0, 1.7);
  CHECK(std::abs(x.value - xi_zero_closed(2, g, 2.0, 1.7)) < 1e-8 * std::abs(x.value));
  const Complex a(1.3, 0.2), b(1.1, -0.3);
  const EtaValue xc = xi_from_eta(g, SymMatrix::Zero(2, 2), a, b);
  CHECK(std::abs(xc.value - xi_zero_closed(2, g, a, b)) < 1e-6 * std::abs(xc.value));
}

TEST_CASE("rank-one residue point closed form") {
  const PosDefMatrix y = spd("1.2,0.3;0.3,0.7");
  IntVector w(2);
  w << 1, -1;
  for (std::int64_t t : {1, -2, 3}) {
    const Rank1Form h{t, w};
    const EtaValue q = eta_quadrature(PosDefMatrix(SymMatrix(2.0 * y.matrix())), kPi * h.reconstruct().to_real(), 1.0, 1.0);
    CHECK(eta_rank1_residue_point(y, h) == doctest::Approx(q.value.real()).epsilon(1e-7));
  }
}

TEST_CASE("eta star is invariant under unimodular change of variables") {
  const SymMatrix g = parse_matrix("1.3,0.4;0.4,0.8");
  const SymMatrix h = parse_matrix("0.5,0.25;0.25,-1");
  IntMatrix u(2, 2);
  u << 1, 1, 0, 1;
  const Eigen::MatrixXd uit = u.cast<double>().inverse().transpose();
  const EtaValue a = eta_star(PosDefMatrix(g), h, 2.5, 2.5);
  const EtaValue b = eta_star(PosDefMatrix(quadratic_transform(g, u)), uit.transpose() * h * uit, 2.5, 2.5);
  CHECK(a.value.real() == doctest::Approx(b.value.real()).epsilon(1e-9));
}

TEST_CASE("omega symmetry alpha, beta -> kappa - beta, kappa - alpha") {
  const PosDefMatrix g = spd("1.3,0.4;0.4,0.8");
  const SymMatrix hd = parse_matrix("0.6,0.1;0.1,0.4");
  CHECK(omega(g, hd, 0.9, 0.7).value.real() == doctest::Approx(omega(g, hd, 0.8, 0.6).value.real()).epsilon(1e-7));
  SymMatrix h1(1, 1);
  h1 << 1.0;
  const PosDefMatrix one(SymMatrix::Identity(1, 1));
  CHECK(omega(one, h1, 0.7, 0.4).value.real() == doctest::Approx(omega(one, h1, 0.6, 0.3).value.real()).epsilon(1e-7));
}

TEST_CASE("signature") {
  const SignatureData s = signature(spd("2,0;0,1"), parse_matrix("1,0;0,-3"));
  CHECK(s.p == 1);
  CHECK(s.q == 1);
  CHECK(s.r == 0);
  CHECK(s.delta_plus == doctest::Approx(2.0));
  CHECK(s.delta_minus == doctest::Approx(3.0));
  const SignatureData z = signature(spd("1,0;0,1"), SymMatrix::Zero(2, 2));
  CHECK(z.r == 2);
}

TEST_CASE("convergence guards") {
  const PosDefMatrix g = spd("1,0;0,1");
  CHECK_THROWS_AS(eta_quadrature(g, parse_matrix("1,0;0,1"), 0.4, 2.0), DomainError);
  CHECK_THROWS_AS(eta_quadrature(g, SymMatrix::Zero(2, 2), 0.9, 0.9), DomainError);
  CHECK_THROWS_AS(eta_quadrature(PosDefMatrix(SymMatrix::Identity(3, 3)), SymMatrix::Zero(3, 3), 3.0, 3.0), DomainError);
}
