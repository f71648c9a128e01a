#include <doctest.h>

#include <cmath>
#include <random>

#include "siegel/errors.hpp"
#include "siegel/residue.hpp"
#include "siegel/verify.hpp"

using namespace siegel;

namespace {

PosDefMatrix spd(const char* text) { return PosDefMatrix(parse_matrix(text)); }

const double kZeta3 = 1.2020569031595942;

}  // namespace

TEST_CASE("beta_2 at s = 1") {
  // beta_2(y, 1) = -pi^2 det(y)^{1/2} zeta(2)^{-2} = -36 pi^{-2} sqrt(det y)
  for (const char* t : {"1,0;0,1", "1.3,0.4;0.4,0.8"}) {
    const PosDefMatrix y = spd(t);
    CHECK(beta_m(2, y, 1.0).real() == doctest::Approx(-36.0 / (kPi * kPi) * std::sqrt(y.det())).epsilon(1e-13));
  }
  CHECK(laurent_B(spd("1,0;0,1"), 2).c_minus2->real() == doctest::Approx(-4.5 / (kPi * kPi)).epsilon(1e-13));
}

TEST_CASE("double poles cancel") {
  for (int m = 2; m <= 5; ++m)
    for (unsigned seed = 1; seed <= 4; ++seed) {
      const PosDefMatrix y = random_spd(m, 1000 + 10 * m + seed);
      const double a = laurent_A(y, m).c_minus2->real();
      const double b = laurent_B(y, m).c_minus2->real();
      CHECK(std::abs(a + b) < 1e-12 * std::abs(a));
      CHECK(explicit_A_minus2(y, m) == doctest::Approx(a).epsilon(1e-12));
      CHECK(explicit_B_minus2(y, m) == doctest::Approx(b).epsilon(1e-12));
    }
  CHECK_THROWS_AS(laurent_A(spd("1"), 1), DomainError);
}

TEST_CASE("log-derivative factors against finite differences") {
  const PosDefMatrix y = spd("1.3,0.4;0.4,0.8");
  const double h = 1e-5;
  for (int m : {2, 3}) {
    const PosDefMatrix ym = m == 2 ? y : spd("1.2,0.1,0.3;0.1,0.9,0.2;0.3,0.2,1.4");
    const double s = 0.5 * m + 0.13;
    const double da = (alpha_m(m, ym, s + h) - alpha_m(m, ym, s - h)).real() / (2 * h);
    const double db = (beta_m(m, ym, s + h) - beta_m(m, ym, s - h)).real() / (2 * h);
    CHECK(alpha_m_prime(m, ym, s).real() == doctest::Approx(da).epsilon(1e-7));
    CHECK(beta_m_prime(m, ym, s).real() == doctest::Approx(db).epsilon(1e-7));
  }
}

TEST_CASE("degree-2 residue constant closed form") {
  for (unsigned seed = 1; seed <= 5; ++seed) {
    const PosDefMatrix y = random_spd(2, 77 + seed);
    const KroneckerData k = KroneckerData::from(y);
    const double expected = 18.0 * std::sqrt(y.det()) / (kPi * kPi) *
                            (0.5 * kEulerGamma + 0.5 * std::log(k.v_prime / (4 * kPi)) -
                             2.0 * std::log(std::abs(dedekind_eta(k.W))));
    CHECK(residue_A_constant(y, 2) == doctest::Approx(expected).epsilon(1e-9));
  }
  // invariance under y -> y[u], u unimodular
  const PosDefMatrix y = spd("1.3,0.4;0.4,0.8");
  IntMatrix u(2, 2);
  u << 1, 1, 0, 1;
  CHECK(residue_A_constant(PosDefMatrix(quadratic_transform(y.matrix(), u)), 2) ==
        doctest::Approx(residue_A_constant(y, 2)).epsilon(1e-11));
  CHECK_THROWS_AS(residue_A_constant(random_spd(3, 5), 3), MissingInputError);
}

TEST_CASE("rank-one coefficient B") {
  // Gamma_m(m/2)^{-2}: 36 det(y) / pi^3 for m = 2, 8 pi det(y)^{3/2} / (zeta(3) zeta(4)) for m = 3
  CHECK(residue_B_coefficient(spd("1,0;0,1"), 2) == doctest::Approx(36.0 / std::pow(kPi, 3)).epsilon(1e-14));
  CHECK(residue_B_coefficient(spd("2,0;0,2"), 2) == doctest::Approx(4 * 36.0 / std::pow(kPi, 3)).epsilon(1e-14));
  CHECK(residue_B_coefficient(spd("1,0,0;0,1,0;0,0,1"), 3) ==
        doctest::Approx(8 * kPi / (kZeta3 * riemann_zeta(4.0))).epsilon(1e-13));
  // depends on y only through det y
  CHECK(residue_B_coefficient(spd("2,0;0,0.5"), 2) == doctest::Approx(residue_B_coefficient(spd("1,0;0,1"), 2)).epsilon(1e-14));
}

TEST_CASE("residue Fourier series") {
  const UpperHalfPoint z(SymMatrix::Zero(2, 2), spd("1,0;0,1"));
  const ResidueReport r = residue_fourier_series(z, 6.0);
  CHECK(r.terms.size() == 44);
  CHECK(r.tail_bound < 1e-15);
  CHECK(r.value_at(z.x).real() == doctest::Approx(-0.813186046679874).epsilon(1e-10));
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-1, 1);
  SymMatrix x(2, 2);
  x << u(rng), u(rng), 0, u(rng);
  x(1, 0) = x(0, 1);
  SymMatrix shift(2, 2);
  shift << 1, -2, -2, 3;
  CHECK(std::abs(r.value_at(x).imag()) < 1e-12);
  CHECK(std::abs(r.value_at(x) - r.value_at(x + shift)) < 1e-12);
  ResidueOptions tight;
  tight.tolerance = 1e-30;
  CHECK_THROWS_AS(residue_fourier_series(z, 1.0, tight), DomainError);
  CHECK_THROWS_AS(residue_fourier_series(UpperHalfPoint(SymMatrix::Zero(1, 1), spd("1")), 3.0), DomainError);
  const UpperHalfPoint z3(SymMatrix::Zero(3, 3), spd("1,0,0;0,1,0;0,0,1"));
  CHECK_THROWS_AS(residue_fourier_series(z3, 3.0), MissingInputError);
  ResidueOptions with_c;
  with_c.km_constant = 0.0;
  CHECK(residue_fourier_series(z3, 3.0, with_c).m == 3);
}

TEST_CASE("residue at (m + 1) / 2") {
  CHECK(residue_at_next_point(2) == doctest::Approx(45.0 / (kPi * kPi)).epsilon(1e-14));
  CHECK(residue_at_next_point_rescaled(2) == doctest::Approx(90.0 / (kPi * kPi)).epsilon(1e-14));
  CHECK(residue_at_next_point(3) == doctest::Approx(13.2926056763654).epsilon(1e-12));
}

TEST_CASE("singularity classification") {
  CHECK(classify_singularity(2, 1, 0) == Singularity::DoublePole);
  CHECK(classify_singularity(2, 2, 0) == Singularity::DoublePole);
  CHECK(classify_singularity(2, 2, 1) == Singularity::SimplePole);
  CHECK(classify_singularity(2, 2, 2) == Singularity::Holomorphic);
  CHECK(classify_singularity(2, 0, 0) == Singularity::Holomorphic);
  CHECK(std::string(to_string(Singularity::SimplePole)) == "simple_pole");
  CHECK_THROWS_AS(classify_singularity(2, 3, 0), DomainError);
}
