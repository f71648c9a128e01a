#include <doctest.h>

#include <cmath>

#include "siegel/errors.hpp"
#include "siegel/zetalattice.hpp"

using namespace siegel;

namespace {

PosDefMatrix spd(const char* text) { return PosDefMatrix(parse_matrix(text)); }

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("Epstein zeta of class-number-one forms") {
  // x^2 + y^2: 2 zeta(s) L(s, chi_-4); x^2 + xy + y^2: 3 zeta(s) L(s, chi_-3)
  for (double s : {1.5, 2.0, 3.7, 0.6}) {
    CHECK(rel(epstein_zeta(spd("1,0;0,1"), s), 2.0 * riemann_zeta(s) * dirichlet_l(s, -4)) < 1e-12);
    CHECK(rel(epstein_zeta(spd("1,0.5;0.5,1"), s), 3.0 * riemann_zeta(s) * dirichlet_l(s, -3)) < 1e-12);
  }
  const Complex s(0.5, 6.0);
  CHECK(rel(epstein_zeta(spd("1,0;0,1"), s), 2.0 * riemann_zeta(s) * dirichlet_l(s, -4)) < 1e-11);
  CHECK_THROWS_AS(epstein_zeta(spd("1,0;0,1"), 1.0), PoleError);
}

TEST_CASE("Epstein functional equation") {
  const PosDefMatrix g = spd("1.3,0.4;0.4,0.8");
  const PosDefMatrix gi(SymMatrix(g.matrix().inverse()));
  for (double s : {0.3, 1.7}) {
    CHECK(rel(epstein_lambda(g, s), std::pow(g.det(), -0.5) * epstein_lambda(gi, 1.0 - s)) < 1e-12);
  }
  const PosDefMatrix g3 = spd("1.2,0.1,0.3;0.1,0.9,0.2;0.3,0.2,1.4");
  const PosDefMatrix g3i(SymMatrix(g3.matrix().inverse()));
  CHECK(rel(epstein_lambda(g3, 0.4), std::pow(g3.det(), -0.5) * epstein_lambda(g3i, 1.1)) < 1e-12);
}

TEST_CASE("theta split against the direct shell sum") {
  const PosDefMatrix g = spd("1.3,0.4;0.4,0.8");
  for (double s : {1.5, 2.0, 2.9}) {
    const SeriesValue d = epstein_zeta_direct(g, s, 1e6);
    CHECK(rel(epstein_zeta(g, s), d.value) < 1e-8);
  }
  CHECK(rel(km_zeta(1, 2, g, 2.0), km_zeta_primitive_direct(g, 2.0, 1e6).value) < 1e-8);
  const PosDefMatrix g3 = spd("1.2,0.1,0.3;0.1,0.9,0.2;0.3,0.2,1.4");
  CHECK(rel(km_zeta(1, 3, g3, 2.5), km_zeta_primitive_direct(g3, 2.5, 2e3).value) < 1e-6);
}

TEST_CASE("Koecher-Maass zeta trivial cases and completion") {
  const PosDefMatrix g = spd("1.3,0.4;0.4,0.8");
  CHECK(km_zeta(0, 2, g, 2.0) == Complex(1.0));
  CHECK(rel(km_zeta(2, 2, g, 2.0), std::pow(g.det(), -2.0)) < 1e-15);
  // xi_1^(2)(g, s) = xi(2s) zeta_1^(2)(g, s) = Lambda_g(s) / 2
  const double s = 1.8;
  CHECK(rel(km_xi_completed(1, 2, g, s), xi_completed(2 * s) * km_zeta(1, 2, g, s)) < 1e-13);
  CHECK(rel(km_xi_completed(1, 2, g, s), 0.5 * epstein_lambda(g, s)) < 1e-12);
  CHECK_THROWS_AS(km_zeta(2, 3, spd("1,0,0;0,1,0;0,0,1"), 2.0), DomainError);
}

TEST_CASE("residues of the completed binary zeta") {
  const PosDefMatrix g = spd("1.3,0.4;0.4,0.8");
  // 1/2 Lambda has residue -1/2 at 0 and det^{-1/2}/2 at 1
  CHECK(arakawa_residue(1, 2, g, 0, ResiduePoint::Low).real() == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(arakawa_residue(1, 2, g, 0, ResiduePoint::High).real() ==
        doctest::Approx(0.5 / std::sqrt(g.det())).epsilon(1e-12));
}

TEST_CASE("Kronecker limit formula") {
  for (const char* t : {"1,0;0,1", "1.3,0.4;0.4,0.8", "2,0.9;0.9,0.7"}) {
    const KroneckerCheck k = kronecker_limit_check(spd(t), 1e-3);
    CHECK(k.residue_est == doctest::Approx(k.residue_expected).epsilon(1e-9));
    CHECK(k.const_est == doctest::Approx(k.const_expected).epsilon(1e-8));
  }
}

TEST_CASE("degree-2 constant term against the Laurent oracle") {
  for (const char* t : {"1,0;0,1", "1.3,0.4;0.4,0.8"}) {
    const PosDefMatrix y = spd(t);
    const LaurentWindow w = km_xi_laurent_numeric(y, 1e-3);
    REQUIRE(w.c_0.has_value());
    CHECK(km_constant_term_C(2, y) == doctest::Approx(w.c_0->real()).epsilon(1e-7));
  }
  CHECK_THROWS_AS(km_constant_term_C(3, spd("1,0,0;0,1,0;0,0,1")), MissingInputError);
  CHECK(km_constant_term_C(3, spd("1,0,0;0,1,0;0,0,1"), 0.25) == 0.25);
}
