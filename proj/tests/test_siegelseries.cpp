#include <doctest.h>

#include <cmath>
#include <map>
#include <numeric>

#include "siegel/errors.hpp"
#include "siegel/oracle.hpp"
#include "siegel/siegelseries.hpp"

using namespace siegel;

namespace {

bool squarefree(std::int64_t n) {
  n = std::llabs(n);
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

bool fundamental(std::int64_t D) {
  if (D == 1) return true;
  const std::int64_t r = ((D % 4) + 4) % 4;
  if (r == 1) return squarefree(D);
  if (r == 0) {
    const std::int64_t m = D / 4;
    const std::int64_t q = ((m % 4) + 4) % 4;
    return (q == 2 || q == 3) && squarefree(m);
  }
  return false;
}

int ord(std::int64_t n, std::int64_t p) {
  int k = 0;
  n = std::llabs(n);
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

// Degree-2 Siegel series through the discriminant: D = -det(2T) = D0 f^2, D0 fundamental,
// S = L(s - 1, chi_D0) / (zeta(s) zeta(2s - 2)) prod_{p | f} F_p(T, p^{-s}).
double discriminant_formula(const HalfIntegralForm& T, double s) {
  const std::int64_t D = -T.det_doubled();
  std::int64_t f = 1;
  for (std::int64_t g = 1; g * g <= std::llabs(D); ++g)
    if (D % (g * g) == 0 && fundamental(D / (g * g))) f = g;
  const std::int64_t D0 = D / (f * f);
  double val = dirichlet_l(s - 1, D0) / (riemann_zeta(s) * riemann_zeta(2 * s - 2));
  for (const auto p : prime_divisors(f)) {
    const double X = std::pow(double(p), -s);
    const int a = ord(content(T), p), b = ord(f, p);
    const int chi = kronecker_symbol(D0, p);
    const double q = double(p) * p * p * X * X;
    double F = 0.0;
    for (int i = 0; i <= a; ++i) {
      double s1 = 0.0, s2 = 0.0;
      for (int j = 0; j <= b - i; ++j) s1 += std::pow(q, j);
      for (int j = 0; j <= b - i - 1; ++j) s2 += std::pow(q, j);
      F += std::pow(double(p) * p * X, i) * (s1 - chi * double(p) * X * s2);
    }
    val *= F;
  }
  return val;
}

// sum over Sym_2(Q)/Sym_2(Z) of n(T)^{-s}, n = product of reduced denominators of elementary divisors
double rank0_by_counting(double s, int N) {
  std::map<std::int64_t, std::int64_t> count;
  for (std::int64_t q = 1; q <= N; ++q)
    for (std::int64_t a = 0; a < q; ++a)
      for (std::int64_t b = 0; b < q; ++b)
        for (std::int64_t c = 0; c < q; ++c) {
          const std::int64_t g = std::gcd(std::gcd(a, b), c);
          if (std::gcd(g, q) != 1) continue;
          const std::int64_t e2 = g == 0 ? 0 : std::llabs(a * c - b * b) / g;
          const std::int64_t n = (q / std::gcd(g, q)) * (q / std::gcd(e2, q));
          if (n <= N) ++count[n];
        }
  double acc = 0.0;
  for (const auto& [n, k] : count) acc += double(k) * std::pow(double(n), -s);
  return acc;
}

}  // namespace

TEST_CASE("degree-2 series against the discriminant formula") {
  const double s = 3.3;
  double worst = 0.0;
  int n = 0;
  for (std::int64_t a = -6; a <= 6; ++a)
    for (std::int64_t b = -8; b <= 8; ++b)
      for (std::int64_t c = -6; c <= 6; ++c) {
        IntMatrix d(2, 2);
        d << 2 * a, b, b, 2 * c;
        const HalfIntegralForm T(d);
        if (T.det_doubled() == 0) continue;
        const double k = discriminant_formula(T, s);
        worst = std::max(worst, std::abs(siegel_rank2(T, s).real() - k) / std::abs(k));
        ++n;
      }
  CHECK(n > 2500);
  CHECK(worst < 1e-12);
}

TEST_CASE("degree-1 series against Ramanujan sums") {
  for (std::int64_t h : {1, 2, 4, 6, 12}) {
    CHECK(siegel_rank1(h, 3.0).real() == doctest::Approx(brute_siegel1(h, 3.0, 200).real()).epsilon(1e-4));
    CHECK(siegel_rank1(h, 3.0).real() ==
          doctest::Approx(sigma_power(h, -2.0) / riemann_zeta(3.0)).epsilon(1e-13));
    IntMatrix m(1, 1);
    m << 2 * h;
    CHECK(siegel_full_rank(HalfIntegralForm(m), 3.0).real() == doctest::Approx(siegel_rank1(h, 3.0).real()).epsilon(1e-12));
  }
}

TEST_CASE("zero form: degree one and two") {
  // S_1(0, s) = sum phi(n) n^{-s} = zeta(s - 1) / zeta(s)
  CHECK(siegel_rank0(1, 4.0).real() == doctest::Approx(riemann_zeta(3.0) / riemann_zeta(4.0)).epsilon(1e-13));
  const double s = 6.0;
  CHECK(siegel_rank0(2, s).real() == doctest::Approx(rank0_by_counting(s, 60)).epsilon(1e-5));
  CHECK(siegel_rank0(0, s).real() == 1.0);
}

TEST_CASE("series dispatcher reduces by rank") {
  IntMatrix d(2, 2);
  d << 2, 1, 1, 2;
  const HalfIntegralForm full(d);
  CHECK(siegel_series(full, 3.5).real() == doctest::Approx(siegel_rank2(full, 3.5).real()).epsilon(1e-14));
  CHECK(siegel_series(HalfIntegralForm::zero(2), 5.0).real() == doctest::Approx(siegel_rank0(2, 5.0).real()).epsilon(1e-14));
  // rank one: h = 3 w tw with w = (1, 1) is GL_2(Z)-equivalent to diag(3, 0)
  IntMatrix r1(2, 2);
  r1 << 6, 6, 6, 6;
  IntMatrix one(1, 1);
  one << 6;
  CHECK(siegel_series(HalfIntegralForm(r1), 4.0).real() ==
        doctest::Approx(siegel_reduce(HalfIntegralForm(one), 2, 4.0).real()).epsilon(1e-13));
}

TEST_CASE("divisor classes and discriminant") {
  IntMatrix d(2, 2);
  d << 4, 0, 0, 4;  // h = 2 * identity
  const auto cls = divisor_classes(HalfIntegralForm(d));
  for (const auto& g : cls) {
    CHECK(g(1, 0) == 0);
    CHECK(g(0, 1) >= 0);
    CHECK(g(0, 1) < g(1, 1));
  }
  CHECK(cls.size() >= 2);
  CHECK(discriminant(HalfIntegralForm(d)).d == -16);
  CHECK(prime_divisors(360) == std::vector<std::int64_t>{2, 3, 5});
}
