#include "siegel/zetalattice.hpp"

#include <cmath>

#include "siegel/errors.hpp"

namespace siegel {

namespace {

Complex cpow(double x, Complex e) { return std::exp(e * std::log(x)); }

// sum over nonzero a with pi g[a] <= X of (pi g[a])^{-e} Gamma(e, pi g[a]), det g = 1
Complex theta_half(const PosDefMatrix& g, Complex e, double X) {
  Complex acc = 0.0;
  for_each_lattice_point(g, X / kPi, [&](const IntVector&, double q) {
    const double t = kPi * q;
    acc += cpow(t, -e) * upper_incomplete_gamma(e, t);
  });
  return acc;
}

double ball_volume(int m) { return std::pow(kPi, 0.5 * m) / gamma(0.5 * m + 1.0); }

void require_binary(const PosDefMatrix& g, const char* who) {
  if (g.size() != 2) throw DomainError(std::string(who) + ": binary form required");
}

}  // namespace

KroneckerData KroneckerData::from(const PosDefMatrix& g) {
  require_binary(g, "KroneckerData");
  KroneckerData k;
  k.v_prime = g(0, 0);
  k.w = g(0, 1);
  k.W = Complex(k.w, std::sqrt(g.det())) / k.v_prime;
  return k;
}

Complex epstein_lambda(const PosDefMatrix& g, Complex s, const PrecisionConfig& prec) {
  const int m = g.size();
  const double half_m = 0.5 * m;
  if (std::abs(s) < 1e-14) throw PoleError("Gamma(s) at s = 0");
  if (std::abs(s - half_m) < 1e-14) throw PoleError("epstein pole at s = m/2");
  // scale to determinant one: Lambda_{cg}(s) = c^{-s} Lambda_g(s)
  const double c = std::pow(g.det(), 1.0 / m);
  const SymMatrix g1 = g.matrix() / c;
  const PosDefMatrix p1(g1);
  const PosDefMatrix p1inv(SymMatrix(g1.inverse()));
  const double X = -std::log(prec.abs_tol * 1e-3) + 2.0 * std::abs(s) + m + 5.0;
  const Complex acc = theta_half(p1, s, X) + theta_half(p1inv, half_m - s, X) - 1.0 / s + 1.0 / (s - half_m);
  return cpow(c, -s) * acc;
}

Complex epstein_zeta(const PosDefMatrix& g, Complex s, const PrecisionConfig& prec) {
  require_binary(g, "epstein_zeta");
  if (std::abs(s - 1.0) < 1e-14) throw PoleError("zeta_g(s) at s = 1");
  return 0.5 * epstein_lambda(g, s, prec) * cpow(kPi, s) / gamma(s);
}

SeriesValue epstein_zeta_direct(const PosDefMatrix& g, Complex s, double radius) {
  require_binary(g, "epstein_zeta_direct");
  if (s.real() <= 1.0) throw DomainError("epstein_zeta_direct: Re s must exceed 1");
  Complex sum = 0.0;
  double count = 0.0;
  for_each_lattice_point(g, radius, [&](const IntVector&, double q) {
    sum += cpow(q, -s);
    count += 1.0;
  });
  const double area = kPi / std::sqrt(g.det());
  const double excess = count - area * radius;
  sum += area * cpow(radius, 1.0 - s) / (s - 1.0) - excess * cpow(radius, -s);
  const double err = std::abs(s) * std::pow(radius, 0.25 - s.real()) / (s.real() - 0.25);
  return {0.5 * sum, 0.5 * err};
}

double kronecker_beta(const PosDefMatrix& g) {
  const KroneckerData k = KroneckerData::from(g);
  const double eta = std::abs(dedekind_eta(k.W));
  return kEulerGamma + 0.5 * std::log(k.v_prime / (2.0 * std::sqrt(g.det()))) - 2.0 * std::log(eta);
}

KroneckerCheck kronecker_limit_check(const PosDefMatrix& g, double delta) {
  require_binary(g, "kronecker_limit_check");
  if (!(delta > 1e-6 && delta < 0.1)) throw DomainError("kronecker_limit_check: delta out of (1e-6, 0.1)");
  const double four_det = 4.0 * g.det();
  auto zeta = [&](double s) { return epstein_zeta(g, s).real(); };
  auto bracket = [&](double s) { return 2.0 * std::pow(four_det, 0.5 * s) * zeta(s); };
  auto residue_at = [&](double d) { return 0.5 * d * (zeta(1.0 + d) - zeta(1.0 - d)); };
  auto const_at = [&](double d) { return 0.5 * (bracket(1.0 + d) + bracket(1.0 - d)); };
  KroneckerCheck out;
  out.residue_est = (4.0 * residue_at(0.5 * delta) - residue_at(delta)) / 3.0;
  out.const_est = 0.5 / std::sqrt(four_det) * (4.0 * const_at(0.5 * delta) - const_at(delta)) / 3.0;
  out.residue_expected = 0.5 / std::sqrt(four_det) * 2.0 * kPi;
  out.const_expected = 0.5 / std::sqrt(four_det) * 4.0 * kPi * kronecker_beta(g);
  return out;
}

Complex km_zeta(int nu, int m, const PosDefMatrix& g, Complex s, const PrecisionConfig& prec) {
  if (g.size() != m) throw DomainError("km_zeta: g has wrong size");
  if (nu == 0) return 1.0;
  if (nu == m) return cpow(g.det(), -s);
  if (nu == 1 && m <= 4) {
    return epstein_lambda(g, s, prec) / (2.0 * cpow(kPi, -s) * gamma(s) * riemann_zeta(2.0 * s));
  }
  throw DomainError("km_zeta: unsupported (nu, m)");
}

SeriesValue km_zeta_primitive_direct(const PosDefMatrix& g, Complex s, double radius) {
  const int m = g.size();
  const double half_m = 0.5 * m;
  if (s.real() <= half_m) throw DomainError("km_zeta_primitive_direct: Re s must exceed m/2");
  Complex sum = 0.0;
  double count = 0.0;
  for_each_lattice_point(g, radius, [&](const IntVector& v, double q) {
    if (gcd_of(v) != 1) return;
    sum += cpow(q, -s);
    count += 1.0;
  });
  sum *= 0.5;
  count *= 0.5;
  const double c = ball_volume(m) / (2.0 * riemann_zeta(double(m)) * std::sqrt(g.det()));
  const double excess = count - c * std::pow(radius, half_m);
  sum += c * half_m * cpow(radius, half_m - s) / (s - half_m) - excess * cpow(radius, -s);
  const double err = std::abs(s) * std::pow(radius, 0.5 * (m - 1) - s.real()) / (s.real() - 0.5 * (m - 1));
  return {sum, err};
}

Complex km_xi_completed(int nu, int m, const PosDefMatrix& g, Complex s, const PrecisionConfig& prec) {
  if (g.size() != m) throw DomainError("km_xi_completed: g has wrong size");
  if (nu == 0) return 1.0;
  if (nu == 1 && m <= 4 && m != 1) return 0.5 * epstein_lambda(g, s, prec);
  if (nu == m) {
    Complex acc = cpow(g.det(), -s);
    for (int i = 0; i < nu; ++i) {
      const Complex x = 2.0 * s - double(i);
      if (std::abs(x) < 1e-14 || std::abs(x - 1.0) < 1e-14) throw PoleError("xi(2s - " + std::to_string(i) + ")");
      acc *= xi_completed(x);
    }
    return acc;
  }
  throw DomainError("km_xi_completed: unsupported (nu, m)");
}

Complex arakawa_residue(int nu, int m, const PosDefMatrix& g, int mu, ResiduePoint at,
                        const PrecisionConfig& prec) {
  if (g.size() != m || nu < 1 || nu > m) throw DomainError("arakawa_residue: bad (nu, m)");
  const int mu_max = m >= 2 * nu - 1 ? nu - 1 : m - nu;
  if (mu < 0 || mu > mu_max) throw DomainError("arakawa_residue: mu out of range");
  const double v = v_constant(nu - mu);
  const Complex s_inner = 0.5 * nu;
  if (at == ResiduePoint::Low) return -0.5 * v * km_xi_completed(mu, m, g, s_inner, prec);
  const PosDefMatrix ginv(SymMatrix(g.matrix().inverse()));
  return 0.5 * v * std::pow(g.det(), -0.5 * nu) * km_xi_completed(mu, m, ginv, s_inner, prec);
}

double km_constant_term_C(int m, const PosDefMatrix& y, std::optional<double> supplied) {
  if (supplied) return *supplied;
  if (m >= 3) {
    throw MissingInputError("Laurent constant term C_" + std::to_string(m - 1) + "^(" + std::to_string(m) +
                            ")(y) of the Koecher-Maass xi function is not computed for degree >= 3; "
                            "supply it (--km-constant / km_constant_term)");
  }
  if (m != 2 || y.size() != 2) throw DomainError("km_constant_term_C: degree 2 needs a binary y");
  const KroneckerData k = KroneckerData::from(y);
  const double dety = y.det();
  const double eta = std::abs(dedekind_eta(k.W));
  return 0.5 / std::sqrt(4.0 * dety) *
         (kEulerGamma + std::log(k.v_prime / (8.0 * kPi)) - std::log(dety) - 4.0 * std::log(eta));
}

LaurentWindow km_xi_laurent_numeric(const PosDefMatrix& y, double delta) {
  require_binary(y, "km_xi_laurent_numeric");
  const PosDefMatrix g2(SymMatrix(2.0 * y.matrix()));
  auto f = [&](double s) { return km_xi_completed(1, 2, g2, s).real(); };
  auto res = [&](double d) { return 0.5 * d * (f(1.0 + d) - f(1.0 - d)); };
  auto c0 = [&](double d) { return 0.5 * (f(1.0 + d) + f(1.0 - d)); };
  LaurentWindow out;
  out.center = 1.0;
  out.c_minus1 = (4.0 * res(0.5 * delta) - res(delta)) / 3.0;
  out.c_0 = (4.0 * c0(0.5 * delta) - c0(delta)) / 3.0;
  return out;
}

}  // namespace siegel
