#include "siegel/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "siegel/errors.hpp"

namespace siegel {

namespace {

// B_2, B_4, ..., B_30
constexpr std::array<double, 15> kBernoulli2k = {
    1.0 / 6.0,           -1.0 / 30.0,          1.0 / 42.0,           -1.0 / 30.0,
    5.0 / 66.0,          -691.0 / 2730.0,      7.0 / 6.0,            -3617.0 / 510.0,
    43867.0 / 798.0,     -174611.0 / 330.0,    854513.0 / 138.0,     -236364091.0 / 2730.0,
    8553103.0 / 6.0,     -23749461029.0 / 870.0, 8615841276005.0 / 14322.0};

bool near_nonpositive_integer(Complex s, double tol = 1e-13) {
  const double r = std::round(s.real());
  return r <= 0.0 && std::abs(s - Complex(r, 0.0)) < tol;
}

std::string describe(Complex s) {
  std::ostringstream os;
  os << s.real();
  if (s.imag() != 0.0) os << (s.imag() > 0 ? "+" : "") << s.imag() << "i";
  return os.str();
}

// Stirling series for log Gamma, Re z >= 10.
Complex stirling_log_gamma(Complex z) {
  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  Complex corr = 0.0;
  Complex pw = inv;
  for (int k = 1; k <= 8; ++k) {
    corr += kBernoulli2k[k - 1] / (2.0 * k * (2.0 * k - 1.0)) * pw;
    pw *= inv2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi) + corr;
}

}  // namespace

Complex log_gamma(Complex s) {
  if (near_nonpositive_integer(s)) throw PoleError("Gamma(" + describe(s) + ")");
  if (s.real() < 0.5) {
    // reflection: Gamma(s) Gamma(1-s) = pi / sin(pi s)
    return std::log(kPi) - std::log(std::sin(kPi * s)) - log_gamma(1.0 - s);
  }
  Complex shift = 0.0;
  Complex z = s;
  while (z.real() < 10.0) {
    shift += std::log(z);
    z += 1.0;
  }
  return stirling_log_gamma(z) - shift;
}

Complex gamma(Complex s) {
  if (near_nonpositive_integer(s)) throw PoleError("Gamma(" + describe(s) + ")");
  if (s.imag() == 0.0) return gamma(s.real());
  if (s.real() < 0.5) return kPi / (std::sin(kPi * s) * gamma(1.0 - s));
  Complex prod = 1.0;
  Complex z = s;
  while (z.real() < 10.0) {
    prod *= z;
    z += 1.0;
  }
  return std::exp(stirling_log_gamma(z)) / prod;
}

double gamma(double s) {
  if (near_nonpositive_integer(Complex(s, 0.0))) throw PoleError("Gamma(" + describe(s) + ")");
  return std::tgamma(s);
}

Complex digamma(Complex s) {
  if (near_nonpositive_integer(s)) throw PoleError("digamma(" + describe(s) + ")");
  if (s.real() < 0.5) return digamma(1.0 - s) - kPi / std::tan(kPi * s);
  Complex shift = 0.0;
  Complex z = s;
  while (z.real() < 10.0) {
    shift += 1.0 / z;
    z += 1.0;
  }
  const Complex inv2 = 1.0 / (z * z);
  Complex corr = 0.0;
  Complex pw = inv2;
  for (int k = 1; k <= 8; ++k) {
    corr += kBernoulli2k[k - 1] / (2.0 * k) * pw;
    pw *= inv2;
  }
  return std::log(z) - 0.5 / z - corr - shift;
}

double digamma(double s) { return digamma(Complex(s, 0.0)).real(); }

Complex gamma_m(int m, Complex s) {
  if (m < 0) throw DomainError("gamma_m: negative size");
  Complex result = std::pow(kPi, m * (m - 1) / 4.0);
  for (int nu = 0; nu < m; ++nu) {
    const Complex arg = s - 0.5 * nu;
    if (near_nonpositive_integer(arg)) {
      throw PoleError("Gamma(" + describe(s) + " - " + std::to_string(nu) + "/2)");
    }
    result *= gamma(arg);
  }
  return result;
}

Complex digamma_like_logderiv_gamma_m(int m, Complex s) {
  Complex acc = 0.0;
  for (int nu = 0; nu < m; ++nu) {
    const Complex arg = s - 0.5 * nu;
    if (near_nonpositive_integer(arg)) {
      throw PoleError("Gamma(" + describe(s) + " - " + std::to_string(nu) + "/2)");
    }
    acc += digamma(arg);
  }
  return acc;
}

namespace {

// Euler-Maclaurin for sum_{n>=0} (n+a)^{-s} and its s-derivative.
struct HurwitzPair {
  Complex value;
  Complex deriv;
};

HurwitzPair hurwitz_em(Complex s, double a, bool want_deriv) {
  if (std::abs(s - 1.0) < 1e-15) throw PoleError("zeta(1)");
  const int n_direct = 12 + static_cast<int>(std::ceil(std::abs(s)));
  Complex value = 0.0;
  Complex deriv = 0.0;
  for (int n = 0; n < n_direct; ++n) {
    const double base = n + a;
    const Complex term = std::exp(-s * std::log(base));
    value += term;
    if (want_deriv) deriv -= term * std::log(base);
  }
  const double big_n = n_direct + a;
  const double log_n = std::log(big_n);
  const Complex pow_1ms = std::exp((1.0 - s) * log_n);
  const Complex pow_ms = pow_1ms / big_n;
  value += pow_1ms / (s - 1.0) + 0.5 * pow_ms;
  if (want_deriv) {
    deriv += -pow_1ms * log_n / (s - 1.0) - pow_1ms / ((s - 1.0) * (s - 1.0)) - 0.5 * pow_ms * log_n;
  }
  // T_k = B_2k / (2k)! * s (s+1) ... (s+2k-2) * N^{-s-2k+1}
  Complex poly = s;    // product up to (s + 2k - 2)
  Complex dpoly = 1.0;  // its derivative
  double fact = 2.0;   // (2k)!
  Complex npow = pow_ms / big_n;  // N^{-s-1}
  for (int k = 1; k <= 15; ++k) {
    if (k > 1) {
      const Complex f1 = s + (2.0 * k - 3.0);
      const Complex f2 = s + (2.0 * k - 2.0);
      dpoly = dpoly * f1 + poly;
      poly *= f1;
      dpoly = dpoly * f2 + poly;
      poly *= f2;
      fact *= (2.0 * k - 1.0) * (2.0 * k);
      npow /= big_n * big_n;
    }
    const double coef = kBernoulli2k[k - 1] / fact;
    const Complex term = coef * poly * npow;
    value += term;
    if (want_deriv) deriv += coef * npow * (dpoly - poly * log_n);
    if (std::abs(term) < 1e-18 * std::abs(value) && k > 3) break;
  }
  return {value, deriv};
}

}  // namespace

Complex hurwitz_zeta(Complex s, double a) {
  if (!(a > 0.0)) throw DomainError("hurwitz_zeta: a must be positive");
  return hurwitz_em(s, a, false).value;
}

Complex riemann_zeta(Complex s) {
  if (std::abs(s - 1.0) < 1e-15) throw PoleError("zeta(1)");
  if (s.real() < -0.5) {
    // functional equation avoids cancellation in the Euler-Maclaurin sum
    if (s.imag() == 0.0 && std::fmod(-s.real(), 2.0) == 0.0) return 0.0;
    return std::pow(2.0, s) * std::pow(kPi, s - 1.0) * std::sin(kPi * s / 2.0) * gamma(1.0 - s) *
           riemann_zeta(1.0 - s);
  }
  return hurwitz_em(s, 1.0, false).value;
}

Complex riemann_zeta_deriv(Complex s) { return hurwitz_em(s, 1.0, true).deriv; }

double riemann_zeta(double s) { return riemann_zeta(Complex(s, 0.0)).real(); }
double riemann_zeta_deriv(double s) { return riemann_zeta_deriv(Complex(s, 0.0)).real(); }

Complex xi_completed(Complex s) {
  if (std::abs(s) < 1e-15) throw PoleError("xi(0)");
  if (std::abs(s - 1.0) < 1e-15) throw PoleError("xi(1)");
  if (s.real() < 0.5) return xi_completed(1.0 - s);
  return std::pow(kPi, -s / 2.0) * gamma(s / 2.0) * riemann_zeta(s);
}

double xi_completed(double s) { return xi_completed(Complex(s, 0.0)).real(); }

double v_constant(int nu) {
  if (nu < 1) throw DomainError("v_constant: nu must be >= 1");
  double acc = 1.0;
  for (int i = 2; i <= nu; ++i) acc *= xi_completed(static_cast<double>(i));
  return acc;
}

Complex dedekind_eta(Complex z) {
  if (!(z.imag() > 0.0)) throw DomainError("dedekind_eta: Im z must be positive");
  const Complex i(0.0, 1.0);
  Complex factor = 1.0;
  for (int iter = 0; iter < 1000; ++iter) {
    const double n = std::round(z.real());
    if (n != 0.0) {
      // eta(z) = e^{i pi n / 12} eta(z - n)
      factor *= std::exp(i * kPi * n / 12.0);
      z -= n;
    }
    if (std::norm(z) >= 1.0 - 1e-15) break;
    // eta(z) = eta(-1/z) / sqrt(-i z)
    factor /= std::sqrt(-i * z);
    z = -1.0 / z;
  }
  const Complex q = std::exp(2.0 * kPi * i * z);
  Complex prod = 1.0;
  Complex qn = q;
  for (int n = 1; n < 10000 && std::abs(qn) > 1e-18; ++n) {
    prod *= 1.0 - qn;
    qn *= q;
  }
  return factor * std::exp(2.0 * kPi * i * z / 24.0) * prod;
}

Complex bessel_k(Complex nu, double x) {
  if (!(x > 0.0)) throw DomainError("bessel_k: x must be positive");
  // K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt, trapezoid rule
  const double h = 0.5 / (4.0 + std::sqrt(x));
  const double anu = std::abs(nu.real());
  // past the peak of exp(-x cosh t + |nu| t) and deep into the tail
  const double t_peak = std::asinh(std::max(anu, 1e-300) / x);
  const double log_peak = -x * std::cosh(t_peak) + anu * t_peak;
  Complex sum = 0.5 * std::exp(-x);  // t = 0 term, cosh(0) = 1
  for (int k = 1; k < 200000; ++k) {
    const double t = k * h;
    const double expo = -x * std::cosh(t);
    const Complex term = std::exp(expo) * std::cosh(nu * t);
    sum += term;
    if (t > t_peak && expo + anu * t < log_peak - 45.0) break;
  }
  return sum * h;
}

double bessel_k(double nu, double x) { return bessel_k(Complex(nu, 0.0), x).real(); }

namespace {

Complex incgamma_cf(Complex a, double x) {
  // modified Lentz on the Legendre continued fraction
  const double tiny = 1e-300;
  Complex b = x + 1.0 - a;
  Complex c = 1.0 / tiny;
  Complex d = 1.0 / b;
  Complex h = d;
  for (int i = 1; i < 20000; ++i) {
    const Complex an = -double(i) * (double(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const Complex del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  return std::exp(-x + a * std::log(x)) * h;
}

Complex lower_incgamma_series(Complex a, double x) {
  Complex term = 1.0 / a;
  Complex sum = term;
  for (int n = 1; n < 100000; ++n) {
    term *= x / (a + double(n));
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return std::exp(-x + a * std::log(x)) * sum;
}

double exponential_integral_e1(double x) {
  if (x < 1.0) {
    double sum = 0.0;
    double term = 1.0;
    for (int n = 1; n < 200; ++n) {
      term *= -x / n;
      sum += term / n;
      if (std::abs(term) < 1e-18) break;
    }
    return -kEulerGamma - std::log(x) - sum;
  }
  return incgamma_cf(Complex(0.0, 0.0), x).real();
}

}  // namespace

Complex upper_incomplete_gamma(Complex a, double x) {
  if (!(x > 0.0)) throw DomainError("upper_incomplete_gamma: x must be positive");
  const double r = std::round(a.real());
  const bool integer_nonpos = r <= 0.0 && std::abs(a - Complex(r, 0.0)) < 1e-14;
  if (integer_nonpos && x < 0.5) {
    // downward recurrence from E1: Gamma(a, x) = (Gamma(a+1, x) - x^a e^{-x}) / a
    Complex g = exponential_integral_e1(x);
    for (int k = -1; k >= static_cast<int>(r); --k) {
      g = (g - std::pow(x, double(k)) * std::exp(-x)) / double(k);
    }
    return g;
  }
  const bool near_pole = r <= 0.0 && std::abs(a - Complex(r, 0.0)) < 0.05;
  if (x > a.real() + 1.0 || (near_pole && x >= 0.25) || x > 30.0) return incgamma_cf(a, x);
  return gamma(a) - lower_incgamma_series(a, x);
}

namespace {

std::vector<std::int64_t> divisors_of(std::int64_t a) {
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= a; ++d) {
    if (a % d == 0) {
      small.push_back(d);
      if (d != a / d) large.push_back(a / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

Complex sigma_power(std::int64_t a, Complex s) {
  if (a < 1) throw DomainError("sigma_power: a must be >= 1");
  Complex acc = 0.0;
  for (const auto d : divisors_of(a)) acc += std::exp(s * std::log(static_cast<double>(d)));
  return acc;
}

double sigma_power(std::int64_t a, double s) {
  if (a < 1) throw DomainError("sigma_power: a must be >= 1");
  double acc = 0.0;
  for (const auto d : divisors_of(a)) acc += std::pow(static_cast<double>(d), s);
  return acc;
}

std::int64_t divisor_count(std::int64_t a) { return static_cast<std::int64_t>(divisors_of(a).size()); }

int kronecker_symbol(std::int64_t d, std::int64_t n) {
  if (n == 0) return (d == 1 || d == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (d < 0) result = -result;
  }
  int twos = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++twos;
  }
  if (twos > 0) {
    if (d % 2 == 0) return 0;
    const std::int64_t r8 = ((d % 8) + 8) % 8;
    if ((twos % 2 == 1) && (r8 == 3 || r8 == 5)) result = -result;
  }
  // Jacobi symbol (d / n), n odd positive
  std::int64_t a = ((d % n) + n) % n;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const std::int64_t r8 = n % 8;
      if (r8 == 3 || r8 == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

Complex dirichlet_l(Complex s, std::int64_t d) {
  if (d == 0) throw DomainError("dirichlet_l: d must be nonzero");
  if (d == 1) return riemann_zeta(s);
  if (!(s.real() > 0.0)) throw DomainError("dirichlet_l: unimplemented continuation for Re(s) <= 0");
  const std::int64_t q = 4 * (d < 0 ? -d : d);
  std::vector<int> chi(static_cast<std::size_t>(q) + 1);
  long chi_sum = 0;
  for (std::int64_t a = 1; a <= q; ++a) {
    chi[a] = kronecker_symbol(d, a);
    chi_sum += chi[a];
  }
  const bool principal = chi_sum != 0;
  if (std::abs(s - 1.0) < 1e-15) {
    if (principal) throw PoleError("L(1, principal character)");
    Complex acc = 0.0;
    for (std::int64_t a = 1; a <= q; ++a) {
      if (chi[a] != 0) acc += double(chi[a]) * digamma(double(a) / double(q));
    }
    return -acc / double(q);
  }
  Complex acc = 0.0;
  for (std::int64_t a = 1; a <= q; ++a) {
    if (chi[a] != 0) acc += double(chi[a]) * hurwitz_zeta(s, double(a) / double(q));
  }
  return std::pow(double(q), -s) * acc;
}

double dirichlet_l(double s, std::int64_t d) { return dirichlet_l(Complex(s, 0.0), d).real(); }

}  // namespace siegel
