#include "siegel/oracle.hpp"

#include <cmath>
#include <numeric>

#include "siegel/errors.hpp"
#include "siegel/fourier.hpp"
#include "siegel/hypergeom.hpp"
#include "siegel/quadrature.hpp"
#include "siegel/siegelseries.hpp"
#include "siegel/zetalattice.hpp"

namespace siegel {

namespace {

Complex cpow(double x, Complex e) { return std::exp(e * std::log(x)); }

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t out = n;
  for (const auto p : prime_divisors(n)) out = out / p * (p - 1);
  return out;
}

// sqrt(pi) Gamma(s - 1/2) / Gamma(s) = int_R (1 + x^2)^{-s} dx
Complex line_integral(Complex s) { return std::sqrt(kPi) * gamma(s - 0.5) / gamma(s); }

// int_A^inf (a^2 + x^2)^{-s} dx, A > 0, via x = A / t
Complex half_tail(double a, double A, Complex s) {
  auto f = [&](double t, double) -> Complex {
    if (t == 0.0) return 0.0;
    return A * cpow(t, 2.0 * s - 2.0) * cpow(a * a * t * t + A * A, -s);
  };
  return quad::integrate_unit(f, 1e-17, 1e-13).value;
}

// Row Hermite normal form of a 2 x n integer matrix of rank 2 under left GL_2(Z).
IntMatrix row_hnf(IntMatrix a) {
  const int n = static_cast<int>(a.cols());
  int j = 0;
  while (j < n && a(0, j) == 0 && a(1, j) == 0) ++j;
  if (j == n) return a;
  // extended gcd on column j
  while (a(1, j) != 0) {
    const std::int64_t q = a(0, j) / a(1, j);
    a.row(0) -= q * a.row(1);
    a.row(0).swap(a.row(1));
  }
  if (a(0, j) < 0) a.row(0) *= -1;
  int k = j + 1;
  while (k < n && a(1, k) == 0) ++k;
  if (k == n) return a;
  if (a(1, k) < 0) a.row(1) *= -1;
  std::int64_t q = a(0, k) / a(1, k);
  if (a(0, k) - q * a(1, k) < 0) --q;
  a.row(0) -= q * a.row(1);
  return a;
}

std::int64_t minor_gcd(const IntMatrix& cd) {
  std::int64_t g = 0;
  for (int i = 0; i < cd.cols(); ++i)
    for (int j = i + 1; j < cd.cols(); ++j) g = std::gcd(g, cd(0, i) * cd(1, j) - cd(0, j) * cd(1, i));
  return g;
}

// Sym_2(Q) / Sym_2(Z) classes with n(T) <= M as (a, b, c, q, n), T = [[a, b], [b, c]] / q
struct RationalClass {
  std::int64_t a, b, c, q, n;
};

std::vector<RationalClass> rational_classes(int M) {
  std::vector<RationalClass> out;
  for (std::int64_t q = 1; q <= M; ++q)
    for (std::int64_t a = 0; a < q; ++a)
      for (std::int64_t b = 0; b < q; ++b)
        for (std::int64_t c = 0; c < q; ++c) {
          const std::int64_t g = std::gcd(std::gcd(a, b), c);
          if (std::gcd(g, q) != 1) continue;
          const std::int64_t det = std::llabs(a * c - b * b);
          const std::int64_t e2 = g == 0 ? 0 : det / g;
          const std::int64_t n = (q / std::gcd(g, q)) * (q / std::gcd(e2, q));
          if (n <= M) out.push_back({a, b, c, q, n});
        }
  return out;
}

// (pi/2) int |l1 - l2| prod (1 + l_i^2)^{-s} phi(|l|) dl, with phi = 1 when width = 0
Complex eigen_integral(Complex s, double radius, double width) {
  const double rmax = width > 0 ? radius + 4.5 * width : 0.0;
  auto angular = [&](double r) -> Complex {
    const double r2 = r * r;
    auto g = [&](double u, double) -> Complex {
      const double v = u / std::sqrt(2.0);
      return cpow(1.0 + r2 * (1.0 - v * v), -s) * cpow(1.0 + r2 * v * v, -s) / std::sqrt(2.0);
    };
    return 8.0 * quad::integrate_unit(g, 1e-18, 1e-12).value;
  };
  auto radial = [&](double r) -> Complex {
    const double phi = width > 0 ? 0.5 * std::erfc((r - radius) / width) : 1.0;
    return r * r * phi * angular(r);
  };
  Complex acc;
  if (width > 0) {
    acc = quad::integrate_unit([&](double x, double) { return rmax * radial(rmax * x); }, 1e-16, 1e-11).value;
  } else {
    acc = quad::integrate_half_line([&](double r) { return radial(r); }, 1e-16, 1e-11).value;
  }
  return 0.5 * kPi * acc;
}

}  // namespace

IntMatrix CosetPair::canonical() const {
  const int m = static_cast<int>(c.rows());
  IntMatrix cd(m, 2 * m);
  cd << c, d;
  if (m == 1) {
    const std::int64_t sgn = cd(0, 0) != 0 ? (cd(0, 0) > 0 ? 1 : -1) : (cd(0, 1) > 0 ? 1 : -1);
    return sgn * cd;
  }
  if (m != 2) throw DomainError("CosetPair: degree must be 1 or 2");
  return row_hnf(cd);
}

std::vector<CosetPair> coset_enumerate(int m, int H) {
  if (m != 1 && m != 2) throw DomainError("coset_enumerate: degree must be 1 or 2");
  if (H < 1) throw DomainError("coset_enumerate: H must be >= 1");
  const int width = 2 * H + 1;
  const double total = std::pow(double(width), 2 * m * m);
  if (total > 1e7) throw DomainError("coset_enumerate: enumeration exceeds the 1e7 cost guard");
  std::set<IntMatrix, bool (*)(const IntMatrix&, const IntMatrix&)> seen(
      [](const IntMatrix& a, const IntMatrix& b) {
        return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
      });
  std::vector<CosetPair> out;
  const int entries = 2 * m * m;
  std::vector<std::int64_t> v(entries, -H);
  for (;;) {
    IntMatrix c(m, m), d(m, m);
    for (int i = 0; i < m * m; ++i) {
      c(i / m, i % m) = v[i];
      d(i / m, i % m) = v[m * m + i];
    }
    IntMatrix cd(m, 2 * m);
    cd << c, d;
    const IntMatrix cdt = c * d.transpose();
    const bool coprime = m == 1 ? std::gcd(c(0, 0), d(0, 0)) == 1 : minor_gcd(cd) == 1;
    if (coprime && cdt == cdt.transpose()) {
      CosetPair p{c, d};
      if (seen.insert(p.canonical()).second) out.push_back(p);
    }
    int k = 0;
    while (k < entries && v[k] == H) v[k++] = -H;
    if (k == entries) break;
    ++v[k];
  }
  return out;
}

Complex degree1_coprime_sum(Complex tau, Complex s, int max_c) {
  const double u = tau.real();
  const double v = tau.imag();
  if (!(v > 0)) throw DomainError("degree1_coprime_sum: Im tau must be positive");
  const Complex lead = line_integral(s) * cpow(v, 1.0 - 2.0 * s);
  Complex dirichlet = riemann_zeta(2.0 * s - 1.0) / riemann_zeta(2.0 * s);
  // exponentially small Poisson corrections e^{-2 pi v} are dropped for large v
  if (v > 4.5) return lead * dirichlet;
  Complex exact = 0.0;
  for (std::int64_t c = 1; c <= max_c; ++c) {
    const double cd = static_cast<double>(c);
    const double a = cd * v;
    const double center = -cd * u;
    const double half = 60.0 + 2.0 * a;
    const auto lo = static_cast<std::int64_t>(std::ceil(center - half));
    const auto hi = static_cast<std::int64_t>(std::floor(center + half));
    for (std::int64_t d = lo; d <= hi; ++d) {
      if (std::gcd(c, d) != 1) continue;
      const double re = cd * u + static_cast<double>(d);
      exact += cpow(re * re + a * a, -s);
    }
    const double density = static_cast<double>(euler_phi(c)) / cd;
    exact += density * (half_tail(a, static_cast<double>(hi) + 0.5 - center, s) +
                        half_tail(a, center - (static_cast<double>(lo) - 0.5), s));
    dirichlet -= static_cast<double>(euler_phi(c)) * cpow(cd, -2.0 * s);
  }
  return exact + lead * dirichlet;
}

DirectValue eisenstein_direct(const UpperHalfPoint& z, Complex s, const DirectConfig& cfg) {
  const int m = z.size();
  if (m != 1 && m != 2) throw DomainError("eisenstein_direct: degree must be 1 or 2");
  if (s.real() <= 0.5 * (m + 1) + 0.5) throw DomainError("eisenstein_direct: Re(s) outside the practical region");
  const PosDefMatrix& y = z.y;
  const Complex lead = cpow(y.det(), s);
  if (m == 1) {
    return {lead * (1.0 + degree1_coprime_sum(Complex(z.x(0, 0), y(0, 0)), s, cfg.max_c)), 0.0};
  }
  // rank one: primitive w mod +-1, tau = z[w]
  const double v_exact = 4.5;
  Complex rank1 = 0.0;
  Complex partial_zeta = 0.0;
  for (const auto& w : primitive_vectors(y, v_exact)) {
    const Eigen::VectorXd wd = w.cast<double>();
    const Complex tau(wd.dot(z.x * wd), wd.dot(y.matrix() * wd));
    rank1 += degree1_coprime_sum(tau, s, cfg.max_c);
    partial_zeta += cpow(tau.imag(), 1.0 - 2.0 * s);
  }
  const Complex zeta_all = km_zeta(1, 2, y, 2.0 * s - 1.0);
  rank1 += line_integral(s) * riemann_zeta(2.0 * s - 1.0) / riemann_zeta(2.0 * s) * (zeta_all - partial_zeta);

  // rank two: T in Sym_2(Q); lattice sums with a smooth cutoff for n(T) <= M, mean value beyond
  const double R = cfg.cutoff_radius;
  const double wdt = cfg.cutoff_width;
  const double rmax = R + 4.5 * wdt;
  const double dety = y.det();
  const Complex scale = cpow(dety, 1.5 - 2.0 * s);
  const Complex total = xi_zero_closed(2, y, s, s);
  const Complex smooth = scale * eigen_integral(s, R, wdt);
  // rho^2 = tr(y^{-1} X y^{-1} X) as a quadratic form G in (X11, X12, X22); box from diag(G^{-1})
  const SymMatrix yinv = y.matrix().inverse();
  const double p = yinv(0, 0), q = yinv(0, 1), r = yinv(1, 1);
  Eigen::Matrix3d G;
  G << p * p, 2 * p * q, q * q, 2 * p * q, 2 * (p * r + q * q), 2 * q * r, q * q, 2 * q * r, r * r;
  const Eigen::Vector3d half = (G.inverse().diagonal().array().sqrt() * rmax).matrix();
  const double lmax = Eigen::SelfAdjointEigenSolver<SymMatrix>(y.matrix()).eigenvalues().maxCoeff();
  const double y11 = y(0, 0), y12 = y(0, 1), y22 = y(1, 1);
  Complex rank2 = 0.0;
  Complex weight_left = siegel_rank0(2, 2.0 * s);
  for (const auto& rc : rational_classes(cfg.max_denominator)) {
    const double den = static_cast<double>(rc.q);
    const double c11 = z.x(0, 0) + rc.a / den;
    const double c12 = z.x(0, 1) + rc.b / den;
    const double c22 = z.x(1, 1) + rc.c / den;
    Complex lattice = 0.0;
    for (auto s11 = static_cast<std::int64_t>(std::ceil(-half(0) - c11)); s11 <= half(0) - c11; ++s11)
      for (auto s12 = static_cast<std::int64_t>(std::ceil(-half(1) - c12)); s12 <= half(1) - c12; ++s12)
        for (auto s22 = static_cast<std::int64_t>(std::ceil(-half(2) - c22)); s22 <= half(2) - c22; ++s22) {
          const double u = c11 + s11, v = c12 + s12, w = c22 + s22;
          const double a11 = p * u + q * v, a12 = p * v + q * w, a21 = q * u + r * v, a22 = q * v + r * w;
          const double rho2 = a11 * a11 + 2.0 * a12 * a21 + a22 * a22;
          if (rho2 > rmax * rmax) continue;
          // det(X + i y) = (u w - v^2 - det y) + i (u y22 + w y11 - 2 v y12)
          const double re = u * w - v * v - dety;
          const double im = u * y22 + w * y11 - 2.0 * v * y12;
          const double phi = 0.5 * std::erfc((std::sqrt(rho2) - R) / wdt);
          lattice += phi * std::exp(-s * std::log(re * re + im * im));
        }
    const Complex w = cpow(static_cast<double>(rc.n), -2.0 * s);
    rank2 += w * (lattice + total - smooth);
    weight_left -= w;
  }
  rank2 += weight_left * total;
  DirectValue out;
  out.value = lead * (1.0 + rank1 + rank2);
  out.tail_estimate = std::abs(lead * weight_left * total) * std::exp(-2.0 * kPi / lmax);
  return out;
}

Complex eisenstein_direct_naive(const UpperHalfPoint& z, Complex s, int H) {
  const int m = z.size();
  Eigen::MatrixXcd zc(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) zc(i, j) = Complex(z.x(i, j), z.y(i, j));
  Complex acc = 0.0;
  for (const auto& p : coset_enumerate(m, H)) {
    const Eigen::MatrixXcd a = p.c.cast<double>().cast<Complex>() * zc + p.d.cast<double>().cast<Complex>();
    acc += std::exp(-s * std::log(std::norm(a.determinant())));
  }
  return cpow(z.y.det(), s) * acc;
}

Degree1Residue degree1_residue_check() {
  const std::vector<double> deltas = {0.02, 0.01, 0.005, 0.0025};
  auto residue_at = [&](Complex zpt) {
    SymMatrix x(1, 1), yv(1, 1);
    x(0, 0) = zpt.real();
    yv(0, 0) = zpt.imag();
    const UpperHalfPoint z(x, PosDefMatrix(yv));
    std::vector<double> p;
    for (double d : deltas) p.push_back(d * eisenstein_via_fourier(z, 1.0 + d, 12.0).real());
    // Neville extrapolation to delta = 0 in delta
    const std::size_t n = p.size();
    for (std::size_t k = 1; k < n; ++k)
      for (std::size_t i = 0; i + k < n; ++i)
        p[i] = (deltas[i + k] * p[i] - deltas[i] * p[i + 1]) / (deltas[i + k] - deltas[i]);
    return p[0];
  };
  return {residue_at(Complex(0.0, 1.0)), residue_at(Complex(0.25, 2.0))};
}

std::set<HalfIntegralForm> brute_rank1_set(int m, int bound) {
  if (m != 2) throw DomainError("brute_rank1_set: m = 2 only");
  if (bound > 10) throw DomainError("brute_rank1_set: bound too large");
  std::set<HalfIntegralForm> out;
  for (std::int64_t a = -bound; a <= bound; ++a)
    for (std::int64_t b = -bound; b <= bound; ++b)
      for (std::int64_t c = -bound; c <= bound; ++c) {
        if (a == 0 && b == 0 && c == 0) continue;
        if (a * c != b * b) continue;
        IntMatrix h(2, 2);
        h << a, b, b, c;
        out.insert(HalfIntegralForm::from_integral(h));
      }
  return out;
}

std::int64_t brute_content(const HalfIntegralForm& h) {
  if (h.is_zero()) throw DomainError("brute_content: zero form");
  const auto& d = h.doubled();
  const std::int64_t top = d.cwiseAbs().maxCoeff();
  std::int64_t best = 1;
  for (std::int64_t l = 1; l <= top; ++l) {
    bool ok = true;
    for (int i = 0; i < d.rows() && ok; ++i)
      for (int j = 0; j < d.cols() && ok; ++j) {
        if (d(i, j) % l != 0) ok = false;
        else if (i == j && (d(i, j) / l) % 2 != 0) ok = false;
      }
    if (ok) best = l;
  }
  return best;
}

Complex brute_siegel1(std::int64_t h, Complex s, int N) {
  if (N > 200) throw DomainError("brute_siegel1: N too large");
  Complex acc = 0.0;
  for (std::int64_t n = 1; n <= N; ++n) {
    double ramanujan = 0.0;
    for (std::int64_t a = 0; a < n; ++a) {
      if (std::gcd(a, n) != 1) continue;
      ramanujan += std::cos(2.0 * kPi * static_cast<double>((h * a) % n) / static_cast<double>(n));
    }
    acc += ramanujan * cpow(static_cast<double>(n), -s);
  }
  return acc;
}

}  // namespace siegel
