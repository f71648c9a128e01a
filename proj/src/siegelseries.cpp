#include "siegel/siegelseries.hpp"

#include <cmath>

#include "siegel/errors.hpp"

namespace siegel {

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  if (n < 0) n = -n;
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

DiscriminantData discriminant(const HalfIntegralForm& h) {
  const int lam = h.size();
  if (lam == 0) return {0, 1};
  if (h.rank() != lam) throw DomainError("discriminant: form is not of full rank");
  const std::int64_t det2h = h.det_doubled();
  const std::int64_t sign = (lam / 2) % 2 == 0 ? 1 : -1;
  // 2^{-delta((lambda-1)/2)}: halve when lambda is odd
  if (lam % 2 == 1) {
    if (det2h % 2 != 0) throw InternalError("discriminant: det(2h) odd for odd lambda");
    return {lam, sign * det2h / 2};
  }
  return {lam, sign * det2h};
}

Complex siegel_rank0(int nu, Complex s) {
  if (nu < 0) throw DomainError("siegel_rank0: nu must be >= 0");
  if (nu == 0) return 1.0;
  Complex acc = riemann_zeta(s - double(nu)) / riemann_zeta(s);
  for (int j = 1; j <= nu; ++j) acc *= riemann_zeta(2.0 * s - double(nu + j)) / riemann_zeta(2.0 * s - 2.0 * j);
  return acc;
}

Complex siegel_rank1(std::int64_t h, Complex s) {
  if (h == 0) throw DomainError("siegel_rank1: h must be nonzero");
  return sigma_power(h < 0 ? -h : h, 1.0 - s) / riemann_zeta(s);
}

int zero_block_size(const HalfIntegralForm& h, std::int64_t p) {
  const int lam = h.size();
  if (lam > 2) throw DomainError("zero_block_size: only lambda <= 2");
  // h[u] = 0 mod p entrywise over Z_(p) means (2h)[u] = 0 mod 2p for p = 2, mod p otherwise;
  // h itself is zero mod p exactly when p | cont(h)
  if (h.is_zero() || content(h) % p == 0) return lam;
  if (lam == 1) return 0;
  const std::int64_t mod = p == 2 ? 4 : p;
  const auto& d = h.doubled();
  // projective points (1, k) and (0, 1): look for v with h v = 0 mod p
  auto kills = [&](std::int64_t v0, std::int64_t v1) {
    for (int i = 0; i < 2; ++i) {
      const std::int64_t x = d(i, 0) * v0 + d(i, 1) * v1;
      if (((x % mod) + mod) % mod != 0) return false;
    }
    return true;
  };
  if (kills(0, 1)) return 1;
  for (std::int64_t k = 0; k < p; ++k)
    if (kills(1, k)) return 1;
  return 0;
}

Complex local_density_ap(const HalfIntegralForm& h, std::int64_t p, Complex s) {
  const int lam = h.size();
  if (lam < 1 || lam > 2) throw DomainError("local_density_ap: unsupported rank");
  const int r = zero_block_size(h, p);
  const double pd = static_cast<double>(p);
  auto pw = [&](Complex e) { return std::exp(e * std::log(pd)); };
  // lambda_p(h) = (d(h*)/p); only needed when the character term is present
  auto lambda_p = [&]() -> int {
    if (r == lam) return 1;  // h* is empty, d = 1
    throw DomainError("local_density_ap: character term with nonempty h* is not needed for lambda <= 2");
  };
  Complex acc = 1.0;
  if (lam % 2 == 1 && r % 2 == 0) {
    for (int j = 1; j <= r / 2; ++j) acc *= 1.0 - pw(2.0 * j - 1.0 + lam - 2.0 * s);
  } else if (lam % 2 == 1 && r % 2 == 1) {
    acc = 1.0 + double(lambda_p()) * pw(0.5 * (lam + r) - s);
    for (int j = 1; j <= (r - 1) / 2; ++j) acc *= 1.0 - pw(2.0 * j - 1.0 + lam - 2.0 * s);
  } else if (lam % 2 == 0 && r % 2 == 1) {
    for (int j = 1; j <= (r - 1) / 2; ++j) acc *= 1.0 - pw(2.0 * j + lam - 2.0 * s);
  } else if (r > 0) {
    acc = 1.0 + double(lambda_p()) * pw(0.5 * (lam + r) - s);
    for (int j = 1; j <= r / 2 - 1; ++j) acc *= 1.0 - pw(2.0 * j + lam - 2.0 * s);
  }
  // r = 0 with lambda even: (1 + lambda_p p^{..}) with lambda_p = (d(h)/p) = 0 since p | d(h)
  return acc;
}

std::vector<IntMatrix> divisor_classes(const HalfIntegralForm& h) {
  const int lam = h.size();
  std::vector<IntMatrix> out;
  if (lam == 1) {
    const std::int64_t n = h.doubled()(0, 0) / 2;
    const std::int64_t an = n < 0 ? -n : n;
    for (std::int64_t a = 1; a * a <= an; ++a) {
      if (an % (a * a) == 0) out.push_back(IntMatrix::Constant(1, 1, a));
    }
    return out;
  }
  if (lam != 2) throw DomainError("divisor_classes: only lambda in {1, 2}");
  const std::int64_t det2h = std::llabs(h.det_doubled());
  const auto& D = h.doubled();
  for (std::int64_t a = 1; a * a <= det2h; ++a) {
    for (std::int64_t c = 1; (a * c) * (a * c) <= det2h; ++c) {
      const std::int64_t n = a * c;
      if (det2h % (n * n) != 0) continue;
      for (std::int64_t b = 0; b < c; ++b) {
        // 2h[d^{-1}] = t(adj d) (2h) (adj d) / n^2, adj d = [[c, -b], [0, a]]
        IntMatrix adj(2, 2);
        adj << c, -b, 0, a;
        IntMatrix m(2, 2);
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) {
            std::int64_t acc = 0;
            for (int k = 0; k < 2; ++k)
              for (int l = 0; l < 2; ++l)
                acc = checked_add(acc, checked_mul(checked_mul(adj(k, i), D(k, l)), adj(l, j)));
            m(i, j) = acc;
          }
        const std::int64_t n2 = n * n;
        bool ok = true;
        for (int i = 0; i < 2 && ok; ++i)
          for (int j = 0; j < 2 && ok; ++j) ok = m(i, j) % n2 == 0;
        if (!ok) continue;
        if ((m(0, 0) / n2) % 2 != 0 || (m(1, 1) / n2) % 2 != 0) continue;
        IntMatrix d(2, 2);
        d << a, b, 0, c;
        out.push_back(d);
      }
    }
  }
  return out;
}

namespace {

HalfIntegralForm apply_inverse(const HalfIntegralForm& h, const IntMatrix& d) {
  const int lam = h.size();
  const std::int64_t det = int_determinant(d);
  IntMatrix adj(lam, lam);
  if (lam == 1) {
    adj(0, 0) = 1;
  } else {
    adj << d(1, 1), -d(0, 1), -d(1, 0), d(0, 0);
  }
  const HalfIntegralForm scaled = h.transform(adj);  // h[adj d] = det^2 h[d^{-1}]
  IntMatrix out = scaled.doubled();
  const std::int64_t n2 = checked_mul(det, det);
  for (int i = 0; i < lam; ++i)
    for (int j = 0; j < lam; ++j) {
      if (out(i, j) % n2 != 0) throw InternalError("apply_inverse: h[d^{-1}] not integral");
      out(i, j) /= n2;
    }
  return HalfIntegralForm(out);
}

Complex s_hat(const HalfIntegralForm& h, Complex s) {
  const int lam = h.size();
  const DiscriminantData dd = discriminant(h);
  Complex acc = 1.0 / riemann_zeta(s);
  for (int j = 1; j <= lam / 2; ++j) acc /= riemann_zeta(2.0 * s - 2.0 * j);
  if (lam % 2 == 0) acc *= dirichlet_l(s - 0.5 * lam, dd.d);
  for (const auto p : prime_divisors(dd.d)) acc *= local_density_ap(h, p, s);
  return acc;
}

}  // namespace

Complex siegel_full_rank(const HalfIntegralForm& h, Complex s) {
  const int lam = h.size();
  if (lam < 1 || lam > 2) throw DomainError("siegel_full_rank: unsupported rank");
  if (h.rank() != lam) throw DomainError("siegel_full_rank: form is not of full rank");
  Complex acc = 0.0;
  for (const auto& d : divisor_classes(h)) {
    const double det = static_cast<double>(int_determinant(d));
    acc += std::exp((lam + 1.0 - 2.0 * s) * std::log(det)) * s_hat(apply_inverse(h, d), s);
  }
  return acc;
}

Complex siegel_rank2(const HalfIntegralForm& h, Complex s) {
  if (h.size() != 2) throw DomainError("siegel_rank2: form must be 2x2");
  return siegel_full_rank(h, s);
}

Complex siegel_reduce(const HalfIntegralForm& h, int nu, Complex s) {
  const int lam = h.size();
  if (lam > 2) throw DomainError("siegel_reduce: rank >= 3 unsupported");
  if (nu < lam) throw DomainError("siegel_reduce: nu < lambda");
  Complex acc = 1.0;
  if (nu > lam) {
    acc = riemann_zeta(s + double(lam - nu)) / riemann_zeta(s);
    for (int j = 1; j <= nu - lam; ++j) acc *= riemann_zeta(2.0 * s - double(nu + j)) / riemann_zeta(2.0 * s - 2.0 * j);
  }
  const Complex s_inner = s - double(nu - lam);
  if (lam == 0) return acc;
  if (lam == 1) return acc * siegel_rank1(h.doubled()(0, 0) / 2, s_inner);
  return acc * siegel_rank2(h, s_inner);
}

Complex siegel_series(const HalfIntegralForm& h, Complex s) {
  const int nu = h.size();
  if (nu > 2) throw DomainError("siegel_series: only size <= 2");
  const int rank = h.rank();
  if (rank == 0) return siegel_rank0(nu, s);
  if (rank == nu) return siegel_reduce(h, nu, s);
  const Rank1Form r1 = rank1_decompose(h);
  IntMatrix t(1, 1);
  t(0, 0) = 2 * r1.t;
  return siegel_reduce(HalfIntegralForm(t), nu, s);
}

}  // namespace siegel
