#include "siegel/quadrature.hpp"

#include <array>
#include <stdexcept>

#include "siegel/specfun.hpp"

namespace siegel::quad {

namespace {

DeRule build_tanh_sinh(int level) {
  DeRule r;
  const double h = std::ldexp(1.0, -level);
  // x = 1 / (1 + exp(-pi sinh t)), both ends down to ~1e-60
  for (int k = -static_cast<int>(std::ceil(4.0 / h)); k * h <= 4.0; ++k) {
    const double t = k * h;
    const double e = kPi * std::sinh(t);
    const double x = 1.0 / (1.0 + std::exp(-e));
    const double cx = 1.0 / (1.0 + std::exp(e));
    const double w = h * kPi * std::cosh(t) * x * cx;
    if (x == 0.0 || cx == 0.0 || w < 1e-300) continue;
    r.x.push_back(x);
    r.cx.push_back(cx);
    r.w.push_back(w);
  }
  return r;
}

DeRule build_exp_sinh(int level) {
  DeRule r;
  const double h = std::ldexp(1.0, -level);
  // x = exp(pi/2 sinh t), t in [-4.6, 3.2] covers x in [1e-69, ~1e5]
  for (int k = -static_cast<int>(std::ceil(4.6 / h)); k * h <= 3.2; ++k) {
    const double t = k * h;
    const double x = std::exp(0.5 * kPi * std::sinh(t));
    if (x > 2000.0) break;
    r.x.push_back(x);
    r.cx.push_back(x);
    r.w.push_back(h * 0.5 * kPi * std::cosh(t) * x);
  }
  return r;
}

void check_level(int level) {
  if (level < 0 || level > kMaxLevel) throw std::out_of_range("quadrature level");
}

}  // namespace

const DeRule& tanh_sinh_unit(int level) {
  static const auto table = [] {
    std::array<DeRule, kMaxLevel + 1> t;
    for (int l = 0; l <= kMaxLevel; ++l) t[l] = build_tanh_sinh(l);
    return t;
  }();
  check_level(level);
  return table[level];
}

const DeRule& exp_sinh_half(int level) {
  static const auto table = [] {
    std::array<DeRule, kMaxLevel + 1> t;
    for (int l = 0; l <= kMaxLevel; ++l) t[l] = build_exp_sinh(l);
    return t;
  }();
  check_level(level);
  return table[level];
}

}  // namespace siegel::quad
