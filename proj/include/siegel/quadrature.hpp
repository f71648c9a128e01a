#pragma once

#include <cmath>
#include <complex>
#include <vector>

namespace siegel::quad {

/// Nodes of a double-exponential rule at step h = 2^{-level}.
/// For the unit interval, x and cx = 1 - x are both stored to full relative precision.
struct DeRule {
  std::vector<double> x;
  std::vector<double> cx;
  std::vector<double> w;
};

/// tanh-sinh on [0, 1].
const DeRule& tanh_sinh_unit(int level);
/// exp-sinh on (0, inf); cx is unused (copy of x).
const DeRule& exp_sinh_half(int level);

inline constexpr int kMaxLevel = 9;

template <class T>
struct Result {
  T value{};
  double error = 0.0;
  int level = 0;
};

/// Runs `at_level(L)` for L = min_level, ... until two successive values agree to
/// max(abs_tol, rel_tol |value|). The error reported is the last difference.
template <class F>
auto refine(F&& at_level, double abs_tol, double rel_tol, int min_level = 3, int max_level = 7)
    -> Result<decltype(at_level(0))> {
  using T = decltype(at_level(0));
  Result<T> res;
  T prev = at_level(min_level - 1);
  for (int level = min_level; level <= max_level; ++level) {
    T cur = at_level(level);
    const double diff = std::abs(cur - prev);
    res.value = cur;
    res.error = diff;
    res.level = level;
    if (diff <= std::max(abs_tol, rel_tol * std::abs(cur))) break;
    prev = cur;
  }
  return res;
}

/// int_0^1 f(x, 1-x) dx at a fixed level.
template <class F>
auto unit_sum(const DeRule& r, F&& f) -> decltype(f(0.5, 0.5)) {
  decltype(f(0.5, 0.5)) acc{};
  for (std::size_t i = 0; i < r.x.size(); ++i) acc += r.w[i] * f(r.x[i], r.cx[i]);
  return acc;
}

/// int_0^inf f(x) dx at a fixed level.
template <class F>
auto half_line_sum(const DeRule& r, F&& f) -> decltype(f(1.0)) {
  decltype(f(1.0)) acc{};
  for (std::size_t i = 0; i < r.x.size(); ++i) acc += r.w[i] * f(r.x[i]);
  return acc;
}

template <class F>
auto integrate_unit(F&& f, double abs_tol, double rel_tol) {
  return refine([&](int level) { return unit_sum(tanh_sinh_unit(level), f); }, abs_tol, rel_tol, 3, kMaxLevel);
}

template <class F>
auto integrate_half_line(F&& f, double abs_tol, double rel_tol) {
  return refine([&](int level) { return half_line_sum(exp_sinh_half(level), f); }, abs_tol, rel_tol, 3,
                kMaxLevel);
}

}  // namespace siegel::quad
