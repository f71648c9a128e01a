#pragma once

#include <vector>

#include "siegel/specfun.hpp"
#include "siegel/symcore.hpp"

namespace siegel {

/// d(h) = (-1)^{[lambda/2]} 2^{-delta((lambda-1)/2)} det(2h) for full-rank h of size lambda.
struct DiscriminantData {
  int lambda = 0;
  std::int64_t d = 0;
};

DiscriminantData discriminant(const HalfIntegralForm& h);

/// S_nu(0_nu, s).
Complex siegel_rank0(int nu, Complex s);

/// S_1(h, s) = zeta(s)^{-1} sigma_{1-s}(|h|), h != 0.
Complex siegel_rank1(std::int64_t h, Complex s);

/// Maximal r with h[u] = diag(h*, 0_r) mod p (exhaustive over projective points, lambda <= 2).
int zero_block_size(const HalfIntegralForm& h, std::int64_t p);

/// Local factor a_p(h, s) from the case table; h full rank lambda in {1, 2}.
Complex local_density_ap(const HalfIntegralForm& h, std::int64_t p, Complex s);

/// Upper-triangular representatives d = [[a, b], [0, c]] (0 <= b < c) of A(h), lambda = 2;
/// lambda = 1 gives 1x1 positive d with h/d^2 integral.
std::vector<IntMatrix> divisor_classes(const HalfIntegralForm& h);

/// S_lambda(h, s) for full-rank h, lambda in {1, 2}, via A(h), Ŝ and the a_p.
Complex siegel_full_rank(const HalfIntegralForm& h, Complex s);

/// S_2(h, s) for nondegenerate 2x2 h.
Complex siegel_rank2(const HalfIntegralForm& h, Complex s);

/// S_nu(diag(h, 0_{nu-lambda}), s) for full-rank h of size lambda in {0, 1, 2}.
/// lambda = 0 is requested by passing an empty (0x0) form.
Complex siegel_reduce(const HalfIntegralForm& h, int nu, Complex s);

/// S_nu(h, s) for any h of size nu <= 2 (rank found exactly, reduced to diag(h0, 0)).
Complex siegel_series(const HalfIntegralForm& h, Complex s);

std::vector<std::int64_t> prime_divisors(std::int64_t n);

}  // namespace siegel
