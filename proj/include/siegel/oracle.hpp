#pragma once

#include <set>
#include <vector>

#include "siegel/residue.hpp"
#include "siegel/specfun.hpp"
#include "siegel/symcore.hpp"

namespace siegel {

/// Coprime symmetric pair (c, d); canonical is the row Hermite normal form of (c d).
struct CosetPair {
  IntMatrix c;
  IntMatrix d;

  IntMatrix canonical() const;
};

/// All classes with max |entry| <= H of some representative, each once, m in {1, 2}.
std::vector<CosetPair> coset_enumerate(int m, int H);

/// Truncation knobs of the direct coset sum.
struct DirectConfig {
  /// rank 2: exact lattice sums for denominators n(T) <= max_denominator
  int max_denominator = 20;
  /// rank 2: smooth cutoff radius (in the y-normalized Frobenius norm) and width
  double cutoff_radius = 14.0;
  double cutoff_width = 3.0;
  /// rank 1: exact c-sums up to this c for small Im z[w]
  int max_c = 24;
};

struct DirectValue {
  Complex value;
  double tail_estimate = 0.0;
};

/// det(y)^s sum |det(cz + d)|^{-2s} over Gamma_inf \ Gamma, m in {1, 2}, Re s > (m+1)/2 + 1/2.
DirectValue eisenstein_direct(const UpperHalfPoint& z, Complex s, const DirectConfig& cfg = {});

/// Literal sum over coset_enumerate(m, H); slow, for cross-checks.
Complex eisenstein_direct_naive(const UpperHalfPoint& z, Complex s, int H);

/// sum_{c >= 1} sum_{gcd(c, d) = 1} |c tau + d|^{-2s}.
Complex degree1_coprime_sum(Complex tau, Complex s, int max_c = 24);

/// Lim (s-1) E_0^(1)(z, s) as s -> 1+ at z = i and z = 1/4 + 2i.
struct Degree1Residue {
  double at_i = 0.0;
  double at_other = 0.0;
};
Degree1Residue degree1_residue_check();

/// Nonzero rank-one h (as h itself) with |entries| <= bound, m = 2.
std::set<HalfIntegralForm> brute_rank1_set(int m, int bound);
/// Largest l with h / l half-integral, by scanning.
std::int64_t brute_content(const HalfIntegralForm& h);
/// sum_{n <= N} n^{-s} sum_{a mod n, (a, n) = 1} e(h a / n).
Complex brute_siegel1(std::int64_t h, Complex s, int N);

}  // namespace siegel
