#pragma once

#include <string>
#include <vector>

#include "siegel/report.hpp"

namespace siegel {

/// Suite names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Runs one invariant suite: specfun, hypergeom, siegel, zeta, residue, fourier, or all.
std::vector<CheckResult> run_suite(const std::string& name);

/// {"suite", "passed", "checks": [...]}.
Json suite_report(const std::string& name, const std::vector<CheckResult>& checks);

/// Deterministic random SPD matrix with eigenvalues in [0.5, 2].
PosDefMatrix random_spd(int m, unsigned seed);

}  // namespace siegel
