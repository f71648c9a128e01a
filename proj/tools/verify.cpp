#include <cstdio>
#include <iostream>

#include "commands.hpp"
#include "siegel/verify.hpp"

namespace siegel::cli {

int cmd_verify(const RunConfig& cfg) {
  const auto checks = run_suite(cfg.suite);
  const Json report = suite_report(cfg.suite, checks);
  if (cfg.format == "json") {
    std::cout << report.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    std::printf("name,tolerance,measured,passed\n");
    for (const auto& c : checks) std::printf("%s,%.3g,%.3g,%d\n", c.name.c_str(), c.tolerance, c.measured, c.passed);
  } else {
    for (const auto& c : checks) {
      std::printf("%-4s %-45s measured %.3g (tol %.3g)\n", c.passed ? "PASS" : "FAIL", c.name.c_str(), c.measured,
                  c.tolerance);
    }
  }
  return report.at("passed").get<bool>() ? 0 : 1;
}

}  // namespace siegel::cli
