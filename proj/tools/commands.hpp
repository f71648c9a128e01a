#pragma once

#include <optional>
#include <string>

#include "siegel/report.hpp"

namespace siegel::cli {

/// Parsed command line; a --config JSON file fills fields not given as flags.
struct RunConfig {
  std::string command;
  int degree = 2;
  std::string y;
  std::string x;
  double z_im = 1.0;
  std::string s = "2.5";
  double trace_bound = 8.0;
  int height_bound = 0;
  std::string path = "fourier";
  PrecisionConfig precision;
  std::optional<double> km_constant_term;
  std::string format = "text";
  std::string suite = "all";
};

/// Each command prints its result and returns the process exit code.
int cmd_residue(const RunConfig& cfg);
int cmd_eval(const RunConfig& cfg);
int cmd_verify(const RunConfig& cfg);

/// y from --y, else z_im times the identity; x from --x, else zero.
SymMatrix y_of(const RunConfig& cfg);
SymMatrix x_of(const RunConfig& cfg);

}  // namespace siegel::cli
