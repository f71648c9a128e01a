#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "siegel/errors.hpp"
#include "siegel/fourier.hpp"
#include "siegel/oracle.hpp"
#include "siegel/residue.hpp"
#include "siegel/verify.hpp"
#include "siegel/zetalattice.hpp"

namespace siegel::cli {

namespace {

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

void load_config(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw MissingInputError("cannot open config file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw DomainError(std::string("config file: ") + e.what());
  }
  cfg.degree = j.value("degree", cfg.degree);
  cfg.y = j.value("y", cfg.y);
  cfg.x = j.value("x", cfg.x);
  cfg.s = j.value("s", cfg.s);
  cfg.trace_bound = j.value("trace_bound", cfg.trace_bound);
  cfg.height_bound = j.value("height_bound", cfg.height_bound);
  cfg.path = j.value("path", cfg.path);
  cfg.format = j.value("format", cfg.format);
  if (j.contains("precision")) cfg.precision = precision_from_json(j.at("precision"));
  if (j.contains("km_constant_term")) cfg.km_constant_term = j.at("km_constant_term").get<double>();
}

}  // namespace

SymMatrix y_of(const RunConfig& cfg) {
  if (!cfg.y.empty()) return parse_matrix(cfg.y);
  return cfg.z_im * SymMatrix::Identity(cfg.degree, cfg.degree);
}

SymMatrix x_of(const RunConfig& cfg) {
  if (!cfg.x.empty()) return parse_matrix(cfg.x);
  return SymMatrix::Zero(cfg.degree, cfg.degree);
}

int cmd_residue(const RunConfig& cfg) {
  if (cfg.degree != 2 && cfg.degree != 3) throw DomainError("residue: degree must be 2 or 3");
  const UpperHalfPoint z(x_of(cfg), PosDefMatrix(y_of(cfg)));
  if (z.size() != cfg.degree) throw DomainError("residue: matrix size does not match --degree");
  ResidueOptions opt;
  opt.km_constant = cfg.km_constant_term;
  const ResidueReport rep = residue_fourier_series(z, cfg.trace_bound, opt);
  const Complex value = rep.value_at(z.x);
  if (cfg.format == "json") {
    Json j = to_json(rep);
    j["value_at_x"] = value.real();
    std::cout << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    std::cout << residue_report_csv(rep);
  } else {
    std::cout << residue_report_text(rep);
    std::printf("value(x)    %.15g +- %.3g\n", value.real(), rep.tail_bound);
  }
  return 0;
}

int cmd_eval(const RunConfig& cfg) {
  if (cfg.degree != 1 && cfg.degree != 2) throw DomainError("eval: degree must be 1 or 2");
  const UpperHalfPoint z(x_of(cfg), PosDefMatrix(y_of(cfg)));
  if (z.size() != cfg.degree) throw DomainError("eval: matrix size does not match --degree");
  const Complex s = parse_complex(cfg.s);
  Complex value;
  double error = 0.0;
  if (cfg.path == "fourier") {
    const FourierExpansion e = fourier_expansion(z.y, s, cfg.trace_bound, cfg.precision);
    value = e.value_at(z.x);
    error = e.last_shell;
  } else if (cfg.path == "direct") {
    DirectConfig dc;
    if (cfg.height_bound > 0) dc.max_denominator = cfg.height_bound;
    const DirectValue d = eisenstein_direct(z, s, dc);
    value = d.value;
    error = d.tail_estimate;
  } else {
    throw DomainError("eval: --path must be fourier or direct");
  }
  Json j = {{"degree", cfg.degree}, {"s", complex_json(s)}, {"path", cfg.path}, {"value", complex_json(value)},
            {"error_estimate", error}};
  if (cfg.degree == 1) {
    // E(z, s) = zeta_Q(s) / zeta(2s), Q = |c z + d|^2 / y
    const double xv = z.x(0, 0), yv = z.y(0, 0);
    SymMatrix q(2, 2);
    q << (xv * xv + yv * yv) / yv, xv / yv, xv / yv, 1.0 / yv;
    const Complex identity = epstein_zeta(PosDefMatrix(q), s, cfg.precision) / riemann_zeta(2.0 * s);
    j["epstein_identity"] = complex_json(identity);
    j["epstein_difference"] = std::abs(identity - value);
  }
  if (cfg.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    std::printf("degree,s_re,s_im,path,value_re,value_im,error_estimate\n%d,%.17g,%.17g,%s,%.17g,%.17g,%.3g\n",
                cfg.degree, s.real(), s.imag(), cfg.path.c_str(), value.real(), value.imag(), error);
  } else {
    std::printf("E(z, s) = %.15g %+.15gi  +- %.3g  (%s)\n", value.real(), value.imag(), error, cfg.path.c_str());
    if (j.contains("epstein_identity")) {
      std::printf("epstein identity difference %.3g\n", j["epstein_difference"].get<double>());
    }
  }
  return 0;
}

}  // namespace siegel::cli

int main(int argc, char** argv) {
  using namespace siegel;
  using namespace siegel::cli;
  RunConfig cfg;
  CLI::App app{"Siegel Eisenstein series residues and evaluation"};
  app.require_subcommand(1);
  std::string config_path;
  std::optional<double> km;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON file with RunConfig fields; flags override it");
    sub->add_option("--degree", cfg.degree, "degree m");
    sub->add_option("--y", cfg.y, "imaginary part, \"a,b;c,d\"");
    sub->add_option("--x", cfg.x, "real part, \"a,b;c,d\"");
    sub->add_option("--format", cfg.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  };
  auto* residue = app.add_subcommand("residue", "residue at s = m/2 as a Fourier series");
  add_common(residue);
  residue->add_option("--trace-bound", cfg.trace_bound, "truncation in the trace of h");
  residue->add_option("--km-constant", km, "Laurent constant term C_{m-1}^(m)(y), required for m = 3");
  auto* eval = app.add_subcommand("eval", "evaluate E_0^(m)(z, s), m <= 2");
  add_common(eval);
  eval->add_option("--s", cfg.s, "complex s, \"re\" or \"re+imi\"");
  eval->add_option("--z-im", cfg.z_im, "y = z_im times identity when --y is absent");
  eval->add_option("--path", cfg.path, "fourier or direct")->check(CLI::IsMember({"fourier", "direct"}));
  eval->add_option("--trace-bound", cfg.trace_bound, "Fourier truncation");
  eval->add_option("--height-bound", cfg.height_bound, "direct path: largest exact denominator");
  auto* verify = app.add_subcommand("verify", "run invariant suites");
  verify->add_option("--suite", cfg.suite, "suite name")->check(CLI::IsMember(suite_names()));
  verify->add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "csv", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    if (!config_path.empty()) {
      // flags win: remember them, load the file, then restore
      RunConfig flags = cfg;
      load_config(config_path, cfg);
      for (const auto* sub : {residue, eval}) {
        if (!sub->parsed()) continue;
        if (sub->count("--degree")) cfg.degree = flags.degree;
        if (sub->count("--y")) cfg.y = flags.y;
        if (sub->count("--x")) cfg.x = flags.x;
        if (sub->count("--format")) cfg.format = flags.format;
        if (sub->count("--trace-bound")) cfg.trace_bound = flags.trace_bound;
      }
      if (eval->parsed()) {
        if (eval->count("--s")) cfg.s = flags.s;
        if (eval->count("--path")) cfg.path = flags.path;
        if (eval->count("--height-bound")) cfg.height_bound = flags.height_bound;
      }
    }
    if (km) cfg.km_constant_term = km;
    if (residue->parsed()) return cmd_residue(cfg);
    if (eval->parsed()) return cmd_eval(cfg);
    return cmd_verify(cfg);
  } catch (const MissingInputError& e) {
    std::cerr << "missing input: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const PoleError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
