#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "siegel/residue.hpp"
#include "siegel/specfun.hpp"
#include "siegel/symcore.hpp"

namespace siegel {

using Json = nlohmann::json;

/// {"abs_tol", "rel_tol", "max_terms", "quadrature_depth"}; missing keys keep defaults.
Json to_json(const PrecisionConfig& p);
PrecisionConfig precision_from_json(const Json& j);

/// {"degree", "A", "B", "terms": [{"t", "w", "coeff"}], "tail_bound", "trace_bound"}.
Json to_json(const ResidueReport& r);
ResidueReport residue_report_from_json(const Json& j);

/// Header t,w,coeff with w as space-separated entries; first row is the constant term (t = 0).
std::string residue_report_csv(const ResidueReport& r);
std::string residue_report_text(const ResidueReport& r);

/// One verification check.
struct CheckResult {
  std::string name;
  double tolerance = 0.0;
  double measured = 0.0;
  bool passed = false;
};

Json to_json(const CheckResult& c);
CheckResult check_from_json(const Json& j);

/// "2.5", "2.5+0.5i", "2.5,0.5".
Complex parse_complex(const std::string& text);

}  // namespace siegel
