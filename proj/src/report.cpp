#include "siegel/report.hpp"

#include <sstream>

#include "siegel/errors.hpp"

namespace siegel {

namespace {

double parse_double(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw DomainError("cannot parse number '" + text + "'");
  }
  while (used < text.size() && std::isspace(static_cast<unsigned char>(text[used]))) ++used;
  if (used != text.size()) throw DomainError("cannot parse number '" + text + "'");
  return v;
}

std::string join_vector(const IntVector& w, char sep) {
  std::ostringstream os;
  for (int i = 0; i < w.size(); ++i) os << (i ? std::string(1, sep) : "") << w(i);
  return os.str();
}

template <class T>
T required(const Json& j, const char* key) {
  if (!j.contains(key)) throw MissingInputError(std::string("JSON field '") + key + "' missing");
  return j.at(key).get<T>();
}

}  // namespace

Json to_json(const PrecisionConfig& p) {
  return {{"abs_tol", p.abs_tol}, {"rel_tol", p.rel_tol}, {"max_terms", p.max_terms},
          {"quadrature_depth", p.quadrature_depth}};
}

PrecisionConfig precision_from_json(const Json& j) {
  PrecisionConfig p;
  p.abs_tol = j.value("abs_tol", p.abs_tol);
  p.rel_tol = j.value("rel_tol", p.rel_tol);
  p.max_terms = j.value("max_terms", p.max_terms);
  p.quadrature_depth = j.value("quadrature_depth", p.quadrature_depth);
  if (!(p.abs_tol > 0) || !(p.rel_tol > 0) || p.max_terms < 1 || p.quadrature_depth < 1) {
    throw DomainError("PrecisionConfig: tolerances and limits must be positive");
  }
  return p;
}

Json to_json(const ResidueReport& r) {
  Json terms = Json::array();
  for (const auto& term : r.terms) {
    std::vector<std::int64_t> w(term.h.w.data(), term.h.w.data() + term.h.w.size());
    terms.push_back({{"t", term.h.t}, {"w", w}, {"coeff", term.coeff}});
  }
  return {{"degree", r.m},         {"A", r.A_term},           {"B", r.B_coeff}, {"terms", terms},
          {"tail_bound", r.tail_bound}, {"trace_bound", r.trace_bound}};
}

ResidueReport residue_report_from_json(const Json& j) {
  ResidueReport r;
  r.m = required<int>(j, "degree");
  r.A_term = required<double>(j, "A");
  r.B_coeff = required<double>(j, "B");
  r.tail_bound = required<double>(j, "tail_bound");
  r.trace_bound = j.value("trace_bound", 0.0);
  for (const auto& term : required<Json>(j, "terms")) {
    const auto w = required<std::vector<std::int64_t>>(term, "w");
    if (static_cast<int>(w.size()) != r.m) throw DomainError("residue report: w has the wrong length");
    ResidueTerm t;
    t.h.t = required<std::int64_t>(term, "t");
    t.h.w = IntVector(r.m);
    for (int i = 0; i < r.m; ++i) t.h.w(i) = w[i];
    t.coeff = required<double>(term, "coeff");
    r.terms.push_back(t);
  }
  return r;
}

std::string residue_report_csv(const ResidueReport& r) {
  std::ostringstream os;
  os.precision(17);
  os << "t,w,coeff\n0,," << r.A_term << "\n";
  for (const auto& term : r.terms) os << term.h.t << "," << join_vector(term.h.w, ' ') << "," << term.coeff << "\n";
  return os.str();
}

std::string residue_report_text(const ResidueReport& r) {
  std::ostringstream os;
  os.precision(15);
  os << "degree      " << r.m << "\n"
     << "A           " << r.A_term << "\n"
     << "B           " << r.B_coeff << "\n"
     << "terms       " << r.terms.size() << "\n"
     << "trace_bound " << r.trace_bound << "\n"
     << "tail_bound  " << r.tail_bound << "\n"
     << "value(x=0)  " << r.value_at(SymMatrix::Zero(r.m, r.m)).real() << "\n";
  return os.str();
}

Json to_json(const CheckResult& c) {
  return {{"name", c.name}, {"tolerance", c.tolerance}, {"measured", c.measured}, {"passed", c.passed}};
}

CheckResult check_from_json(const Json& j) {
  return {required<std::string>(j, "name"), required<double>(j, "tolerance"), required<double>(j, "measured"),
          required<bool>(j, "passed")};
}

Complex parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  if (comma != std::string::npos) return {parse_double(text.substr(0, comma)), parse_double(text.substr(comma + 1))};
  if (text.empty() || text.back() != 'i') return {parse_double(text), 0.0};
  const std::string body = text.substr(0, text.size() - 1);
  // split at the last sign that is not an exponent sign
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      const std::string im = body.substr(k);
      return {parse_double(body.substr(0, k)), im == "+" || im == "-" ? (im == "+" ? 1.0 : -1.0) : parse_double(im)};
    }
  }
  return {0.0, body.empty() || body == "+" ? 1.0 : (body == "-" ? -1.0 : parse_double(body))};
}

}  // namespace siegel
