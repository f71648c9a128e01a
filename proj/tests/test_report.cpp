#include <doctest.h>

#include <sstream>

#include "siegel/errors.hpp"
#include "siegel/report.hpp"
#include "siegel/residue.hpp"
#include "siegel/verify.hpp"

using namespace siegel;

TEST_CASE("precision config round trip") {
  PrecisionConfig p;
  p.abs_tol = 1e-11;
  p.rel_tol = 3e-9;
  p.max_terms = 12345;
  p.quadrature_depth = 9;
  const PrecisionConfig q = precision_from_json(Json::parse(to_json(p).dump()));
  CHECK(q.abs_tol == p.abs_tol);
  CHECK(q.rel_tol == p.rel_tol);
  CHECK(q.max_terms == p.max_terms);
  CHECK(q.quadrature_depth == p.quadrature_depth);
  // missing keys keep defaults
  const PrecisionConfig d = precision_from_json(Json::parse(R"({"rel_tol": 1e-6})"));
  CHECK(d.rel_tol == 1e-6);
  CHECK(d.abs_tol == PrecisionConfig{}.abs_tol);
  CHECK_THROWS_AS(precision_from_json(Json::parse(R"({"rel_tol": -1})")), DomainError);
}

TEST_CASE("residue report round trip") {
  const UpperHalfPoint z(SymMatrix::Zero(2, 2), PosDefMatrix(parse_matrix("1.3,0.4;0.4,0.8")));
  const ResidueReport r = residue_fourier_series(z, 5.0);
  const ResidueReport back = residue_report_from_json(Json::parse(to_json(r).dump()));
  CHECK(back.m == r.m);
  CHECK(back.A_term == r.A_term);
  CHECK(back.B_coeff == r.B_coeff);
  CHECK(back.trace_bound == r.trace_bound);
  CHECK(back.tail_bound == r.tail_bound);
  REQUIRE(back.terms.size() == r.terms.size());
  for (std::size_t i = 0; i < r.terms.size(); ++i) {
    CHECK(back.terms[i].h.t == r.terms[i].h.t);
    CHECK(back.terms[i].h.w == r.terms[i].h.w);
    CHECK(back.terms[i].coeff == r.terms[i].coeff);
  }
  SymMatrix x(2, 2);
  x << 0.1, 0.3, 0.3, -0.2;
  CHECK(back.value_at(x) == r.value_at(x));
  CHECK_THROWS_AS(residue_report_from_json(Json::parse(R"({"degree": 2})")), MissingInputError);
}

TEST_CASE("residue report csv") {
  const UpperHalfPoint z(SymMatrix::Zero(2, 2), PosDefMatrix(SymMatrix::Identity(2, 2)));
  const ResidueReport r = residue_fourier_series(z, 3.0);
  std::istringstream in(residue_report_csv(r));
  std::string line;
  std::getline(in, line);
  CHECK(line == "t,w,coeff");
  std::getline(in, line);
  CHECK(line.rfind("0,", 0) == 0);
  std::size_t rows = 0;
  while (std::getline(in, line))
    if (!line.empty()) ++rows;
  CHECK(rows == r.terms.size());
  CHECK(residue_report_text(r).find("B") != std::string::npos);
}

TEST_CASE("check result round trip") {
  const CheckResult c{"zeta_2", 1e-14, 2.2e-16, true};
  const CheckResult d = check_from_json(Json::parse(to_json(c).dump()));
  CHECK(d.name == c.name);
  CHECK(d.tolerance == c.tolerance);
  CHECK(d.measured == c.measured);
  CHECK(d.passed == c.passed);
  const Json s = suite_report("specfun", run_suite("specfun"));
  CHECK(s.at("passed").get<bool>());
  CHECK(s.at("checks").size() == 5);
  CHECK_THROWS_AS(run_suite("nope"), DomainError);
}

TEST_CASE("complex parsing") {
  CHECK(parse_complex("2.5") == Complex(2.5, 0.0));
  CHECK(parse_complex("2.5+0.5i") == Complex(2.5, 0.5));
  CHECK(parse_complex("2.5-0.5i") == Complex(2.5, -0.5));
  CHECK(parse_complex("2.5,0.5") == Complex(2.5, 0.5));
  CHECK(parse_complex("1e-1") == Complex(0.1, 0.0));
  CHECK_THROWS_AS(parse_complex("abc"), DomainError);
  CHECK_THROWS_AS(parse_complex(""), DomainError);
}
