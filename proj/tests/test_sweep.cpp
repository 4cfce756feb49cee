#include <doctest.h>

#include <cmath>
#include <sstream>

#include "opabs/sweep.hpp"

using namespace opabs;

TEST_SUITE_BEGIN("sweep");

TEST_CASE("run_point populates the default row") {
  Params p;  // scheme A defaults
  const auto row = run_point(p, all_quantities());
  CHECK(row.status == RowStatus::ok);
  for (const auto& c : row.cells) CHECK(c.has_value());
}

TEST_CASE("annihilated points are flagged, not thrown") {
  Params p;
  p.alpha = 0.0;
  p.beta = 1.0;
  p.g = 0.0;
  p.tau = 1.0;
  p.m = 1;
  const auto row = run_point(p, all_quantities());
  CHECK(row.status == RowStatus::annihilated);
  for (const auto& c : row.cells) CHECK(!c.has_value());
}

TEST_CASE("no-signal points are flagged infinite") {
  Params p;
  p.alpha = p.beta = 0.0;
  p.g = 0.0;
  p.m = 0;
  const auto row = run_point(p, {Quantity::delta_phi});
  CHECK(row.status == RowStatus::infinite);
  CHECK(!row.cells[0].has_value());
}

TEST_CASE("grid emission is row-major and complete") {
  SweepSpec spec;
  spec.axes = {{"phi", 0.4, 1.2, 3}, {"tau", 0.3, 0.7, 3}};
  spec.quantities = {Quantity::delta_phi};
  const auto rows = run_sweep(spec);
  REQUIRE(rows.size() == 9);
  CHECK(rows[0].params.phi == doctest::Approx(0.4));
  CHECK(rows[0].params.tau == doctest::Approx(0.3));
  CHECK(rows[1].params.tau == doctest::Approx(0.5));  // inner axis advances
  CHECK(rows[3].params.phi == doctest::Approx(0.8));
  std::ostringstream os;
  write_csv(os, spec, rows);
  const std::string text = os.str();
  CHECK(text.rfind("alpha,beta,g,theta,phi,tau,T,eta,m,v,delta_phi,status\n",
                   0) == 0);
  // one header + nine rows
  int lines = 0;
  for (char ch : text)
    if (ch == '\n') ++lines;
  CHECK(lines == 10);
}

TEST_CASE("identical specs produce byte-identical output") {
  SweepSpec spec;
  spec.axes = {{"T", 0.2, 1.0, 5}};
  spec.fixed.m = 1;
  spec.quantities = {Quantity::delta_phi, Quantity::n_total, Quantity::sql};
  const auto r1 = run_sweep(spec);
  const auto r2 = run_sweep(spec);
  std::ostringstream a, b;
  write_csv(a, spec, r1);
  write_csv(b, spec, r2);
  CHECK(a.str() == b.str());
  std::ostringstream ja, jb;
  write_json(ja, spec, r1);
  write_json(jb, spec, r2);
  CHECK(ja.str() == jb.str());
}

TEST_CASE("flagged cells are null in JSON") {
  SweepSpec spec;
  spec.axes = {{"phi", 0.0, 1.0, 2}};
  spec.fixed.alpha = 0.0;
  spec.fixed.beta = 0.0;
  spec.fixed.g = 0.0;
  spec.quantities = {Quantity::delta_phi};
  const auto rows = run_sweep(spec);
  std::ostringstream os;
  write_json(os, spec, rows);
  CHECK(os.str().find("\"delta_phi\": null") != std::string::npos);
  CHECK(os.str().find("\"status\": \"infinite\"") != std::string::npos);
}

TEST_CASE("spec validation rejects bad axes") {
  SweepSpec spec;
  spec.axes = {{"bogus", 0, 1, 3}};
  CHECK_THROWS_AS(spec.validate(), UsageError);
  spec.axes = {{"phi", 0, 1, 1}};
  CHECK_THROWS_AS(spec.validate(), UsageError);
  spec.axes = {{"phi", 0, 1, 3}, {"phi", 0, 1, 3}};
  CHECK_THROWS_AS(spec.validate(), UsageError);
  spec.axes = {{"m", 0, 3, 4}};
  CHECK_NOTHROW(spec.validate());
  spec.axes = {{"m", 0, 3, 3}};  // non-integer m values
  CHECK_THROWS_AS(run_sweep(spec), UsageError);
}

TEST_CASE("number formatting is 12 significant digits") {
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(2.0) == "2");
  CHECK(format_number(0.707106781186547) == "0.707106781187");
}

TEST_SUITE_END();
