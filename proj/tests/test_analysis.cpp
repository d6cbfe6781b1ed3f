#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <string>
#include <tuple>

#include "tcbetti/analysis.hpp"
#include "tcbetti/error.hpp"

using namespace tcb;

namespace {

std::string scan_csv(int max, int jobs, ScanSummary* summary = nullptr) {
  auto config = scan_config_up_to(max);
  config.jobs = jobs;
  config.run_oracle = true;
  std::ostringstream os;
  auto s = run_scan(config, [&](const InstanceReport& r) { os << csv_row(r) << '\n'; });
  if (summary) *summary = s;
  return os.str();
}

}  // namespace

TEST_CASE("single instance report") {
  InstanceOptions o;
  o.oracle = true;
  o.resolutions = true;
  auto r = analyze_instance({2, 4, 4, 2, 5}, o);
  CHECK(r.n == std::array<long long, 4>{33, 23, 28, 26});
  CHECK(r.tag.name() == "N2_LT");
  CHECK(r.cm);
  CHECK(r.pseudo_symmetric);
  CHECK(r.oracle == BettiSequence{{1, 5, 7, 3}});
  CHECK(r.resolution_verdict == "exact");
  CHECK(r.resolution_betti == BettiSequence{{1, 5, 7, 3}});
  CHECK(r.standard_basis_ok == true);
  CHECK(r.projection_ok == true);
  CHECK(r.mismatches.empty());
  CHECK_THROWS_AS(analyze_instance({0, 3, 2, 2, 2}, o), Error);
}

TEST_CASE("csv row has the fixed columns") {
  auto r = analyze_instance({1, 3, 2, 2, 2}, {});
  std::string header = csv_header();
  CHECK(header ==
        "alpha21,alpha1,alpha2,alpha3,alpha4,n1,n2,n3,n4,mult_index,case,cm,"
        "homog_criterion,homog_apery,beta0,beta1,beta2,beta3,oracle_beta0,"
        "oracle_beta1,oracle_beta2,oracle_beta3,resolution_verdict");
  auto row = csv_row(r);
  auto commas = [](const std::string& s) {
    return std::count(s.begin(), s.end(), ',');
  };
  CHECK(commas(row) == commas(header));
  CHECK(row.rfind("1,3,2,2,2,5,7,6,9,1,HOMOGENEOUS,", 0) == 0);
}

TEST_CASE("table fixture parsing") {
  auto rows = parse_table1_fixture("# comment\n2,5,3,2,2,7,12,13,22,1,5,6,2\n");
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].beta == BettiSequence{{1, 5, 6, 2}});
  try {
    parse_table1_fixture("2,5,3,2,2,7,12,13,22,1,5,6\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
  }
  CHECK_THROWS_AS(parse_table1_fixture("2,5,x,2,2,7,12,13,22,1,5,6,2\n"), ParseError);
}

TEST_CASE("a tampered expected value is reported") {
  auto expected = parse_table1_fixture("2,5,3,2,2,7,12,13,22,1,6,6,2\n");
  auto t = run_table1(expected);
  CHECK_FALSE(t.all_match());
  REQUIRE(t.rows.size() == 1);
  CHECK_FALSE(t.rows[0].diffs.empty());
  auto tampered_n = parse_table1_fixture("2,5,3,2,2,7,12,14,22,1,5,6,2\n");
  CHECK_FALSE(run_table1(tampered_n).all_match());
}

TEST_CASE("reference table outside the common-factor row") {
  auto t = run_table1(table1_expected());
  REQUIRE(t.rows.size() == 8);
  for (std::size_t i = 0; i < 8; ++i) {
    CAPTURE(i + 1);
    if (i == 3) {
      // n = (25,20,35,30): the semigroup ring gives (1,6,8,3).
      CHECK(t.rows[i].report.oracle == BettiSequence{{1, 6, 8, 3}});
      CHECK(t.rows[i].report.f_oracle == BettiSequence{{1, 6, 9, 4}});
      CHECK_FALSE(t.rows[i].diffs.empty());
      continue;
    }
    CHECK(t.rows[i].diffs.empty());
  }
}

TEST_CASE("scan output is independent of the worker count") {
  ScanSummary one, many;
  auto a = scan_csv(4, 1, &one);
  auto b = scan_csv(4, 4, &many);
  CHECK(a == b);
  CHECK(one.processed == one.valid);
  CHECK(one.oracle_disagree == 0);
  CHECK(one.homog_disagree == 0);
  CHECK(one.clean());
  CHECK(format_summary(one, OutputFormat::Text) == format_summary(many, OutputFormat::Text));
}

TEST_CASE("scan tuples and skips") {
  ScanSkips skips;
  auto tuples = scan_tuples(scan_config_up_to(5), &skips);
  CHECK(skips.considered == 384);
  CHECK(static_cast<long long>(tuples.size()) ==
        skips.considered - skips.common_factor - skips.not_minimal);
  for (std::size_t i = 1; i < tuples.size(); ++i) {
    const auto& a = tuples[i - 1];
    const auto& b = tuples[i];
    CHECK(std::tie(a.alpha21, a.alpha1, a.alpha2, a.alpha3, a.alpha4) <
          std::tie(b.alpha21, b.alpha1, b.alpha2, b.alpha3, b.alpha4));
  }
}

TEST_CASE("scan cancellation and validation") {
  auto config = scan_config_up_to(4);
  long long emitted = 0;
  auto s = run_scan(config, [&](const InstanceReport&) { ++emitted; },
                    [] { return true; });
  CHECK(s.interrupted);
  CHECK(emitted == s.processed);
  CHECK(s.processed < s.valid);

  config.jobs = 0;
  CHECK_THROWS_AS(validate_scan_config(config), Error);
  CHECK_THROWS_AS(validate_scan_config(scan_config_up_to(9)), Error);
  auto inverted = scan_config_up_to(4);
  inverted.ranges[2] = {4, 3};
  CHECK_THROWS_AS(validate_scan_config(inverted), Error);
}

TEST_CASE("audit of chain text") {
  auto a = audit_chain_text(
      "vars 3\nmatrix 1x3\nx1; x2; x3\nmatrix 3x3\n-x2; -x3; 0\nx1; 0; -x3\n"
      "0; x1; x2\nmatrix 3x1\nx3\n-x2\nx1\n");
  CHECK(a.audit.be.verdict == "exact");
  CHECK(format_audit(a, OutputFormat::Text).find("verdict: exact") != std::string::npos);
}
