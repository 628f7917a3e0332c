#include <doctest.h>

#include <json.hpp>
#include <string>
#include <vector>

#include "rds/construct.hpp"
#include "rds/errors.hpp"
#include "rds/identities.hpp"
#include "rds/recurrence.hpp"
#include "rds/render.hpp"

using namespace rds;

TEST_CASE("format names") {
  CHECK(parse_format("text") == OutputFormat::text);
  CHECK(parse_format("json") == OutputFormat::json);
  CHECK(parse_format("csv") == OutputFormat::csv);
  CHECK(parse_format("latex") == OutputFormat::latex);
  CHECK_THROWS_AS(parse_format("xml"), InvalidRange);
}

TEST_CASE("polynomial rendering") {
  const RdPolynomial p3 = rdp_polynomial(3);
  CHECK(render_polynomial(p3, OutputFormat::text) == "3x + x^3\n");
  CHECK(render_polynomial(p3, OutputFormat::latex) ==
        "D_r(C_{3},x) = 3x + x^{3}\n");
  CHECK(render_polynomial(p3, OutputFormat::json) ==
        "{\"n\":3,\"coeffs\":[[1,\"3\"],[3,\"1\"]]}\n");

  const RdPolynomial p7 = rdp_polynomial(7);
  CHECK(render_polynomial(p7, OutputFormat::text) == "7x^3 + 7x^5 + x^7\n");
  CHECK(render_polynomial(p7, OutputFormat::json) ==
        "{\"n\":7,\"coeffs\":[[3,\"7\"],[5,\"7\"],[7,\"1\"]]}\n");

  const RdPolynomial p4 = rdp_polynomial(4);
  CHECK(render_polynomial(p4, OutputFormat::csv) == "n,i,count\n4,2,4\n4,4,1\n");

  const RdPolynomial zero{9, {}};
  CHECK(render_polynomial(zero, OutputFormat::text) == "0\n");
}

TEST_CASE("count rendering") {
  CHECK(render_count(9, 5, "recurrence", 18, OutputFormat::text) == "18\n");
  CHECK(render_count(9, 5, "recurrence", 18, OutputFormat::json) ==
        "{\"n\":9,\"i\":5,\"method\":\"recurrence\",\"count\":\"18\"}\n");
  CHECK(render_count(9, 5, "bruteforce", 18, OutputFormat::csv) ==
        "n,i,count\n9,5,18\n");
  CHECK(render_count(9, 5, "genfunc", 18, OutputFormat::latex) ==
        "d_r(C_{9},5) = 18\n");
}

TEST_CASE("triangle rendering") {
  std::vector<CoefficientRow> rows;
  for (int n = 1; n <= 4; ++n) rows.push_back(rdp_row(n));

  CHECK(render_triangle(rows, OutputFormat::text) ==
        "1: 1\n"
        "2: 0 1\n"
        "3: 3 0 1\n"
        "4: 0 4 0 1\n");

  CHECK(render_triangle(rows, OutputFormat::csv) ==
        "n,i,count\n"
        "1,1,1\n"
        "2,2,1\n"
        "3,1,3\n"
        "3,3,1\n"
        "4,2,4\n"
        "4,4,1\n");

  const std::string latex = render_triangle(rows, OutputFormat::latex);
  CHECK(latex.find("\\begin{tabular}{r|rrrr}") != std::string::npos);
  CHECK(latex.find("$n \\backslash i$ & 1 & 2 & 3 & 4 \\\\") !=
        std::string::npos);
  CHECK(latex.find("3 & 3 & 0 & 1 &  \\\\") != std::string::npos);
  CHECK(latex.find("4 & 0 & 4 & 0 & 1 \\\\") != std::string::npos);
  CHECK(latex.find("\\end{tabular}") != std::string::npos);

  const auto j = nlohmann::json::parse(render_triangle(rows, OutputFormat::json));
  REQUIRE(j["rows"].size() == 4);
  CHECK(j["rows"][2]["n"] == 3);
  CHECK(j["rows"][2]["counts"] ==
        nlohmann::json::array({"3", "0", "1"}));
}

TEST_CASE("family rendering") {
  const RdsFamily fam = construct_family(4, 2);
  CHECK(render_family(fam, OutputFormat::text) ==
        "{1,2}\n{1,4}\n{2,3}\n{3,4}\n");
  CHECK(render_family(fam, OutputFormat::json) ==
        "{\"n\":4,\"i\":2,\"count\":4,\"sets\":[[1,2],[1,4],[2,3],[3,4]]}\n");
  CHECK_THROWS_AS(render_family(fam, OutputFormat::csv), InvalidRange);
  CHECK_THROWS_AS(render_family(fam, OutputFormat::latex), InvalidRange);

  const RdsFamily empty{5, 1, {}};
  CHECK(render_family(empty, OutputFormat::text).empty());
}

TEST_CASE("report rendering") {
  CheckReport pass;
  pass.name = "demo";
  pass.range = "orders 3..5";
  CHECK(render_reports("demo", {pass}, OutputFormat::text) ==
        "PASS demo: orders 3..5\n");

  CheckReport fail = pass;
  fail.record(12, 6, "41", "40 (recurrence)");
  CHECK(render_reports("demo", {fail}, OutputFormat::text) ==
        "FAIL demo: orders 3..5: 1 violation(s)\n"
        "  n=12 i=6: expected 41, got 40 (recurrence)\n");

  CheckReport many = pass;
  for (int k = 0; k < 22; ++k) many.record(k, 1, "a", "b");
  const std::string text = render_reports("demo", {many}, OutputFormat::text);
  CHECK(text.find("22 violation(s)") != std::string::npos);
  CHECK(text.find("  ... 2 more\n") != std::string::npos);

  const auto j = nlohmann::json::parse(
      render_reports("all", {pass, fail}, OutputFormat::json));
  CHECK(j["suite"] == "all");
  REQUIRE(j["reports"].size() == 2);
  CHECK(j["reports"][0]["passed"] == true);
  CHECK(j["reports"][0]["violations"] == 0);
  CHECK(j["reports"][1]["passed"] == false);
  CHECK(j["reports"][1]["counterexamples"][0]["n"] == 12);
  CHECK(j["reports"][1]["counterexamples"][0]["expected"] == "41");

  CHECK_THROWS_AS(render_reports("demo", {pass}, OutputFormat::csv),
                  InvalidRange);
}
