// rds-enum: exact enumeration of restrained dominating sets of cycles.
//
// Exit codes: 0 success, 1 failed verification/check, 2 invalid arguments,
// 3 request out of a method's reach (enumeration limit, series start,
// construction budget).

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "rds/construct.hpp"
#include "rds/errors.hpp"
#include "rds/genfunc.hpp"
#include "rds/graph.hpp"
#include "rds/identities.hpp"
#include "rds/recurrence.hpp"
#include "rds/render.hpp"

namespace {

int fail(const std::exception& e, int code) {
  std::cerr << "error: " << e.what() << "\n";
  return code;
}

int resolve_brute_limit(bool flag_given, int flag_value) {
  if (flag_given) return flag_value;
  if (const char* env = std::getenv("RDS_BRUTE_LIMIT")) {
    try {
      return std::stoi(env);
    } catch (...) {
      throw rds::InvalidRange(std::string("RDS_BRUTE_LIMIT must be an integer, got: ") + env);
    }
  }
  return rds::kDefaultBruteForceLimit;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact counts, polynomials and explicit families of restrained dominating sets of cycles"};
  app.require_subcommand(1);

  const std::vector<std::string> kAllFormats = {"text", "json", "csv", "latex"};
  const std::vector<std::string> kPlainFormats = {"text", "json"};

  int poly_n = 0;
  std::string poly_format = "text";
  auto* poly_cmd = app.add_subcommand("poly", "print the restrained domination polynomial of the cycle of order n");
  poly_cmd->add_option("n", poly_n, "cycle order")->required();
  poly_cmd->add_option("--format", poly_format, "output format")
      ->capture_default_str()
      ->check(CLI::IsMember(kAllFormats));

  int count_n = 0, count_i = 0, count_brute_limit = rds::kDefaultBruteForceLimit;
  std::string count_method = "recurrence", count_format = "text";
  auto* count_cmd = app.add_subcommand("count", "count the restrained dominating sets of order n with i vertices");
  count_cmd->add_option("n", count_n, "cycle order")->required();
  count_cmd->add_option("i", count_i, "set cardinality")->required();
  count_cmd->add_option("--method", count_method, "computation method")
      ->capture_default_str()
      ->check(CLI::IsMember({"recurrence", "genfunc", "bruteforce", "construct"}));
  auto* brute_limit_opt =
      count_cmd->add_option("--brute-limit", count_brute_limit,
                            "largest order the brute-force method accepts (overrides RDS_BRUTE_LIMIT)");
  count_cmd->add_option("--format", count_format, "output format")
      ->capture_default_str()
      ->check(CLI::IsMember(kAllFormats));

  int table_n = 0;
  std::string table_format = "text";
  auto* table_cmd = app.add_subcommand("table", "print the full triangle of counts for orders 1..n");
  table_cmd->add_option("n", table_n, "largest cycle order")->required();
  table_cmd->add_option("--format", table_format, "output format")
      ->capture_default_str()
      ->check(CLI::IsMember(kAllFormats));

  int sets_n = 0, sets_i = 0;
  bool sets_check = false, sets_force = false;
  std::string sets_format = "text";
  auto* sets_cmd = app.add_subcommand("sets", "list every restrained dominating set of order n with i vertices");
  sets_cmd->add_option("n", sets_n, "cycle order")->required();
  sets_cmd->add_option("i", sets_i, "set cardinality")->required();
  sets_cmd->add_flag("--check", sets_check,
                     "verify each listed set against the definition and the count");
  sets_cmd->add_flag("--force", sets_force, "lift the construction budget");
  sets_cmd->add_option("--format", sets_format, "output format")
      ->capture_default_str()
      ->check(CLI::IsMember(kPlainFormats));

  std::string verify_suite, verify_format = "text";
  int verify_nmax = 0;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite and report violations");
  verify_cmd->add_option("suite", verify_suite, "suite name")
      ->required()
      ->check(CLI::IsMember({"all", "table", "emptiness", "columns", "structure", "cyclepath", "genfunc"}));
  auto* nmax_opt = verify_cmd->add_option("--nmax", verify_nmax, "sweep bound (single suites only)");
  verify_cmd->add_option("--format", verify_format, "output format")
      ->capture_default_str()
      ->check(CLI::IsMember(kPlainFormats));

  int series_n = 0;
  std::string series_format = "text";
  auto* series_cmd = app.add_subcommand("series", "print the triangle for orders 4..n computed from the closed-form series");
  series_cmd->add_option("n", series_n, "largest cycle order")->required();
  series_cmd->add_option("--format", series_format, "output format")
      ->capture_default_str()
      ->check(CLI::IsMember(kAllFormats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*poly_cmd) {
      std::cout << rds::render_polynomial(rds::rdp_polynomial(poly_n),
                                          rds::parse_format(poly_format));
      return 0;
    }

    if (*count_cmd) {
      rds::Count result;
      if (count_method == "recurrence") {
        if (count_i < 0) throw rds::InvalidRange("cardinality must be >= 0");
        result = rds::rdp_row(count_n).at(count_i);
      } else if (count_method == "genfunc") {
        if (count_n < 4) {
          std::cerr << "error: the series method starts at order 4\n";
          return 3;
        }
        if (count_i < 0) throw rds::InvalidRange("cardinality must be >= 0");
        result = rds::expand_series(count_n).coefficient(count_n, count_i);
      } else if (count_method == "bruteforce") {
        if (count_n < 3) {
          std::cerr << "error: the brute-force method needs a cycle, order >= 3\n";
          return 3;
        }
        if (count_i < 0) throw rds::InvalidRange("cardinality must be >= 0");
        const int limit = resolve_brute_limit(brute_limit_opt->count() > 0, count_brute_limit);
        result = rds::count_rds(rds::make_cycle(count_n), count_i, limit);
      } else {  // construct
        if (count_n < 3) {
          std::cerr << "error: the construction method needs a cycle, order >= 3\n";
          return 3;
        }
        if (count_i < 0) throw rds::InvalidRange("cardinality must be >= 0");
        result = rds::construct_family(count_n, count_i).sets.size();
      }
      std::cout << rds::render_count(count_n, count_i, count_method, result,
                                     rds::parse_format(count_format));
      return 0;
    }

    if (*table_cmd) {
      if (table_n < 1) throw rds::InvalidOrder("table bound must be >= 1");
      rds::RowCache cache;
      std::vector<rds::CoefficientRow> rows;
      rows.reserve(static_cast<std::size_t>(table_n));
      for (int n = 1; n <= table_n; ++n) rows.push_back(cache.row(n));
      std::cout << rds::render_triangle(rows, rds::parse_format(table_format));
      return 0;
    }

    if (*sets_cmd) {
      if (sets_n < 3) {
        std::cerr << "error: the construction method needs a cycle, order >= 3\n";
        return 3;
      }
      if (sets_i < 0) throw rds::InvalidRange("cardinality must be >= 0");
      rds::FamilyBuilder builder(sets_force ? std::numeric_limits<std::size_t>::max()
                                            : rds::kDefaultSetBudget);
      const rds::RdsFamily fam = builder.family(sets_n, sets_i);
      if (sets_check) {
        bool ok = true;
        const rds::Count expected = rds::rdp_row(sets_n).at(sets_i);
        if (rds::Count(fam.sets.size()) != expected) {
          std::cerr << "check failed: listed " << fam.sets.size()
                    << " sets, the row count is " << expected.get_str() << "\n";
          ok = false;
        }
        const rds::GraphSpec g = rds::make_cycle(sets_n);
        for (const rds::VertexSet& s : fam.sets)
          if (!rds::is_restrained_dominating(g, s)) {
            std::cerr << "check failed: a listed set is not restrained dominating\n";
            ok = false;
            break;
          }
        for (std::size_t k = 0; k + 1 < fam.sets.size(); ++k)
          if (fam.sets[k] == fam.sets[k + 1]) {
            std::cerr << "check failed: duplicate set in the family\n";
            ok = false;
            break;
          }
        if (!ok) return 1;
        std::cerr << "check passed: " << fam.sets.size() << " sets verified\n";
      }
      std::cout << rds::render_family(fam, rds::parse_format(sets_format));
      return 0;
    }

    if (*verify_cmd) {
      const bool nmax_given = nmax_opt->count() > 0;
      std::vector<rds::CheckReport> reports;
      if (verify_suite == "all") {
        if (nmax_given) {
          std::cerr << "error: --nmax applies to a single suite, not 'all'\n";
          return 2;
        }
        reports = rds::verify_all();
      } else if (verify_suite == "table") {
        reports.push_back(rds::verify_table(nmax_given ? verify_nmax : rds::kDefaultTableBound));
      } else if (verify_suite == "emptiness") {
        reports.push_back(rds::verify_emptiness_pattern(
            nmax_given ? verify_nmax : rds::kDefaultEmptinessBound));
      } else if (verify_suite == "columns") {
        reports.push_back(rds::verify_column_identities(
            nmax_given ? verify_nmax : rds::kDefaultColumnsBound));
      } else if (verify_suite == "structure") {
        reports.push_back(rds::verify_complement_structure(
            nmax_given ? verify_nmax : rds::kDefaultStructureBound));
      } else if (verify_suite == "cyclepath") {
        reports.push_back(rds::verify_cycle_path_relation(
            nmax_given ? verify_nmax : rds::kDefaultCyclePathBound));
      } else {  // genfunc
        reports.push_back(rds::verify_series_equivalence(
            nmax_given ? verify_nmax : rds::kDefaultSeriesBound));
      }
      std::cout << rds::render_reports(verify_suite, reports,
                                       rds::parse_format(verify_format));
      for (const auto& rep : reports)
        if (!rep.passed()) return 1;
      return 0;
    }

    if (*series_cmd) {
      const rds::SeriesTable table = rds::expand_series(series_n);
      std::vector<rds::CoefficientRow> rows;
      rows.reserve(static_cast<std::size_t>(series_n) - 3);
      for (int n = 4; n <= series_n; ++n) rows.push_back(table.row(n));
      std::cout << rds::render_triangle(rows, rds::parse_format(series_format));
      return 0;
    }
  } catch (const rds::InvalidOrder& e) {
    return fail(e, 2);
  } catch (const rds::InvalidVertex& e) {
    return fail(e, 2);
  } catch (const rds::InvalidRange& e) {
    return fail(e, 2);
  } catch (const rds::OrderTooLarge& e) {
    return fail(e, 3);
  } catch (const rds::NotExpanded& e) {
    return fail(e, 3);
  } catch (const rds::BudgetExceeded& e) {
    return fail(e, 3);
  }
  return 0;
}
