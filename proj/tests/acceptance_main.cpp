// Acceptance battery: every release criterion, one PASS/FAIL line each.
// Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "rds/construct.hpp"
#include "rds/genfunc.hpp"
#include "rds/graph.hpp"
#include "rds/identities.hpp"
#include "rds/recurrence.hpp"
#include "rds/reference_table.hpp"

using namespace rds;

namespace {

int g_failures = 0;

void report(bool ok, const std::string& label) {
  std::printf("%s: %s\n", ok ? "PASS" : "FAIL", label.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", s);
  return buf;
}

int run_cli(const std::string& args) {
  const std::string cmd =
      std::string(RDS_ENUM_BINARY) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// 1. the CLI cross-checks the pinned triangle in under a second
void criterion_cli_table() {
  const auto t0 = std::chrono::steady_clock::now();
  const int code = run_cli("verify table --nmax 23");
  const double elapsed = seconds_since(t0);
  report(code == 0 && elapsed < 1.0,
         "CLI cross-checks the pinned triangle, exit " + std::to_string(code) +
             ", " + fmt_seconds(elapsed) + "s (< 1s)");
}

// 2. all four engines agree on their shared ranges within five minutes
void criterion_four_way_agreement() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = verify_series_equivalence(300).passed();
  for (int n = 3; n <= 18 && ok; ++n)
    ok = count_rds_by_cardinality(make_cycle(n)).counts == rdp_row(n).counts;
  FamilyBuilder builder;
  for (int n = 3; n <= 16 && ok; ++n) {
    const CoefficientRow row = rdp_row(n);
    for (int i = 0; i <= n && ok; ++i)
      ok = Count(builder.family(n, i).sets.size()) == row.at(i);
  }
  const double elapsed = seconds_since(t0);
  report(ok && elapsed < 300.0,
         "series (to order 300), brute force (to 18) and construction (to 16) "
         "all match the recurrence, " +
             fmt_seconds(elapsed) + "s (< 300s)");
}

// 3. the constructed families are exactly the brute-force families
void criterion_set_level_equality() {
  bool ok = true;
  FamilyBuilder builder;
  for (int n = 3; n <= 16 && ok; ++n) {
    const GraphSpec g = make_cycle(n);
    for (int i = 0; i <= n && ok; ++i)
      ok = builder.family(n, i).sets == enumerate_rds(g, i);
  }
  report(ok, "constructed families equal brute-force families, set by set, "
             "orders 3..16");
}

// 4. column identities to order 40, plus three anchored values
void criterion_columns() {
  bool ok = verify_column_identities(40).passed();
  RowCache rc;
  ok = ok && rc.count(10, 4) == 10;
  ok = ok && rc.count(11, 5) == 22;
  Count col4 = 0, col3 = 0;
  for (int j = 4; j <= 12; ++j) col4 += rc.count(j, 4);
  for (int j = 3; j <= 9; ++j) col3 += rc.count(j, 3);
  ok = ok && col4 == 32 && col3 == 16 && col4 == 2 * col3;
  report(ok, "column identities hold to order 40; anchors: count(10,4)=10, "
             "count(11,5)=22, column-4 sum 32 = 2 x column-3 sum 16");
}

// 5. structural facts: complements split into edges, the zero pattern, and
// the per-row term count
void criterion_structure() {
  const bool complements = verify_complement_structure(16).passed();
  const bool zero_pattern = verify_emptiness_pattern(18).passed();
  bool terms = true;
  RowCache rc;
  for (int n = 3; n <= 200 && terms; ++n)
    terms = static_cast<int>(rc.row(n).counts.size()) == term_count(n);
  report(complements && zero_pattern && terms,
         "complements are all edges (orders <= 16), zero pattern exact "
         "(orders <= 18), term count 1+floor(n/3) (orders <= 200)");
}

// 6. cycle rows decompose into path rows
void criterion_cycle_path() {
  report(verify_cycle_path_relation(18).passed(),
         "cycle rows equal path rows plus three shorter path rows, orders "
         "5..18");
}

// 7. the order-2000 polynomial in under ten seconds
void criterion_large_order() {
  const auto t0 = std::chrono::steady_clock::now();
  const RdPolynomial p = rdp_polynomial(2000);
  const double elapsed = seconds_since(t0);
  bool ok = elapsed < 10.0;
  ok = ok && static_cast<int>(p.coeffs.size()) == term_count(2000);
  ok = ok && p.coeffs.front().first == gamma_r(2000);
  ok = ok && p.coeffs.back() == std::pair<int, Count>{2000, 1};
  Count at_1996 = 0, at_1998 = 0;
  for (const auto& [i, c] : p.coeffs) {
    if (i == 1996) at_1996 = c;
    if (i == 1998) at_1998 = c;
    ok = ok && c > 0 && (2000 - i) % 2 == 0;
  }
  ok = ok && at_1998 == 2000 && at_1996 == Count(2000) * 1995 / 2;
  report(ok, "order-2000 polynomial: 667 terms, exponents 668..2000, spot "
             "coefficients check, " +
                 fmt_seconds(elapsed) + "s (< 10s)");
}

// 8a. every off-by-one corruption of the pinned triangle is caught
void criterion_fault_injection_table() {
  const auto& ref = reference_table();
  long missed = 0, runs = 0;
  for (int n = 1; n <= kReferenceTableMaxOrder; ++n)
    for (int i = 1; i <= n; ++i)
      for (const long delta : {+1L, -1L}) {
        std::vector<std::vector<long>> rows = ref;
        rows[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(i) - 1] +=
            delta;
        ++runs;
        if (verify_table_against(rows, kReferenceTableMaxOrder).passed())
          ++missed;
      }
  report(missed == 0, "every off-by-one corruption of the pinned triangle is "
                      "caught (" +
                          std::to_string(runs) + " corrupted tables checked)");
}

// 8b. every wrong entry in the completion table is caught at set level
void criterion_fault_injection_rules() {
  struct Field {
    const char* name;
    int ExtensionRules::*member;
    int correct;
  };
  const std::vector<Field> fields = {
      {"y1_contains_first", &ExtensionRules::y1_contains_first, 2},
      {"y1_missing_first_two", &ExtensionRules::y1_missing_first_two, 0},
      {"y1_missing_first_last", &ExtensionRules::y1_missing_first_last, 1},
      {"y2_first_or_missing_two", &ExtensionRules::y2_first_or_missing_two, 0},
      {"y2_missing_first_last", &ExtensionRules::y2_missing_first_last, 1},
  };
  FamilyBuilder builder;
  int perturbations = 0, caught = 0;
  for (const Field& field : fields)
    for (int wrong = 0; wrong <= 2; ++wrong) {
      if (wrong == field.correct) continue;
      ++perturbations;
      ExtensionRules rules;
      rules.*field.member = wrong;
      bool mismatch = false;
      for (int n = 7; n <= 12 && !mismatch; ++n) {
        const GraphSpec g = make_cycle(n);
        for (int i = 0; i <= n && !mismatch; ++i) {
          if (is_empty_class(n, i)) continue;
          const RdsFamily fam = extend_families(
              n, i, builder.family(n - 3, i - 1), builder.family(n - 1, i - 1),
              rules);
          mismatch = fam.sets != enumerate_rds(g, i);
        }
      }
      if (mismatch) ++caught;
    }
  report(caught == perturbations,
         "every single-entry corruption of the completion table is caught (" +
             std::to_string(caught) + "/" + std::to_string(perturbations) +
             ")");
}

}  // namespace

int main() {
  criterion_cli_table();
  criterion_four_way_agreement();
  criterion_set_level_equality();
  criterion_columns();
  criterion_structure();
  criterion_cycle_path();
  criterion_large_order();
  criterion_fault_injection_table();
  criterion_fault_injection_rules();
  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
