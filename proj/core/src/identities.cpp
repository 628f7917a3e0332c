#include "rds/identities.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "rds/construct.hpp"
#include "rds/errors.hpp"
#include "rds/genfunc.hpp"
#include "rds/graph.hpp"
#include "rds/recurrence.hpp"
#include "rds/reference_table.hpp"

namespace rds {

void CheckReport::record(int n, int i, std::string expected, std::string got) {
  ++total_violations;
  if (counterexamples.size() < kMaxStoredCounterexamples)
    counterexamples.push_back({n, i, std::move(expected), std::move(got)});
}

namespace {

std::string str(const Count& c) { return c.get_str(); }

constexpr int kTableOracleBound = 18;
constexpr int kTableConstructBound = 16;
constexpr int kEmptinessOracleBound = 16;

}  // namespace

CheckReport verify_table_against(const std::vector<std::vector<long>>& rows,
                                 int n_max) {
  if (n_max < 3 || n_max > static_cast<int>(rows.size()))
    throw InvalidRange("table sweep bound must be in 3.." +
                       std::to_string(rows.size()) + ", got " +
                       std::to_string(n_max));
  CheckReport rep;
  rep.name = "table";
  rep.range = "orders 1.." + std::to_string(n_max) +
              " vs pinned triangle; engines: recurrence, series (n>=4), "
              "construction (n<=16), brute force (n<=18)";
  RowCache rc;
  const SeriesTable series = expand_series(std::max(4, n_max));
  FamilyBuilder builder;
  for (int n = 1; n <= n_max; ++n) {
    const auto& ref = rows[static_cast<std::size_t>(n) - 1];
    if (static_cast<int>(ref.size()) != n) {
      rep.record(n, 0, "triangle row of length " + std::to_string(n),
                 "length " + std::to_string(ref.size()));
      continue;
    }
    CoefficientRow oracle_row;
    const bool have_oracle = n >= 3 && n <= kTableOracleBound;
    if (have_oracle) oracle_row = count_rds_by_cardinality(make_cycle(n));
    const bool have_construct = n >= 3 && n <= kTableConstructBound;
    for (int i = 1; i <= n; ++i) {
      const long expected = ref[static_cast<std::size_t>(i) - 1];
      const std::string want = std::to_string(expected);
      if (rc.count(n, i) != expected)
        rep.record(n, i, want, str(rc.count(n, i)) + " (recurrence)");
      if (n >= 4 && series.coefficient(n, i) != expected)
        rep.record(n, i, want, str(series.coefficient(n, i)) + " (series)");
      if (have_construct) {
        const auto got = builder.family(n, i).sets.size();
        if (Count(got) != expected)
          rep.record(n, i, want, std::to_string(got) + " (construction)");
      }
      if (have_oracle && oracle_row.at(i) != expected)
        rep.record(n, i, want, str(oracle_row.at(i)) + " (brute force)");
    }
  }
  return rep;
}

CheckReport verify_table(int n_max) {
  return verify_table_against(reference_table(), n_max);
}

CheckReport verify_emptiness_pattern(int n_max) {
  if (n_max < 6)
    throw InvalidRange("emptiness sweep bound must be >= 6, got " +
                       std::to_string(n_max));
  CheckReport rep;
  rep.name = "emptiness";
  rep.range = "orders 3.." + std::to_string(n_max) +
              " (sibling biconditionals from 4, oracle confirmation to 16)";
  RowCache rc;
  rc.row(n_max + 2);
  auto cnt = [&rc](int n, int i) { return rc.count(n, i); };
  auto empty = [&cnt](int n, int i) { return cnt(n, i) == 0; };

  // the zero pattern itself: empty iff i > n, i < gamma_r, or n-i odd
  for (int n = 3; n <= n_max; ++n)
    for (int i = -1; i <= n + 2; ++i) {
      const bool predicted = is_empty_class(n, i);
      if (predicted != empty(n, i))
        rep.record(n, i, predicted ? "0 (zero pattern)" : ">0 (zero pattern)",
                   str(cnt(n, i)) + " (recurrence)");
    }

  // support shape: parity, bounds, leading index, odd gaps
  for (int n = 1; n <= n_max; ++n) {
    const auto& row = rc.row(n);
    for (const auto& [i, c] : row.counts) {
      if ((n - i) % 2 != 0)
        rep.record(n, i, "support only where n-i is even", str(c));
      if (i < gamma_r(n) || i > n)
        rep.record(n, i, "support inside gamma_r..n", str(c));
    }
    if ((n - gamma_r(n)) % 2 != 0)
      rep.record(n, gamma_r(n), "gamma_r with the parity of n",
                 std::to_string(gamma_r(n)));
    if (row.counts.empty() || row.counts.begin()->first != gamma_r(n))
      rep.record(n, gamma_r(n), "least support index = gamma_r",
                 row.counts.empty()
                     ? "empty row"
                     : std::to_string(row.counts.begin()->first));
    for (int k = gamma_r(n) + 1; k < n; ++k)
      if ((n - k) % 2 != 0 && cnt(n, k) != 0)
        rep.record(n, k, "0 at odd offsets inside the support range",
                   str(cnt(n, k)));
  }

  // adjacent-class implications
  for (int n = 3; n <= n_max; ++n)
    for (int i = 0; i <= n; ++i) {
      if (!empty(n, i)) {
        if (!empty(n, i - 1))
          rep.record(n, i, "class at (n, i-1) empty", str(cnt(n, i - 1)));
        if (!empty(n, i + 1))
          rep.record(n, i, "class at (n, i+1) empty", str(cnt(n, i + 1)));
        if (!empty(n - 1, i))
          rep.record(n, i, "class at (n-1, i) empty", str(cnt(n - 1, i)));
        if (!empty(n + 1, i))
          rep.record(n, i, "class at (n+1, i) empty", str(cnt(n + 1, i)));
      }
      if (empty(n - 1, i - 1) && empty(n - 2, i - 2) && !empty(n - 3, i - 3))
        rep.record(n, i, "(n-3, i-3) empty when (n-1, i-1) and (n-2, i-2) are",
                   str(cnt(n - 3, i - 3)));
      if (empty(n, i) && empty(n + 2, i - 2) && !empty(n + 1, i - 1))
        rep.record(n, i, "(n+1, i-1) empty when (n, i) and (n+2, i-2) are",
                   str(cnt(n + 1, i - 1)));
      if (!empty(n, i) && !empty(n - 2, i) && !empty(n - 1, i))
        rep.record(n, i, "(n-1, i) empty when (n, i) and (n-2, i) are not",
                   str(cnt(n - 1, i)));
    }

  // sibling-class biconditionals over nonempty classes (from order 4: at
  // order 3 the first one would need a nonempty order-0 class)
  for (int n = 4; n <= n_max; ++n)
    for (int i = 0; i <= n; ++i) {
      if (empty(n, i)) continue;
      const bool changed1 = !empty(n - 1, i - 1);
      const bool changed3 = !empty(n - 3, i - 1);
      struct Item {
        const char* what;
        bool lhs;
        bool rhs;
      } items[] = {
          {"lone short branch <-> progressions class",
           !changed1 && empty(n - 2, i - 1) && changed3,
           n % 3 == 0 && i == n / 3},
          {"lone long branch <-> full class",
           empty(n - 2, i - 1) && !changed3 && changed1, i == n},
          {"both branches, (n-2, i-2) empty <-> order 3k+1 at i = k+1",
           changed1 && changed3 && empty(n - 2, i - 2),
           n % 3 == 1 && i == (n - 1) / 3 + 1},
          {"both branches, (n-5, i-1) empty <-> i = n-2",
           changed1 && changed3 && empty(n - 5, i - 1), i == n - 2},
          {"both branches <-> n - 2 floor((n-1)/3) <= i <= n-2",
           changed1 && changed3, n - 2 * ((n - 1) / 3) <= i && i <= n - 2},
      };
      for (const auto& item : items)
        if (item.lhs != item.rhs)
          rep.record(n, i, std::string(item.what),
                     std::string("lhs=") + (item.lhs ? "1" : "0") +
                         " rhs=" + (item.rhs ? "1" : "0"));
    }

  // oracle view of the same zero pattern
  for (int n = 3; n <= std::min(n_max, kEmptinessOracleBound); ++n) {
    const CoefficientRow oracle = count_rds_by_cardinality(make_cycle(n));
    for (int i = 0; i <= n; ++i)
      if ((oracle.at(i) == 0) != empty(n, i))
        rep.record(n, i, str(cnt(n, i)) + " (recurrence)",
                   str(oracle.at(i)) + " (brute force)");
  }
  return rep;
}

CheckReport verify_column_identities(int n_max) {
  if (n_max < 12)
    throw InvalidRange("column sweep bound must be >= 12, got " +
                       std::to_string(n_max));
  CheckReport rep;
  rep.name = "columns";
  rep.range = "orders <= " + std::to_string(n_max) +
              "; column sums to 3n; term counts to " +
              std::to_string(std::max(n_max, kTermCountBound));
  const int term_bound = std::max(n_max, kTermCountBound);
  RowCache rc;
  rc.row(std::max(3 * n_max, term_bound));
  auto cnt = [&rc](int n, int i) { return rc.count(n, i); };

  // the three-term recurrence, seeds included (orders 1 and 2 feed n = 4, 5)
  for (int n = 4; n <= n_max; ++n)
    for (int i = 0; i <= n + 2; ++i) {
      const Count rhs = cnt(n - 1, i - 1) + cnt(n - 3, i - 1);
      if (cnt(n, i) != rhs)
        rep.record(n, i, str(rhs) + " (short+long branch)",
                   str(cnt(n, i)) + " (row)");
    }

  // closed-form columns
  for (int n = 3; n <= n_max; ++n) {
    if (cnt(n, n) != 1) rep.record(n, n, "1 (full set)", str(cnt(n, n)));
    if (cnt(n, n - 1) != 0)
      rep.record(n, n - 1, "0 (one short of full)", str(cnt(n, n - 1)));
    if (cnt(n, n - 2) != n)
      rep.record(n, n - 2, std::to_string(n) + " (two short of full)",
                 str(cnt(n, n - 2)));
    if (n >= 5) {
      const long want = static_cast<long>(n) * (n - 5) / 2;
      if (cnt(n, n - 4) != want)
        rep.record(n, n - 4, std::to_string(want) + " (four short of full)",
                   str(cnt(n, n - 4)));
    }
  }
  for (int k = 1; 3 * k <= n_max; ++k)
    if (cnt(3 * k, k) != 3)
      rep.record(3 * k, k, "3 (stride-3 progressions)", str(cnt(3 * k, k)));
  for (int k = 1; 3 * k + 1 <= n_max; ++k)
    if (cnt(3 * k + 1, k + 1) != 3 * k + 1)
      rep.record(3 * k + 1, k + 1,
                 std::to_string(3 * k + 1) + " (order 3k+1 at i = k+1)",
                 str(cnt(3 * k + 1, k + 1)));
  for (int k = 2; 3 * k - 1 <= n_max; ++k) {
    const long want = static_cast<long>(k) * (3 * k - 1) / 2;
    if (cnt(3 * k - 1, k + 1) != want)
      rep.record(3 * k - 1, k + 1,
                 std::to_string(want) + " (order 3k-1 at i = k+1)",
                 str(cnt(3 * k - 1, k + 1)));
  }

  // whole-column sums double from one column to the next
  for (int n = 4; n <= n_max; ++n) {
    Count whole = 0, prev = 0;
    for (int j = n; j <= 3 * n; ++j) whole += cnt(j, n);
    for (int j = n - 1; j <= 3 * (n - 1); ++j) prev += cnt(j, n - 1);
    if (whole != 2 * prev)
      rep.record(n, n, "2 * " + str(prev) + " (previous column sum)",
                 str(whole));
  }

  // column unimodality: strictly up to the peak, strictly down after it,
  // stepping by 2 along the column's parity (interleaved orders are empty
  // classes, handled by the emptiness checks)
  for (int k = 3; k <= n_max; ++k) {
    const bool even = k % 2 == 0;
    const int lower_hi = even ? 2 * k - 2 : 2 * k - 1;
    const int upper_lo = even ? 2 * k : 2 * k + 1;
    for (int j = k; j <= lower_hi; j += 2)
      if (!(cnt(j, k) < cnt(j + 2, k)))
        rep.record(j, k, "< " + str(cnt(j + 2, k)) + " (column " +
                             std::to_string(k) + " rising)",
                   str(cnt(j, k)));
    for (int j = upper_lo; j <= 3 * k - 2; j += 2)
      if (!(cnt(j, k) > cnt(j + 2, k)))
        rep.record(j, k, "> " + str(cnt(j + 2, k)) + " (column " +
                             std::to_string(k) + " falling)",
                   str(cnt(j, k)));
  }

  // row totals against the windowed total recurrence
  for (int n = 1; n <= n_max; ++n)
    if (total_rds_count(n) != rc.row(n).sum())
      rep.record(n, 0, str(rc.row(n).sum()) + " (row sum)",
                 str(total_rds_count(n)) + " (total recurrence)");

  // number of terms per row
  for (int n = 3; n <= term_bound; ++n)
    if (static_cast<int>(rc.row(n).counts.size()) != term_count(n))
      rep.record(n, 0, std::to_string(term_count(n)) + " terms",
                 std::to_string(rc.row(n).counts.size()) + " terms");
  return rep;
}

CheckReport verify_complement_structure(int n_max) {
  if (n_max < 3 || n_max > 18)
    throw InvalidRange("structure sweep bound must be in 3..18, got " +
                       std::to_string(n_max));
  CheckReport rep;
  rep.name = "structure";
  rep.range = "every restrained dominating set of C_3..C_" +
              std::to_string(n_max) + ", brute-forced";
  for (int n = 3; n <= n_max; ++n) {
    const GraphSpec g = make_cycle(n);
    for (int i = 0; i <= n; ++i) {
      for (const VertexSet& s : enumerate_rds(g, i)) {
        const std::vector<int> sizes = complement_component_sizes(g, s);
        const bool all_pairs =
            std::all_of(sizes.begin(), sizes.end(),
                        [](int sz) { return sz == 2; });
        if (!all_pairs || static_cast<int>(sizes.size()) != (n - i) / 2) {
          std::string got = std::to_string(sizes.size()) + " components of sizes";
          for (int sz : sizes) got += " " + std::to_string(sz);
          rep.record(n, i,
                     std::to_string((n - i) / 2) + " components, each an edge",
                     got);
        }
      }
    }
  }
  return rep;
}

CheckReport verify_cycle_path_relation(int n_max) {
  if (n_max < 5 || n_max > 18)
    throw InvalidRange("cycle-path sweep bound must be in 5..18, got " +
                       std::to_string(n_max));
  CheckReport rep;
  rep.name = "cyclepath";
  rep.range = "orders 5.." + std::to_string(n_max) +
              ", path rows brute-forced";
  RowCache rc;
  std::map<int, CoefficientRow> path_rows;
  auto path_row = [&path_rows](int m) -> const CoefficientRow& {
    auto it = path_rows.find(m);
    if (it == path_rows.end())
      it = path_rows.emplace(m, count_rds_by_cardinality(make_path(m))).first;
    return it->second;
  };
  for (int n = 5; n <= n_max; ++n) {
    const CoefficientRow& pn = path_row(n);
    const CoefficientRow& pshort = path_row(n - 2);
    for (int i = 0; i <= n; ++i) {
      const Count lhs = pn.at(i) + 3 * pshort.at(i);
      if (lhs != rc.count(n, i))
        rep.record(n, i, str(rc.count(n, i)) + " (cycle row)",
                   str(lhs) + " (path row + 3x shorter path row)");
    }
  }
  return rep;
}

CheckReport verify_series_equivalence(int n_max) {
  if (n_max < 4)
    throw InvalidRange("series sweep bound must be >= 4, got " +
                       std::to_string(n_max));
  CheckReport rep;
  rep.name = "genfunc";
  rep.range = "orders 4.." + std::to_string(n_max) +
              ", full-row equality and support shape";
  const SeriesTable series = expand_series(n_max);
  RowCache rc;
  for (int n = 4; n <= n_max; ++n) {
    const CoefficientRow& srow = series.row(n);
    const CoefficientRow& rrow = rc.row(n);
    if (srow.counts != rrow.counts) {
      std::map<int, char> keys;
      for (const auto& [i, c] : srow.counts) keys.emplace(i, 0);
      for (const auto& [i, c] : rrow.counts) keys.emplace(i, 0);
      for (const auto& [i, unused] : keys)
        if (srow.at(i) != rrow.at(i))
          rep.record(n, i, str(rrow.at(i)) + " (recurrence)",
                     str(srow.at(i)) + " (series)");
    }
    if (srow.counts.empty() || srow.counts.begin()->first != gamma_r(n))
      rep.record(n, gamma_r(n), "least exponent = gamma_r", "series support");
    if (srow.counts.empty() || srow.counts.rbegin()->first != n ||
        srow.counts.rbegin()->second != 1)
      rep.record(n, n, "leading term x^n", "series support");
    if (static_cast<int>(srow.counts.size()) != term_count(n))
      rep.record(n, 0, std::to_string(term_count(n)) + " terms",
                 std::to_string(srow.counts.size()) + " terms (series)");
  }
  return rep;
}

std::vector<CheckReport> verify_all() {
  std::vector<CheckReport> reports;
  reports.push_back(verify_table(kDefaultTableBound));
  reports.push_back(verify_emptiness_pattern(kDefaultEmptinessBound));
  reports.push_back(verify_column_identities(kDefaultColumnsBound));
  reports.push_back(verify_complement_structure(kDefaultStructureBound));
  reports.push_back(verify_cycle_path_relation(kDefaultCyclePathBound));
  reports.push_back(verify_series_equivalence(kDefaultSeriesBound));
  return reports;
}

}  // namespace rds
