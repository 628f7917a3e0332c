#ifndef RDS_IDENTITIES_HPP
#define RDS_IDENTITIES_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace rds {

// One failed comparison from a verification sweep.  expected carries the
// value the reference or identity demands, got the observed value tagged
// with the engine that produced it.
struct Counterexample {
  int n = 0;
  int i = 0;
  std::string expected;
  std::string got;
};

// Outcome of one verification sweep.  Every violation is counted; at most
// kMaxStoredCounterexamples are kept for reporting.
struct CheckReport {
  static constexpr std::size_t kMaxStoredCounterexamples = 20;

  std::string name;
  std::string range;
  std::size_t total_violations = 0;
  std::vector<Counterexample> counterexamples;

  bool passed() const { return total_violations == 0; }
  void record(int n, int i, std::string expected, std::string got);
};

// Default sweep bounds; also the CLI defaults.
inline constexpr int kDefaultTableBound = 23;
inline constexpr int kDefaultEmptinessBound = 18;
inline constexpr int kDefaultColumnsBound = 40;
inline constexpr int kDefaultStructureBound = 16;
inline constexpr int kDefaultCyclePathBound = 18;
inline constexpr int kDefaultSeriesBound = 300;

// Term counts stay cheap far past any column sweep, so they are always
// checked at least this far (see verify_column_identities).
inline constexpr int kTermCountBound = 200;

// Every engine — recurrence, series expansion, recursive construction
// (n <= 16), brute force (n <= 20) — against the pinned reference triangle.
// Requires 3 <= n_max <= 23.
CheckReport verify_table(int n_max);

// The same sweep against a caller-supplied triangle (rows[k] is order k+1),
// so tests can prove a corrupted table is caught.
CheckReport verify_table_against(const std::vector<std::vector<long>>& rows,
                                 int n_max);

// The zero/nonzero pattern and its consequences: the emptiness biconditional,
// support parity and bounds, parity of the domination number, the four
// adjacent-class implications, the five sibling-class biconditionals, and an
// oracle confirmation of the pattern for n <= 16.  Requires n_max >= 6.
CheckReport verify_emptiness_pattern(int n_max);

// The coefficient identities along rows and columns: the three-term
// recurrence, the closed-form columns (full set, two short of full, four
// short of full, the three progressions and their neighbours), column-sum
// doubling, column unimodality, row totals, and the term count (the latter
// swept to at least kTermCountBound).  Requires n_max >= 12.
CheckReport verify_column_identities(int n_max);

// Complement structure, brute-forced: for every restrained dominating set of
// every C_n in range, the complement induces (n-|S|)/2 components, each a
// single edge.  Requires 3 <= n_max <= 18.
CheckReport verify_complement_structure(int n_max);

// Cycle counts from path counts, brute-forced on paths:
// row_C(n) = row_P(n) + 3 * row_P(n-2), coefficient-wise.
// Requires 5 <= n_max <= 18.
CheckReport verify_cycle_path_relation(int n_max);

// Series engine against the recurrence engine, full-row equality plus the
// support-shape invariants, for 4 <= n <= n_max.
CheckReport verify_series_equivalence(int n_max);

// Every check above at its default bound, in a fixed order.
std::vector<CheckReport> verify_all();

}  // namespace rds

#endif  // RDS_IDENTITIES_HPP
