#ifndef RDS_CONSTRUCT_HPP
#define RDS_CONSTRUCT_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <utility>

#include "rds/graph.hpp"
#include "rds/recurrence.hpp"

namespace rds {

// The explicit family C_n^i: every restrained dominating set of C_n of
// cardinality i, lexicographically sorted.
struct RdsFamily {
  int order = 0;
  int cardinality = 0;
  std::vector<VertexSet> sets;
  bool operator==(const RdsFamily&) const = default;
};

// The three closed-form families:
//   (n = 3k, i = k):  the arithmetic progressions {v, v+3, ..., v+n-3},
//                     one per residue v in {1,2,3}
//   (i = n):          {V}
//   (i = n - 2):      V minus the two endpoints of each edge (n sets)
// Returns nullopt for any other (n, i).  Requires n >= 3.
std::optional<RdsFamily> base_family(int n, int i);

// How a member of the order-(n-3) family (y1_* cases) or the order-(n-1)
// family (y2_* cases) is completed to a member of the order-n family: the
// table of which vertex gets appended, stored as offsets subtracted from n.
// Exactly one case applies to each member set (checked).  The defaults are
// the correct table; tests perturb single entries to prove the verifier
// catches a wrong table.
struct ExtensionRules {
  int y1_contains_first = 2;       // 1 in X1              -> append n-2
  int y1_missing_first_two = 0;    // 1, 2 not in X1       -> append n
  int y1_missing_first_last = 1;   // 1, n-3 not in X1     -> append n-1
  int y2_first_or_missing_two = 0; // 1 in X2, or 1,2 not in X2 -> append n
  int y2_missing_first_last = 1;   // 1, n-1 not in X2     -> append n-1
};

// Apply the completion table to the two subfamilies (orders n-3 and n-1).
// The result is sorted; duplicates are not removed (the correct table never
// produces any, and the count checks would expose them).
RdsFamily extend_families(int n, int i, const RdsFamily& from_n3,
                          const RdsFamily& from_n1,
                          const ExtensionRules& rules = {});

inline constexpr std::size_t kDefaultSetBudget = 1'000'000;

// Memoised recursive builder.  family(n, i) materialises C_n^i plus every
// subfamily the recursion touches, so repeated queries are cheap; it refuses
// with BudgetExceeded, before building anything, whenever completing the call
// would push the total number of stored sets past the budget (the total is
// predicted from the count rows).  Not thread-safe; use one instance per
// thread.
class FamilyBuilder {
 public:
  explicit FamilyBuilder(std::size_t set_budget = kDefaultSetBudget);

  // Requires n >= 3.  Non-classes (wrong parity, i out of range) yield an
  // empty family, not an error.
  const RdsFamily& family(int n, int i);

  // Total sets a family(n, i) call would newly store (already-memoised
  // subfamilies cost nothing), computed from the count rows without
  // materialising anything.
  Count predicted_sets(int n, int i);

 private:
  const RdsFamily& build(int n, int i);

  std::size_t budget_;
  std::size_t stored_ = 0;
  RowCache rows_;
  std::map<std::pair<int, int>, RdsFamily> memo_;
};

// One-shot convenience wrapper around FamilyBuilder.
RdsFamily construct_family(int n, int i,
                           std::size_t set_budget = kDefaultSetBudget);

}  // namespace rds

#endif  // RDS_CONSTRUCT_HPP
