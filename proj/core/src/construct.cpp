#include "rds/construct.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <string>

#include "rds/errors.hpp"

namespace rds {

namespace {

bool contains(const VertexSet& s, int v) {
  return std::binary_search(s.begin(), s.end(), v);
}

VertexSet with_vertex(const VertexSet& s, int v) {
  VertexSet out = s;
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

}  // namespace

std::optional<RdsFamily> base_family(int n, int i) {
  if (n < 3)
    throw InvalidOrder("cycle order must be >= 3, got " + std::to_string(n));
  RdsFamily fam{n, i, {}};
  if (i == n) {
    VertexSet all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 1);
    fam.sets.push_back(std::move(all));
  } else if (i == n - 2) {
    // drop the two endpoints of each edge of the cycle
    for (int v = 1; v <= n; ++v) {
      const int w = v % n + 1;
      VertexSet s;
      s.reserve(static_cast<std::size_t>(n) - 2);
      for (int u = 1; u <= n; ++u)
        if (u != v && u != w) s.push_back(u);
      fam.sets.push_back(std::move(s));
    }
  } else if (n % 3 == 0 && i == n / 3) {
    // the three arithmetic progressions of stride 3
    for (int start = 1; start <= 3; ++start) {
      VertexSet s;
      s.reserve(static_cast<std::size_t>(i));
      for (int v = start; v <= n; v += 3) s.push_back(v);
      fam.sets.push_back(std::move(s));
    }
  } else {
    return std::nullopt;
  }
  std::sort(fam.sets.begin(), fam.sets.end());
  return fam;
}

RdsFamily extend_families(int n, int i, const RdsFamily& from_n3,
                          const RdsFamily& from_n1,
                          const ExtensionRules& rules) {
  RdsFamily fam{n, i, {}};
  fam.sets.reserve(from_n3.sets.size() + from_n1.sets.size());
  for (const VertexSet& x : from_n3.sets) {
    // X1 lives on 1..n-3.  If 1 is missing, exactly one of its neighbours
    // 2 and n-3 is present (X1 dominates 1 but not with both neighbours),
    // so exactly one case fires.
    const bool has_first = contains(x, 1);
    const bool case_a = has_first;
    const bool case_b = !has_first && !contains(x, 2);
    [[maybe_unused]] const bool case_c = !has_first && !contains(x, n - 3);
    assert(int(case_a) + int(case_b) + int(case_c) == 1);
    const int offset = case_a   ? rules.y1_contains_first
                       : case_b ? rules.y1_missing_first_two
                                : rules.y1_missing_first_last;
    fam.sets.push_back(with_vertex(x, n - offset));
  }
  for (const VertexSet& x : from_n1.sets) {
    // X2 lives on 1..n-1; same argument with neighbours 2 and n-1.
    const bool has_first = contains(x, 1);
    const bool case_a = has_first || !contains(x, 2);
    [[maybe_unused]] const bool case_b = !has_first && !contains(x, n - 1);
    assert(int(case_a) + int(case_b) == 1);
    const int offset =
        case_a ? rules.y2_first_or_missing_two : rules.y2_missing_first_last;
    fam.sets.push_back(with_vertex(x, n - offset));
  }
  std::sort(fam.sets.begin(), fam.sets.end());
  return fam;
}

FamilyBuilder::FamilyBuilder(std::size_t set_budget) : budget_(set_budget) {}

const RdsFamily& FamilyBuilder::family(int n, int i) {
  if (n < 3)
    throw InvalidOrder("cycle order must be >= 3, got " + std::to_string(n));
  const Count predicted = predicted_sets(n, i);
  if (Count(stored_) + predicted > Count(budget_))
    throw BudgetExceeded("family of C_" + std::to_string(n) + "^" +
                         std::to_string(i) + " needs " + predicted.get_str() +
                         " more stored sets, budget is " +
                         std::to_string(budget_) + " (currently " +
                         std::to_string(stored_) + ")");
  return build(n, i);
}

const RdsFamily& FamilyBuilder::build(int n, int i) {
  const auto key = std::make_pair(n, i);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  RdsFamily fam{n, i, {}};
  if (i >= 0 && !is_empty_class(n, i)) {
    if (auto base = base_family(n, i)) {
      fam = std::move(*base);
    } else {
      // both subfamilies exist here: a lone order-(n-3) branch happens only
      // at (3k, k) and a lone order-(n-1) branch only at i = n, both bases
      const RdsFamily& from_n3 = build(n - 3, i - 1);
      const RdsFamily& from_n1 = build(n - 1, i - 1);
      fam = extend_families(n, i, from_n3, from_n1);
      // the two branches are disjoint and complete
      assert(Count(fam.sets.size()) == rows_.count(n, i));
      assert(std::adjacent_find(fam.sets.begin(), fam.sets.end()) ==
             fam.sets.end());
    }
  }
  stored_ += fam.sets.size();
  return memo_.emplace(key, std::move(fam)).first->second;
}

Count FamilyBuilder::predicted_sets(int n, int i) {
  if (n < 3)
    throw InvalidOrder("cycle order must be >= 3, got " + std::to_string(n));
  Count total = 0;
  std::set<std::pair<int, int>> seen;
  std::vector<std::pair<int, int>> pending{{n, i}};
  while (!pending.empty()) {
    const auto [m, j] = pending.back();
    pending.pop_back();
    if (!seen.insert({m, j}).second) continue;
    if (j < 0 || is_empty_class(m, j)) continue;
    if (memo_.count({m, j})) continue;  // already stored, costs nothing new
    total += rows_.count(m, j);
    if (j == m || j == m - 2 || (m % 3 == 0 && j == m / 3)) continue;
    pending.push_back({m - 3, j - 1});
    pending.push_back({m - 1, j - 1});
  }
  return total;
}

RdsFamily construct_family(int n, int i, std::size_t set_budget) {
  FamilyBuilder builder(set_budget);
  return builder.family(n, i);
}

}  // namespace rds
