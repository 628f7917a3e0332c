#ifndef RDS_ROW_HPP
#define RDS_ROW_HPP

#include <gmpxx.h>

#include <map>

namespace rds {

// Counts overflow 64 bits around order 190, so everything is GMP-backed.
using Count = mpz_class;

// One row of the count triangle: the cycle order n together with the nonzero
// counts d_r(C_n, i), keyed by cardinality i.  Zero entries are never stored,
// so counts.size() is the number of terms of the polynomial for that order.
struct CoefficientRow {
  int order = 0;
  std::map<int, Count> counts;

  Count at(int i) const {
    auto it = counts.find(i);
    return it == counts.end() ? Count(0) : it->second;
  }

  // Add v to the entry at i, dropping the entry if the result is zero.
  void add(int i, const Count& v) {
    if (v == 0) return;
    Count& slot = counts[i];
    slot += v;
    if (slot == 0) counts.erase(i);
  }

  Count sum() const {
    Count s = 0;
    for (const auto& [i, c] : counts) s += c;
    return s;
  }

  bool operator==(const CoefficientRow&) const = default;
};

}  // namespace rds

#endif  // RDS_ROW_HPP
