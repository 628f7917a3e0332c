#ifndef RDS_GENFUNC_HPP
#define RDS_GENFUNC_HPP

#include <map>
#include <utility>
#include <vector>

#include "rds/row.hpp"

namespace rds {

// Second, independent engine for the count triangle: the bivariate series
//
//   f(x,y) = x^4 y^2 (4 + y^2 + xy + 3x^2 + x^2 y^2) / (1 - xy - x^3 y)
//
// where x tracks the cycle order n and y the set cardinality i, covering
// n >= 4 (orders 1..3 are never requested from this engine).  Multiplying
// through by the denominator turns expansion into the fill rule
//
//   coeff(n,i) = numerator(n,i) + coeff(n-1,i-1) + coeff(n-3,i-1)
//
// with coeff(m,.) = 0 for m < 4.  That the fill rule looks like the row
// recurrence is the point: the two engines share no code or seed rows, and
// the verifier diffs their outputs.

// The expanded numerator: five monomials keyed by (n, i).
const std::map<std::pair<int, int>, long>& numerator_support();

class SeriesTable {
 public:
  int n_max() const { return n_max_; }

  // Coefficient of x^n y^i.  Requires 4 <= n <= n_max (NotExpanded
  // otherwise); any i is fine and absent entries read as 0.
  Count coefficient(int n, int i) const;

  // Whole row for 4 <= n <= n_max.
  const CoefficientRow& row(int n) const;

  friend SeriesTable expand_series(int n_max);

 private:
  int n_max_ = 0;
  std::vector<CoefficientRow> rows_;  // rows_[k] holds order k+4
};

// Expand the series through x^n_max.  Requires n_max >= 4 (InvalidRange).
SeriesTable expand_series(int n_max);

}  // namespace rds

#endif  // RDS_GENFUNC_HPP
