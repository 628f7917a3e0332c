#ifndef RDS_RECURRENCE_HPP
#define RDS_RECURRENCE_HPP

#include <utility>
#include <vector>

#include "rds/row.hpp"

namespace rds {

// Restrained domination number of the cycle: n - 2*floor(n/3).
// Orders 1 and 2 are permitted as the formal seed values 1 and 2.
int gamma_r(int n);

// d_r(C_n, i) == 0  iff  i > n, or i < gamma_r(n), or n - i is odd.
bool is_empty_class(int n, int i);

// Number of nonzero counts in row n: 1 + floor(n/3).  Requires n >= 3.
int term_count(int n);

// Row n of the count triangle, computed bottom-up from the seed rows
//   row(1) = {1:1}, row(2) = {2:1}, row(3) = {1:3, 3:1}
// by row(n)(i) = row(n-1)(i-1) + row(n-3)(i-1), keeping only a three-row
// window in memory (rows are O(n/3) entries, so this handles n in the
// thousands comfortably).
CoefficientRow rdp_row(int n);

// S_n: total number of restrained dominating sets of C_n, via the row-total
// recurrence S_n = S_{n-1} + S_{n-3} with S_1 = 1, S_2 = 1, S_3 = 4.
Count total_rds_count(int n);

// The polynomial sum_i d_r(C_n, i) x^i as a sparse coefficient list,
// ascending by exponent.
struct RdPolynomial {
  int order = 0;
  std::vector<std::pair<int, Count>> coeffs;
  bool operator==(const RdPolynomial&) const = default;
};

RdPolynomial rdp_polynomial(int n);

// Monotonically growing cache of completed rows for sweeps that revisit many
// orders.  Rows are immutable once computed.  Not thread-safe; use one
// instance per thread.
class RowCache {
 public:
  const CoefficientRow& row(int n);  // n >= 1
  // d_r(C_n, i), with orders <= 0 counting as 0 for every i so that identity
  // sweeps can index freely across the boundary.
  Count count(int n, int i);

 private:
  std::vector<CoefficientRow> rows_;  // rows_[k] holds order k+1
};

}  // namespace rds

#endif  // RDS_RECURRENCE_HPP
