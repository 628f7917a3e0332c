#ifndef RDS_REFERENCE_TABLE_HPP
#define RDS_REFERENCE_TABLE_HPP

#include <vector>

namespace rds {

// Pinned reference triangle of d_r(C_n, i) for 1 <= n <= 23, zeros included:
// reference_table()[n-1][i-1] is the count at cardinality i.  The values are
// fixed data, independent of every computing engine in this library; the
// verifier compares all engines against them cell by cell.
inline constexpr int kReferenceTableMaxOrder = 23;

const std::vector<std::vector<long>>& reference_table();

// Single cell; 0 for i outside 1..n.  Requires 1 <= n <= 23 (InvalidRange).
long reference_count(int n, int i);

// Number of nonzero cells in the triangle (counted at ingestion, not assumed).
int reference_nonzero_entries();

}  // namespace rds

#endif  // RDS_REFERENCE_TABLE_HPP
