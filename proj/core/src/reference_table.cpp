#include "rds/reference_table.hpp"

#include <string>

#include "rds/errors.hpp"

namespace rds {

const std::vector<std::vector<long>>& reference_table() {
  // d_r(C_n, i) for n = 1..23, i = 1..n.  Pinned reference data; nothing in
  // this library computes these, every engine is compared against them.
  static const std::vector<std::vector<long>> rows = {
      {1},
      {0, 1},
      {3, 0, 1},
      {0, 4, 0, 1},
      {0, 0, 5, 0, 1},
      {0, 3, 0, 6, 0, 1},
      {0, 0, 7, 0, 7, 0, 1},
      {0, 0, 0, 12, 0, 8, 0, 1},
      {0, 0, 3, 0, 18, 0, 9, 0, 1},
      {0, 0, 0, 10, 0, 25, 0, 10, 0, 1},
      {0, 0, 0, 0, 22, 0, 33, 0, 11, 0, 1},
      {0, 0, 0, 3, 0, 40, 0, 42, 0, 12, 0, 1},
      {0, 0, 0, 0, 13, 0, 65, 0, 52, 0, 13, 0, 1},
      {0, 0, 0, 0, 0, 35, 0, 98, 0, 63, 0, 14, 0, 1},
      {0, 0, 0, 0, 3, 0, 75, 0, 140, 0, 75, 0, 15, 0, 1},
      {0, 0, 0, 0, 0, 16, 0, 140, 0, 192, 0, 88, 0, 16, 0, 1},
      {0, 0, 0, 0, 0, 0, 51, 0, 238, 0, 255, 0, 102, 0, 17, 0, 1},
      {0, 0, 0, 0, 0, 3, 0, 126, 0, 378, 0, 330, 0, 117, 0, 18, 0, 1},
      {0, 0, 0, 0, 0, 0, 19, 0, 266, 0, 570, 0, 418, 0, 133, 0, 19, 0, 1},
      {0, 0, 0, 0, 0, 0, 0, 70, 0, 504, 0, 825, 0, 520, 0, 150, 0, 20, 0, 1},
      {0, 0, 0, 0, 0, 0, 3, 0, 196, 0, 882, 0, 1155, 0, 637, 0, 168, 0, 21,
       0, 1},
      {0, 0, 0, 0, 0, 0, 0, 22, 0, 462, 0, 1452, 0, 1573, 0, 770, 0, 187, 0,
       22, 0, 1},
      {0, 0, 0, 0, 0, 0, 0, 0, 92, 0, 966, 0, 2277, 0, 2093, 0, 920, 0, 207,
       0, 23, 0, 1},
  };
  return rows;
}

long reference_count(int n, int i) {
  if (n < 1 || n > kReferenceTableMaxOrder)
    throw InvalidRange("reference triangle covers orders 1.." +
                       std::to_string(kReferenceTableMaxOrder) + ", got " +
                       std::to_string(n));
  if (i < 1 || i > n) return 0;
  return reference_table()[static_cast<std::size_t>(n) - 1]
                          [static_cast<std::size_t>(i) - 1];
}

int reference_nonzero_entries() {
  static const int entries = [] {
    int total = 0;
    for (const auto& row : reference_table())
      for (long c : row)
        if (c != 0) ++total;
    return total;
  }();
  return entries;
}

}  // namespace rds
