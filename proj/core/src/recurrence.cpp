#include "rds/recurrence.hpp"

#include <string>
#include <utility>

#include "rds/errors.hpp"

namespace rds {

namespace {

CoefficientRow seed_row(int n) {
  CoefficientRow r{n, {}};
  switch (n) {
    case 1: r.counts = {{1, 1}}; break;
    case 2: r.counts = {{2, 1}}; break;
    default: r.counts = {{1, 3}, {3, 1}}; break;  // n == 3
  }
  return r;
}

// row(n)(i) = row(n-1)(i-1) + row(n-3)(i-1)
CoefficientRow step(const CoefficientRow& prev1, const CoefficientRow& prev3) {
  CoefficientRow next{prev1.order + 1, {}};
  for (const auto& [i, c] : prev1.counts) next.add(i + 1, c);
  for (const auto& [i, c] : prev3.counts) next.add(i + 1, c);
  return next;
}

void require_order(int n, int least) {
  if (n < least)
    throw InvalidOrder("order must be >= " + std::to_string(least) +
                       ", got " + std::to_string(n));
}

}  // namespace

int gamma_r(int n) {
  require_order(n, 1);
  return n - 2 * (n / 3);
}

bool is_empty_class(int n, int i) {
  require_order(n, 1);
  return i > n || i < gamma_r(n) || (n - i) % 2 != 0;
}

int term_count(int n) {
  require_order(n, 3);
  return 1 + n / 3;
}

CoefficientRow rdp_row(int n) {
  require_order(n, 1);
  if (n <= 3) return seed_row(n);
  CoefficientRow back3 = seed_row(1);
  CoefficientRow back2 = seed_row(2);
  CoefficientRow back1 = seed_row(3);
  for (int m = 4; m <= n; ++m) {
    CoefficientRow next = step(back1, back3);
    back3 = std::move(back2);
    back2 = std::move(back1);
    back1 = std::move(next);
  }
  return back1;
}

Count total_rds_count(int n) {
  require_order(n, 1);
  Count back3 = 1, back2 = 1, back1 = 4;  // S_1, S_2, S_3
  if (n == 1) return back3;
  if (n == 2) return back2;
  for (int m = 4; m <= n; ++m) {
    Count next = back1 + back3;
    back3 = std::move(back2);
    back2 = std::move(back1);
    back1 = std::move(next);
  }
  return back1;
}

RdPolynomial rdp_polynomial(int n) {
  CoefficientRow row = rdp_row(n);
  RdPolynomial p{n, {}};
  p.coeffs.reserve(row.counts.size());
  for (auto& [i, c] : row.counts) p.coeffs.emplace_back(i, std::move(c));
  return p;
}

const CoefficientRow& RowCache::row(int n) {
  require_order(n, 1);
  while (static_cast<int>(rows_.size()) < n) {
    const int m = static_cast<int>(rows_.size()) + 1;
    if (m <= 3) {
      rows_.push_back(seed_row(m));
    } else {
      rows_.push_back(step(rows_[static_cast<std::size_t>(m) - 2],
                           rows_[static_cast<std::size_t>(m) - 4]));
    }
  }
  return rows_[static_cast<std::size_t>(n) - 1];
}

Count RowCache::count(int n, int i) {
  if (n <= 0) return 0;
  return row(n).at(i);
}

}  // namespace rds
