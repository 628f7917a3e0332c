#include "rds/genfunc.hpp"

#include <string>

#include "rds/errors.hpp"

namespace rds {

const std::map<std::pair<int, int>, long>& numerator_support() {
  // x^4 y^2 (4 + y^2 + xy + 3x^2 + x^2 y^2), expanded monomial by monomial
  static const std::map<std::pair<int, int>, long> support = {
      {{4, 2}, 4}, {{4, 4}, 1}, {{5, 3}, 1}, {{6, 2}, 3}, {{6, 4}, 1}};
  return support;
}

SeriesTable expand_series(int n_max) {
  if (n_max < 4)
    throw InvalidRange("series expansion covers n >= 4, got n_max = " +
                       std::to_string(n_max));
  SeriesTable t;
  t.n_max_ = n_max;
  t.rows_.reserve(static_cast<std::size_t>(n_max) - 3);
  for (int n = 4; n <= n_max; ++n) {
    CoefficientRow row{n, {}};
    // coeff(n,i) = numerator(n,i) + coeff(n-1,i-1) + coeff(n-3,i-1),
    // where rows below order 4 are zero
    if (n - 1 >= 4)
      for (const auto& [i, c] : t.rows_[static_cast<std::size_t>(n) - 5].counts)
        row.add(i + 1, c);
    if (n - 3 >= 4)
      for (const auto& [i, c] : t.rows_[static_cast<std::size_t>(n) - 7].counts)
        row.add(i + 1, c);
    for (const auto& [key, c] : numerator_support())
      if (key.first == n) row.add(key.second, c);
    t.rows_.push_back(std::move(row));
  }
  return t;
}

const CoefficientRow& SeriesTable::row(int n) const {
  if (n < 4 || n > n_max_)
    throw NotExpanded("series row " + std::to_string(n) +
                      " outside expanded range 4.." + std::to_string(n_max_));
  return rows_[static_cast<std::size_t>(n) - 4];
}

Count SeriesTable::coefficient(int n, int i) const {
  return row(n).at(i);
}

}  // namespace rds
