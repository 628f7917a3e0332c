#ifndef RDS_ERRORS_HPP
#define RDS_ERRORS_HPP

#include <stdexcept>

namespace rds {

// Base class for every domain error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidOrder : Error { using Error::Error; };    // graph order outside its domain
struct InvalidVertex : Error { using Error::Error; };   // vertex label outside 1..n (or malformed set/edge)
struct InvalidRange : Error { using Error::Error; };    // sweep or expansion bound outside its domain
struct OrderTooLarge : Error { using Error::Error; };   // subset enumeration beyond its cutoff
struct NotExpanded : Error { using Error::Error; };     // series queried past its expansion
struct BudgetExceeded : Error { using Error::Error; };  // family construction would exceed the set budget

}  // namespace rds

#endif  // RDS_ERRORS_HPP
