#pragma once

#include <stdexcept>
#include <string>

namespace strops {

// Raised for every violated mathematical precondition (bad presentation,
// unavailable duality, unknown catalog entry, ...). The CLI maps it to exit 2.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace strops
