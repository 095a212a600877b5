#pragma once

#include <stdexcept>
#include <string>

namespace chroma {

// Operand shapes do not match (matrix/vector dimension contracts).
struct dimension_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Requested rotation order is not realizable in the requested setting,
// e.g. a 2x2 integer representation of C_5.
struct restriction_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Brute-force enumeration would exceed the configured point budget.
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A computed restriction number disagrees with the closed form. This is a
// theorem-level regression, never a user error.
struct regression_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace chroma
