#pragma once

#include <stdexcept>

namespace subshift {

// Bad user-supplied data: unknown letters, spec mismatches, malformed shapes.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A word or point was rejected by a budgeted membership check.
struct MembershipError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A required reference leaves the finite window.
struct BoundaryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operation's stated precondition does not hold.
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Instance too large for exhaustive search.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// States that should be unreachable for well-formed inputs.
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace subshift
