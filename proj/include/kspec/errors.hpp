#pragma once

#include <stdexcept>
#include <string>

namespace kspec {

/// Malformed input: schema violations, arity mismatches, violated preconditions.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A computation refused up front because its estimated cost exceeds the
/// configured budget (see budget.hpp).
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace kspec
