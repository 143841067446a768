#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "errors.hpp"

namespace kspec {

/// Guard rails for the combinatorial kernels. Enumerations estimate their
/// search space up front and throw ResourceError instead of hanging.
/// All limits are mutable through budget(); the CLI additionally honours
/// the CS_MAX_BUDGET environment variable for max_ops.
struct Budget {
  std::uint64_t max_ops = 100000000ULL;  // brute-force search space bound (10^8)
  std::size_t max_enum_size = 32;        // universe bound for hom/congruence enumeration
  std::size_t max_closed_sets = 1u << 16;  // closure-family blow-up bound
  std::size_t max_universe = 4096;       // bound for constructed algebras
};

inline Budget& budget() {
  static Budget b;
  return b;
}

inline void guard_ops(double estimated, const std::string& what) {
  if (estimated > static_cast<double>(budget().max_ops)) {
    throw ResourceError(what + ": estimated search space exceeds budget of " +
                        std::to_string(budget().max_ops) + " operations");
  }
}

inline void guard_enum_size(std::size_t n, const std::string& what) {
  if (n > budget().max_enum_size) {
    throw ResourceError(what + ": universe of size " + std::to_string(n) +
                        " exceeds enumeration bound " +
                        std::to_string(budget().max_enum_size));
  }
}

inline void guard_universe(std::size_t n, const std::string& what) {
  if (n > budget().max_universe) {
    throw ResourceError(what + ": universe of size " + std::to_string(n) +
                        " exceeds construction bound " +
                        std::to_string(budget().max_universe));
  }
}

inline void guard_closed_sets(std::size_t n, const std::string& what) {
  if (n > budget().max_closed_sets) {
    throw ResourceError(what + ": closed family of size " + std::to_string(n) +
                        " exceeds bound " +
                        std::to_string(budget().max_closed_sets));
  }
}

}  // namespace kspec
