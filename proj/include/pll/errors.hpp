#pragma once

#include <stdexcept>

namespace pll {

/// Separatrix tracing left the admissible half-plane (y <= 0 on the branch).
struct trace_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A trajectory reached a non-finite state.
struct integration_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A table lookup fell outside the tabulated range.
struct lookup_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace pll
