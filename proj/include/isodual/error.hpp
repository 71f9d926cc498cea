#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace isodual {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when an enumeration would exceed its configured cap.
// partial_count reports how far the computation got before giving up.
struct CapExceeded : Error {
  CapExceeded(const std::string& msg, std::size_t partial)
      : Error(msg), partial_count(partial) {}
  std::size_t partial_count = 0;
};

}  // namespace isodual
