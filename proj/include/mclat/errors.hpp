#pragma once

#include <stdexcept>
#include <string>

namespace mclat {

// Raised when an operation would exceed a configured feasibility cap
// (enumeration size, sieve range, ground-set size, ...). Callers can
// catch this separately from hard input errors; the CLI maps it to
// exit code 2.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mclat
