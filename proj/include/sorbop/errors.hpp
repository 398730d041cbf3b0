#pragma once

#include <stdexcept>

namespace sorbop {

// Error categories map 1:1 onto CLI exit codes:
// validation -> 2, numerical -> 3, io -> 4.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace sorbop
