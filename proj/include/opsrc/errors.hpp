#pragma once

#include <stdexcept>
#include <string>

namespace opsrc {

// Bad arguments, malformed inputs, precondition violations. CLI exit code 1.
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Numerical failures: solver non-convergence, infeasible problems,
// eigendecomposition breakdown. CLI exit code 2.
class NumericalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Filesystem failures while writing outputs. CLI exit code 2.
class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace opsrc
