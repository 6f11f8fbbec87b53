#pragma once

#include <stdexcept>
#include <string>

namespace qsieve {

// A violated precondition on caller-supplied input. The CLI maps this to a
// usage error (exit status 2).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A modulus whose structure the Dirichlet-character oracle does not handle
// (powers of two above 4).
class UnsupportedModulus : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A numerical procedure that failed to reach its target accuracy, or an I/O
// failure while persisting a report. The CLI maps this to exit status 1.
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qsieve
