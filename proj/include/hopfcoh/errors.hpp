#pragma once

#include <stdexcept>
#include <string>

namespace hopfcoh {

// Malformed arguments: wrong dimensions, n = 0 where n >= 1 is required, bad
// ring for the requested construction, unparsable definition files.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A documented precondition of an operation does not hold (invalid bicomodule
// passed to induced(), relations not contained in the subspace, ...).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An internal invariant failed at runtime (d^2 != 0, a structure map that
// should descend to a quotient does not). Always signals a bug or a base
// object outside the supported class.
class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hopfcoh
