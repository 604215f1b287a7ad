#pragma once

#include <stdexcept>
#include <string>

namespace pairwalk {

// Malformed input: bad vertex index, duplicate edge, invalid configuration.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A hypothesis required by a construction does not hold on the given input
// (non-twin pair, wrong incidence pattern, time condition not met).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The numerical core failed to meet its own accuracy contract.
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pairwalk
