#pragma once

#include <stdexcept>
#include <string>

namespace surfcalc {

// Malformed input: bad files, dimension mismatches, violated preconditions.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal identity failed to hold. Always a bug.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace surfcalc
