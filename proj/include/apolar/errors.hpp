#pragma once

#include <stdexcept>
#include <string>

namespace apolar {

/// Malformed input: wrong dimensions, mismatched spaces, bad text.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A linear map that has to be invertible is not (degenerate form, singular
/// substitution, dependent squares).
class DegenerateError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The numeric solver could not produce a solution below tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace apolar
