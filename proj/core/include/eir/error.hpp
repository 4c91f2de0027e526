#pragma once

#include <stdexcept>
#include <string>

namespace eir {

/// Malformed or out-of-domain input: unknown vertex, self-loop, bad syntax,
/// an ideal that violates an operation's precondition.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured cap was exceeded (vertex count, generator count for the
/// Taylor oracle, sampling budget).
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace eir
