#pragma once

#include <stdexcept>
#include <string>

namespace bcast2 {

/// Malformed input or a violated precondition (bad file, not a tree, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An instance exceeds a configured size guard.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bcast2
