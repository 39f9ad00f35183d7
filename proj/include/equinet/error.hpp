#pragma once

#include <stdexcept>
#include <string>

namespace equinet {

// Bad user input: exit code 1 from the CLI.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Broken internal invariant: exit code 2 from the CLI.
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace equinet
