#pragma once

#include <stdexcept>
#include <string>

namespace zsg {

// Malformed or out-of-contract input: bad files, bad flags, violated
// preconditions. The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// An internal guarantee did not hold (reconstruction found no candidate,
// certificate mismatch, pivot budget exceeded). Exit code 3.
class BoundViolation : public std::runtime_error {
 public:
  explicit BoundViolation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace zsg
