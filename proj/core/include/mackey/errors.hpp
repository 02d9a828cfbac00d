#ifndef MACKEY_ERRORS_HPP
#define MACKEY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mackey {

/// Bad user input: malformed group specs, unknown rings, inadmissible
/// ring/family pairings, violated preconditions. The CLI maps this to exit 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A mathematical invariant the library relies on did not hold. Always a bug.
/// The CLI maps this to exit 1.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace mackey

#endif  // MACKEY_ERRORS_HPP
