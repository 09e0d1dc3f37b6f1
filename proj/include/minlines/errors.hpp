#pragma once

#include <stdexcept>
#include <string>

namespace minlines {

/// Input violates an operation's documented precondition (bad type string,
/// word not in W^I, non-minuscule space, ...). The CLI maps this to exit 2.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Enumeration of a Weyl group (or subgroup) would exceed the configured cap.
class CapExceededError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A combinatorial identity that must hold for valid input failed. Signals a
/// bug rather than bad input; the CLI maps this to exit 1.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {
inline void require(bool cond, const std::string& what) {
  if (!cond) throw PreconditionError(what);
}
inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw ConsistencyError(what);
}
}  // namespace detail

}  // namespace minlines
