#pragma once

#include <stdexcept>
#include <string>

namespace flagfpt {

/// An input violates an operation's precondition (bad rank, index out of
/// range, unsupported weight shape, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation method does not apply to the query. Not a failure of the
/// query itself; the dispatcher skips the method.
class MethodUnavailable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A poset handed to a lattice-only algorithm has a pair without a unique
/// least upper bound.
class NotALatticeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent methods produced different values for the same query.
class DisagreementError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace flagfpt
