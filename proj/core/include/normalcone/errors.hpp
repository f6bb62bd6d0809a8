#pragma once

#include <stdexcept>
#include <string>

namespace normalcone {

/// A certified degree, order or index would reach the ring's trunc cap.
class TruncationCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation exceeded its work budget (pairs, reductions, search range).
class ResourceExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates an operation's precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two independent algorithms disagreed. Always a bug.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace normalcone
