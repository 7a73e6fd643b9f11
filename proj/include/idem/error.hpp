#pragma once

#include <stdexcept>
#include <string>

namespace idem {

// Raised when caller-supplied input violates an operation's precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when two independent computations that must agree do not.
// Seeing one of these means a defect in this library, not bad input.
class InternalCheckError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace idem
