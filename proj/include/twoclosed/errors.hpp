#pragma once

#include <stdexcept>
#include <string>

namespace twoclosed {

/// Bad input parameters (non-prime characteristic, standard-form violation,
/// malformed descriptor). The CLI maps this to exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A structural precondition of an operation does not hold (intransitive
/// group, wrong rank for a shortcut). The CLI maps this to exit code 3.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace twoclosed
