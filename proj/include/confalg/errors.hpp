#pragma once

#include <stdexcept>
#include <string>

namespace confalg {

/// Malformed input: unparsable literal, unknown variable, wrong arity.
class InputError : public std::invalid_argument {
public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A mathematical precondition does not hold (point outside the space,
/// pole of a balanced function, constraint on automorphism parameters).
class DomainError : public std::domain_error {
public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace confalg
