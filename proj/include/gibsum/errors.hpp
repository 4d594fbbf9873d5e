#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gibsum {

/// A reciprocal summand or closed form would divide by a zero term.
class ZeroDenominatorError : public std::domain_error {
 public:
  explicit ZeroDenominatorError(std::int64_t index)
      : std::domain_error("zero term at index " + std::to_string(index)),
        index_(index) {}

  std::int64_t index() const noexcept { return index_; }

 private:
  std::int64_t index_;
};

/// A closed form that must be integer-valued was not. Always a bug.
class IntegralityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Input outside an operation's domain (invalid seeds, negative n for a
/// special case, index arithmetic leaving the machine range).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnknownIdentityError : public std::invalid_argument {
 public:
  explicit UnknownIdentityError(const std::string& id)
      : std::invalid_argument("unknown identity '" + id + "'") {}
};

}  // namespace gibsum
