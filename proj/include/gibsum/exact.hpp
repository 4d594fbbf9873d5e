#pragma once

// Exact integer and rational value types.

#include <gmpxx.h>

#include <string>

namespace gibsum {

/// Arbitrary-precision signed integer used for every sequence term and sum.
using Int = mpz_class;

/// Exact rational in reduced normal form: den > 0, gcd(|num|, den) = 1,
/// zero is 0/1. Two ratios are equal iff their numerators and
/// denominators are equal.
class Ratio {
 public:
  Ratio() = default;
  Ratio(const Int& value) : value_(value) {}  // NOLINT(implicit)
  Ratio(long value) : value_(value) {}        // NOLINT(implicit)
  Ratio(const Int& num, const Int& den);

  Int num() const { return value_.get_num(); }
  Int den() const { return value_.get_den(); }

  bool is_integer() const { return value_.get_den() == 1; }
  bool is_zero() const { return sgn(value_) == 0; }

  /// Numerator of an integer-valued ratio; throws IntegralityError otherwise.
  Int to_integer(const char* context) const;

  /// Decimal integer when den == 1, otherwise "p/q".
  std::string to_string() const;

  Ratio& operator+=(const Ratio& o);
  Ratio& operator-=(const Ratio& o);
  Ratio& operator*=(const Ratio& o);
  Ratio& operator/=(const Ratio& o);

  friend Ratio operator+(Ratio a, const Ratio& b) { return a += b; }
  friend Ratio operator-(Ratio a, const Ratio& b) { return a -= b; }
  friend Ratio operator*(Ratio a, const Ratio& b) { return a *= b; }
  friend Ratio operator/(Ratio a, const Ratio& b) { return a /= b; }
  friend Ratio operator-(Ratio a) {
    a.value_ = -a.value_;
    return a;
  }

  friend bool operator==(const Ratio& a, const Ratio& b) {
    return a.value_ == b.value_;
  }

 private:
  mpq_class value_;
};

/// Divides `numerator` by `divisor` exactly, throwing IntegralityError when
/// the division leaves a remainder.
Int exact_divide(const Int& numerator, unsigned long divisor,
                 const char* context);

std::string to_string(const Int& value);

/// Parses a decimal integer with optional leading sign; throws
/// std::invalid_argument on malformed input.
Int parse_int(const std::string& text);

/// Number of decimal digits in |value| (1 for zero).
std::size_t decimal_digits(const Int& value);

}  // namespace gibsum
