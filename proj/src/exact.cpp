#include "gibsum/exact.hpp"

#include <stdexcept>

#include "gibsum/errors.hpp"

namespace gibsum {

Ratio::Ratio(const Int& num, const Int& den) : value_(num, den) {
  if (sgn(den) == 0) {
    throw std::domain_error("Ratio: zero denominator");
  }
  value_.canonicalize();
}

Int Ratio::to_integer(const char* context) const {
  if (!is_integer()) {
    throw IntegralityError(std::string(context) + ": expected an integer, got " +
                           to_string());
  }
  return num();
}

std::string Ratio::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

// mpq_class arithmetic keeps canonical form except for division by zero,
// which GMP does not trap on its own.
Ratio& Ratio::operator+=(const Ratio& o) {
  value_ += o.value_;
  return *this;
}

Ratio& Ratio::operator-=(const Ratio& o) {
  value_ -= o.value_;
  return *this;
}

Ratio& Ratio::operator*=(const Ratio& o) {
  value_ *= o.value_;
  return *this;
}

Ratio& Ratio::operator/=(const Ratio& o) {
  if (o.is_zero()) throw std::domain_error("Ratio: division by zero");
  value_ /= o.value_;
  return *this;
}

Int exact_divide(const Int& numerator, unsigned long divisor,
                 const char* context) {
  if (!mpz_divisible_ui_p(numerator.get_mpz_t(), divisor)) {
    throw IntegralityError(std::string(context) + ": numerator " +
                           numerator.get_str() + " not divisible by " +
                           std::to_string(divisor));
  }
  Int q;
  mpz_divexact_ui(q.get_mpz_t(), numerator.get_mpz_t(), divisor);
  return q;
}

std::string to_string(const Int& value) { return value.get_str(); }

Int parse_int(const std::string& text) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("not an integer: '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw std::invalid_argument("not an integer: '" + text + "'");
    }
  }
  return Int(text[0] == '+' ? text.substr(1) : text, 10);
}

std::size_t decimal_digits(const Int& value) {
  // mpz_sizeinbase may overestimate by one for base 10.
  if (sgn(value) == 0) return 1;
  Int mag = abs(value);
  return mag.get_str().size();
}

}  // namespace gibsum
