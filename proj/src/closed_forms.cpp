#include "gibsum/closed_forms.hpp"

#include <string>

#include "gibsum/errors.hpp"

namespace gibsum {

namespace {

Int pow_int(const Int& base, unsigned long exp) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

Int square(const Int& x) { return x * x; }

// (G_k G_{k+1} G_{k+2})^2 from a window containing [k, k+2].
Int triple_product_squared(const TermWindow& g, Index k) {
  return square(g[k] * g[k + 1] * g[k + 2]);
}

void require_nonnegative(Index n, const char* what) {
  if (n < 0) {
    throw DomainError(std::string(what) + ": n must be >= 0, got " + std::to_string(n));
  }
}

void require_positive(Index n, const char* what) {
  if (n < 1) {
    throw DomainError(std::string(what) + ": n must be >= 1, got " + std::to_string(n));
  }
}

}  // namespace

Int sum_squares_closed(const SequenceSpec& spec, ShiftedRange r) {
  const Index end = checked_add(r.n, r.t);
  const TermWindow lo(spec, r.t, 2);
  const TermWindow hi(spec, end, 2);
  return hi[end] * hi[end + 1] - lo[r.t] * lo[r.t + 1];
}

Int sum_sixth_closed(const SequenceSpec& spec, ShiftedRange r) {
  const Index end = checked_add(r.n, r.t);
  const TermWindow lo(spec, checked_add(r.t, -1), 5);
  const TermWindow hi(spec, checked_add(end, -1), 5);
  const Int e = characteristic_e(spec);

  auto boundary = [&](const TermWindow& g, Index k) -> Int {
    return pow_int(g[k], 5) * g[k + 3];
  };
  auto neighbour = [&](const TermWindow& g, Index k) -> Int {
    return g[k] * (g[k + 1] + g[k - 1]);
  };

  const Int numerator = boundary(hi, end) - boundary(lo, r.t) +
                        e * e * (neighbour(hi, end) - neighbour(lo, r.t));
  return exact_divide(numerator, 4, "sum_sixth_closed");
}

Int fib_sixth_closed(ShiftedRange r) {
  const Index end = checked_add(r.n, r.t);
  const TermWindow lo(fibonacci_spec(), r.t, 4);
  const TermWindow hi(fibonacci_spec(), end, 4);
  const Int numerator = pow_int(hi[end], 5) * hi[end + 3] -
                        pow_int(lo[r.t], 5) * lo[r.t + 3] +
                        fib(checked_add(end, end)) - fib(checked_add(r.t, r.t));
  return exact_divide(numerator, 4, "fib_sixth_closed");
}

Int lucas_sixth_closed(ShiftedRange r) {
  const Index end = checked_add(r.n, r.t);
  const TermWindow lo(lucas_spec(), r.t, 4);
  const TermWindow hi(lucas_spec(), end, 4);
  const Int numerator = pow_int(hi[end], 5) * hi[end + 3] -
                        pow_int(lo[r.t], 5) * lo[r.t + 3] +
                        125 * (fib(checked_add(end, end)) - fib(checked_add(r.t, r.t)));
  return exact_divide(numerator, 4, "lucas_sixth_closed");
}

Ratio alt_sum_fifth_closed(const SequenceSpec& spec, ShiftedRange r) {
  const Index end = checked_add(r.n, r.t);
  const TermWindow lo(spec, r.t, 3);
  const TermWindow hi(spec, end, 3);
  const Ratio half(1, 2);

  Ratio value = half * Ratio(sign_pow(r.n + 1) * triple_product_squared(hi, end));
  value += half * Ratio(triple_product_squared(lo, r.t));
  value += Ratio(sign_pow(r.n) * pow_int(hi[end + 1], 4) * square(hi[end]));
  value -= Ratio(pow_int(lo[r.t + 1], 4) * square(lo[r.t]));
  value.to_integer("alt_sum_fifth_closed");
  return value;
}

Ratio fib_alt_f5l_closed(Index n) {
  require_nonnegative(n, "fib_alt_f5l_closed");
  const TermWindow f(fibonacci_spec(), n, 4);
  const Int body = square(f[n]) * square(f[n + 1]) * (square(f[n + 1]) - f[n] * f[n + 3]);
  Ratio value = Ratio(sign_pow(n) * body, 2);
  value.to_integer("fib_alt_f5l_closed");
  return value;
}

Ratio lucas_alt_l5f_closed(Index n) {
  require_nonnegative(n, "lucas_alt_l5f_closed");
  const TermWindow l(lucas_spec(), n, 4);
  const Int body = square(l[n]) * square(l[n + 1]) * (square(l[n + 1]) - l[n] * l[n + 3]);
  Ratio value = Ratio(sign_pow(n) * body, 10) + Ratio(14, 5);
  value.to_integer("lucas_alt_l5f_closed");
  return value;
}

Int sum_cubes_product_closed(const SequenceSpec& spec, ShiftedRange r) {
  const Index end = checked_add(r.n, r.t);
  const TermWindow lo(spec, r.t, 3);
  const TermWindow hi(spec, end, 3);
  return exact_divide(triple_product_squared(hi, end) - triple_product_squared(lo, r.t), 4,
                      "sum_cubes_product_closed");
}

Ratio recip_sum_closed(const SequenceSpec& spec, ShiftedRange r) {
  const auto [first, last] = reciprocal_window(r.t, r.n);
  if (const auto zero = first_zero_in(spec, first, last)) {
    throw ZeroDenominatorError(*zero);
  }
  const Index end = r.t + r.n;
  const TermWindow lo(spec, r.t, 3);
  const TermWindow hi(spec, end, 3);
  return Ratio(1, 4) * (Ratio(1, triple_product_squared(lo, r.t)) -
                        Ratio(1, triple_product_squared(hi, end)));
}

Int treeby_f3_closed(Index n) {
  require_nonnegative(n, "treeby_f3_closed");
  const TermWindow f(fibonacci_spec(), n, 3);
  return exact_divide(triple_product_squared(f, n), 4, "treeby_f3_closed");
}

Int treeby_l3_closed(Index n) {
  require_nonnegative(n, "treeby_l3_closed");
  const TermWindow l(lucas_spec(), n, 3);
  return exact_divide(triple_product_squared(l, n), 4, "treeby_l3_closed") - 9;
}

Ratio recip_fib_special(Index n) {
  require_positive(n, "recip_fib_special");
  const TermWindow f(fibonacci_spec(), checked_add(n, 1), 3);
  return Ratio(1, 4) * (Ratio(1, 4) - Ratio(1, triple_product_squared(f, n + 1)));
}

Ratio recip_lucas_special(Index n) {
  require_positive(n, "recip_lucas_special");
  const TermWindow l(lucas_spec(), checked_add(n, 1), 3);
  return Ratio(1, 4) * (Ratio(1, 144) - Ratio(1, triple_product_squared(l, n + 1)));
}

}  // namespace gibsum
