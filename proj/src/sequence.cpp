#include "gibsum/sequence.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "gibsum/errors.hpp"

namespace gibsum {

SequenceSpec::SequenceSpec(Int g0, Int g1) : g0_(std::move(g0)), g1_(std::move(g1)) {
  if (sgn(g0_) == 0 && sgn(g1_) == 0) {
    throw DomainError("seeds (G0, G1) must not both be zero");
  }
}

const SequenceSpec& fibonacci_spec() {
  static const SequenceSpec spec(0, 1);
  return spec;
}

const SequenceSpec& lucas_spec() {
  static const SequenceSpec spec(2, 1);
  return spec;
}

std::pair<Int, Int> fib_pair(std::uint64_t m) {
  Int a = 0;  // F_i
  Int b = 1;  // F_{i+1}
  Int c, d;
  for (int bit = std::bit_width(m) - 1; bit >= 0; --bit) {
    // F_{2i} = F_i (2 F_{i+1} - F_i),  F_{2i+1} = F_i^2 + F_{i+1}^2
    c = a * (2 * b - a);
    d = a * a + b * b;
    if ((m >> bit) & 1u) {
      a = d;
      b = c + d;
    } else {
      a = std::move(c);
      b = std::move(d);
    }
  }
  return {a, b};
}

namespace {

std::uint64_t magnitude(Index k) {
  return k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1u
               : static_cast<std::uint64_t>(k);
}

// (F_{k-1}, F_k) for any signed k.
std::pair<Int, Int> fib_prev_and_current(Index k) {
  if (k >= 1) {
    return fib_pair(static_cast<std::uint64_t>(k) - 1);
  }
  // k = -m: F_{-m} = (-1)^{m+1} F_m, F_{-m-1} = (-1)^m F_{m+1}.
  const std::uint64_t m = magnitude(k);
  auto [fm, fm1] = fib_pair(m);
  if (m % 2 == 0) {
    return {fm1, -fm};
  }
  return {-fm1, fm};
}

}  // namespace

Int term(const SequenceSpec& spec, Index k) {
  auto [prev, cur] = fib_prev_and_current(k);
  return spec.g1() * cur + spec.g0() * prev;
}

Int term_naive(const SequenceSpec& spec, Index k) {
  Int a = spec.g0();
  Int b = spec.g1();
  if (k >= 0) {
    for (Index i = 0; i < k; ++i) {
      Int next = a + b;
      a = std::move(b);
      b = std::move(next);
    }
    return a;
  }
  // Walk backwards: (a, b) = (G_i, G_{i+1}) -> (G_{i-1}, G_i).
  for (Index i = 0; i > k; --i) {
    Int prev = b - a;
    b = std::move(a);
    a = std::move(prev);
  }
  return a;
}

Int characteristic_e(const SequenceSpec& spec) {
  const Int& g0 = spec.g0();
  const Int& g1 = spec.g1();
  return g0 * g0 - g1 * g1 + g0 * g1;
}

Int fib(Index k) { return term(fibonacci_spec(), k); }

Int lucas(Index k) { return term(lucas_spec(), k); }

TermWindow::TermWindow(const SequenceSpec& spec, Index first, std::size_t count)
    : first_(first) {
  if (count == 0) return;
  checked_add(first, static_cast<Index>(count) - 1);
  values_.reserve(count);
  values_.push_back(term(spec, first));
  if (count == 1) return;
  values_.push_back(term(spec, first + 1));
  for (std::size_t i = 2; i < count; ++i) {
    values_.push_back(values_[i - 1] + values_[i - 2]);
  }
}

const Int& TermWindow::operator[](Index k) const {
  if (k < first_ || k > last()) {
    throw std::out_of_range("TermWindow: index " + std::to_string(k) +
                            " outside [" + std::to_string(first_) + ", " +
                            std::to_string(last()) + "]");
  }
  return values_[static_cast<std::size_t>(k - first_)];
}

std::optional<Index> zero_index(const SequenceSpec& spec) {
  const Int a0 = abs(spec.g0());
  const Int a1 = abs(spec.g1());
  const Int& largest = a0 > a1 ? a0 : a1;
  const Index bits = static_cast<Index>(mpz_sizeinbase(largest.get_mpz_t(), 2));
  // log_phi(2) < 1.45, so |z| <= 1.45 * bits + 3 for any zero at z.
  const Index bound = 2 * bits + 8;
  TermWindow window(spec, -bound, static_cast<std::size_t>(2 * bound + 1));
  for (Index k = -bound; k <= bound; ++k) {
    if (sgn(window[k]) == 0) return k;
  }
  return std::nullopt;
}

std::optional<Index> first_zero_in(const SequenceSpec& spec, Index lo, Index hi) {
  const auto z = zero_index(spec);
  if (z && *z >= lo && *z <= hi) return z;
  return std::nullopt;
}

std::pair<Index, Index> reciprocal_window(Index t, Index n) {
  const Index end = checked_add(t, n);
  return {std::min(t, end), checked_add(std::max(t, end), 2)};
}

Index checked_add(Index a, Index b) {
  Index out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw DomainError("index arithmetic overflow: " + std::to_string(a) + " + " +
                      std::to_string(b));
  }
  return out;
}

}  // namespace gibsum
