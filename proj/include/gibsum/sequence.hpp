#pragma once

// Generalized Fibonacci ("gibonacci") sequences over signed indices.
//
// A sequence is fixed by its seeds G_0 and G_1 and extends in both
// directions through G_{k+2} = G_{k+1} + G_k. Every such sequence is a
// combination of Fibonacci numbers, G_k = G_1 F_k + G_0 F_{k-1}, which is
// what the fast evaluator uses.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gibsum/exact.hpp"

namespace gibsum {

/// Sequence position. Any value in the signed 64-bit range is valid.
using Index = std::int64_t;

/// Seeds (G_0, G_1) of a generalized Fibonacci sequence, not both zero.
class SequenceSpec {
 public:
  /// Throws DomainError when both seeds are zero.
  SequenceSpec(Int g0, Int g1);

  const Int& g0() const { return g0_; }
  const Int& g1() const { return g1_; }

  /// The sequence advanced by one position: seeds (G_1, G_0 + G_1).
  SequenceSpec shifted() const { return SequenceSpec(g1_, g0_ + g1_); }

  friend bool operator==(const SequenceSpec&, const SequenceSpec&) = default;

 private:
  Int g0_;
  Int g1_;
};

const SequenceSpec& fibonacci_spec();
const SequenceSpec& lucas_spec();

/// G_k in O(log|k|) big-integer operations.
Int term(const SequenceSpec& spec, Index k);

/// G_k by |k| applications of the recurrence from the seeds.
Int term_naive(const SequenceSpec& spec, Index k);

/// e = G_0^2 - G_1^2 + G_0 G_1. Nonzero for every valid integer spec.
Int characteristic_e(const SequenceSpec& spec);

Int fib(Index k);
Int lucas(Index k);

/// (F_m, F_{m+1}) by fast doubling.
std::pair<Int, Int> fib_pair(std::uint64_t m);

/// Consecutive terms G_first .. G_{first+count-1}. Two fast evaluations,
/// then the recurrence.
class TermWindow {
 public:
  TermWindow(const SequenceSpec& spec, Index first, std::size_t count);

  /// G_k; k must lie inside the window.
  const Int& operator[](Index k) const;

  Index first() const { return first_; }
  Index last() const { return first_ + static_cast<Index>(values_.size()) - 1; }

 private:
  Index first_;
  std::vector<Int> values_;
};

/// The index of the (unique, if any) zero term of the sequence. A nonzero
/// gibonacci sequence is c * F_{k-z} up to shift, so it vanishes at most
/// once, within O(log max(|G_0|, |G_1|)) positions of the origin.
std::optional<Index> zero_index(const SequenceSpec& spec);

/// Smallest k in [lo, hi] with G_k = 0.
std::optional<Index> first_zero_in(const SequenceSpec& spec, Index lo, Index hi);

/// Index range [lo, hi] touched by the reciprocal sum with shift t and length
/// n, covering both boundary triples and every summand window.
std::pair<Index, Index> reciprocal_window(Index t, Index n);

/// a + b, throwing DomainError when the result leaves the Index range.
Index checked_add(Index a, Index b);

/// (-1)^k as +1 or -1.
inline int sign_pow(Index k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace gibsum
