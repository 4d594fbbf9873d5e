#pragma once

// Brute-force left-hand sides: term-by-term summation that never consults a
// closed form. Ground truth for the verifier.

#include <string_view>

#include "gibsum/closed_forms.hpp"
#include "gibsum/exact.hpp"
#include "gibsum/sequence.hpp"

namespace gibsum {

enum class SummandKind {
  kSixthPower,          // G_{j+t}^6
  kSquare,              // G_{j+t}^2
  kAltFifthNeighbor,    // (-1)^{j-1} G_{j+t}^5 (G_{j+t+1} + G_{j+t-1})
  kCubeProduct,         // G_{j+t}^3 G_{j+t+1}^3
  kReciprocalWindow,    // 1 / (G_{j+t-1}^2 G_{j+t} G_{j+t+1} G_{j+t+2}^2)
};

std::string_view to_string(SummandKind kind);

/// The j-th summand. Throws ZeroDenominatorError for a reciprocal summand
/// whose window [j+t-1, j+t+2] contains a zero term.
Ratio oracle_term(SummandKind kind, const SequenceSpec& spec, Index t, Index j);

/// sum_{j=1}^{n} summand(j) for n >= 0, and -sum_{j=n+1}^{0} summand(j) for
/// n < 0. Reciprocal sums first scan reciprocal_window(t, n) term by term and
/// throw ZeroDenominatorError at the smallest zero index found.
Ratio oracle_sum(SummandKind kind, const SequenceSpec& spec, ShiftedRange r);

}  // namespace gibsum
