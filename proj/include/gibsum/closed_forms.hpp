#pragma once

// Closed-form right-hand sides of the gibonacci summation identities.
//
// Every general form evaluates S(t, n) = sum_{j=1}^{n} term(j + t) in a
// constant number of O(log|n + t|) term evaluations. For n <= 0 the sums
// follow the partial-sum convention S(0) = 0, S(n) - S(n-1) = term(n), which
// the telescoped closed forms satisfy verbatim for every integer n.
//
// Forms that must be integer-valued are divided exactly and throw
// IntegralityError on a remainder; that can only signal a bug.

#include <array>
#include <string_view>

#include "gibsum/exact.hpp"
#include "gibsum/sequence.hpp"

namespace gibsum {

struct ShiftedRange {
  Index t = 0;
  Index n = 0;
};

/// sum G_{j+t}^2 = G_{n+t} G_{n+t+1} - G_t G_{t+1}
Int sum_squares_closed(const SequenceSpec& spec, ShiftedRange r);

/// sum G_{j+t}^6, via the fifth-power boundary terms and e^2 correction.
Int sum_sixth_closed(const SequenceSpec& spec, ShiftedRange r);

/// sum F_{j+t}^6 using F_{2n+2t} in place of the e^2 term.
Int fib_sixth_closed(ShiftedRange r);

/// sum L_{j+t}^6; the e^2 correction becomes 125 (F_{2n+2t} - F_{2t}) / 4.
Int lucas_sixth_closed(ShiftedRange r);

/// sum (-1)^{j-1} G_{j+t}^5 (G_{j+t+1} + G_{j+t-1}).
Ratio alt_sum_fifth_closed(const SequenceSpec& spec, ShiftedRange r);

/// sum_{j=1}^{n} (-1)^{j-1} F_j^5 L_j, n >= 0.
///
/// The leading sign is (-1)^n; the (-1)^{n+1} of the commonly printed form
/// disagrees with the general alternating identity (n = 1 gives +1).
Ratio fib_alt_f5l_closed(Index n);

/// sum_{j=1}^{n} (-1)^{j-1} L_j^5 F_j, n >= 0, with constant 14/5.
/// Same sign convention as fib_alt_f5l_closed.
Ratio lucas_alt_l5f_closed(Index n);

/// sum G_{j+t}^3 G_{j+t+1}^3 = (P(n+t) - P(t)) / 4, P(k) = (G_k G_{k+1} G_{k+2})^2.
Int sum_cubes_product_closed(const SequenceSpec& spec, ShiftedRange r);

/// sum 1 / (G_{j+t-1}^2 G_{j+t} G_{j+t+1} G_{j+t+2}^2) = (1/P(t) - 1/P(n+t)) / 4.
/// Throws ZeroDenominatorError when a term in reciprocal_window(t, n)
/// vanishes.
Ratio recip_sum_closed(const SequenceSpec& spec, ShiftedRange r);

/// sum_{j=1}^{n} F_j^3 F_{j+1}^3 = F_n^2 F_{n+1}^2 F_{n+2}^2 / 4, n >= 0.
Int treeby_f3_closed(Index n);

/// sum_{j=1}^{n} L_j^3 L_{j+1}^3 = L_n^2 L_{n+1}^2 L_{n+2}^2 / 4 - 9, n >= 0.
Int treeby_l3_closed(Index n);

/// sum_{j=1}^{n} 1 / (F_j^2 F_{j+1} F_{j+2} F_{j+3}^2), n >= 1.
Ratio recip_fib_special(Index n);

/// sum_{j=1}^{n} 1 / (L_j^2 L_{j+1} L_{j+2} L_{j+3}^2), n >= 1.
Ratio recip_lucas_special(Index n);

/// Names of every operation above, for registry completeness checks.
inline constexpr std::array<std::string_view, 13> kClosedFormOperations = {
    "sum_squares_closed",       "sum_sixth_closed",     "fib_sixth_closed",
    "lucas_sixth_closed",       "alt_sum_fifth_closed", "fib_alt_f5l_closed",
    "lucas_alt_l5f_closed",     "sum_cubes_product_closed",
    "recip_sum_closed",         "treeby_f3_closed",     "treeby_l3_closed",
    "recip_fib_special",        "recip_lucas_special",
};

}  // namespace gibsum
