#pragma once

// Wall-clock comparison of closed-form evaluation against the oracle.

#include <optional>
#include <string>

#include "gibsum/verifier.hpp"

namespace gibsum {

struct BenchResult {
  double closed_seconds = 0;                ///< median over runs
  std::optional<double> oracle_seconds;     ///< median over runs, when run
  std::string value;                        ///< closed-form value, rendered
  std::size_t digits = 0;                   ///< decimal digits in value
  std::string leading_digits;               ///< first (up to) 20 characters
  std::optional<bool> match;                ///< closed == oracle, when run
};

BenchResult run_bench(const IdentityDescriptor& desc, const SequenceSpec& spec, ShiftedRange r,
                      int runs, bool with_oracle);

}  // namespace gibsum
