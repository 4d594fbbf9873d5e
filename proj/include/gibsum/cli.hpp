#pragma once

// Command-line front end: list | eval | verify | bench.
//
// Exit codes: 0 success / all match, 1 verification mismatch, 2 usage or
// domain error.

#include <iosfwd>
#include <string>
#include <vector>

#include "gibsum/verifier.hpp"

namespace gibsum::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Oracle runs automatically in `bench` up to this n; beyond it only with
/// --force-oracle.
inline constexpr Index kBenchAutoOracleLimit = 2000;

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "a..b" (inclusive) or a single integer "a". Throws std::invalid_argument.
IntRange parse_range(const std::string& text);

/// "g0,g1;g0,g1;..." Throws std::invalid_argument or DomainError.
std::vector<SequenceSpec> parse_seeds(const std::string& text);

Index parse_index(const std::string& text);

}  // namespace gibsum::cli
