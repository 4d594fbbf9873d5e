#pragma once

// Wire formats for verification reports.
//
// JSON: {"identity", "g0", "g1", "t", "n", "closed", "oracle", "match",
// "error"}. Seeds and values are decimal strings ("p/q" for non-integers) so
// arbitrarily large numbers survive any consumer; t and n are JSON integers;
// closed/oracle/match/error are null when absent.
//
// TSV: the same nine columns in that order, header row first, empty cells for
// absent values.

#include <string>

#include "json.hpp"

#include "gibsum/verifier.hpp"

namespace gibsum {

nlohmann::ordered_json to_json(const VerificationReport& report);

std::string tsv_header();
std::string to_tsv_row(const VerificationReport& report);

nlohmann::ordered_json to_json(const IdentityDescriptor& desc);

std::string identity_tsv_header();
std::string to_tsv_row(const IdentityDescriptor& desc);

}  // namespace gibsum
