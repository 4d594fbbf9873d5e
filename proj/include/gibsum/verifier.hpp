#pragma once

// Identity registry and closed-form-versus-oracle verification.

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gibsum/closed_forms.hpp"
#include "gibsum/exact.hpp"
#include "gibsum/oracle.hpp"
#include "gibsum/sequence.hpp"

namespace gibsum {

/// Inclusive integer interval.
struct IntRange {
  Index lo = 0;
  Index hi = 0;

  bool contains(Index k) const { return k >= lo && k <= hi; }
};

/// Binds an identity id to its closed form and its oracle summand.
///
/// Seed-fixed identities (Fibonacci/Lucas specializations) ignore the caller's
/// seeds; t-fixed identities (the t = 0 / t = 1 special cases) also ignore t.
/// The oracle side is oracle_sum(kind, seeds, t, n) * oracle_scale.
struct IdentityDescriptor {
  std::string id;
  std::string operation;
  SummandKind kind;
  std::string summand;
  std::string anchor;
  std::optional<SequenceSpec> fixed_seeds;
  std::optional<Index> fixed_t;
  std::optional<Index> min_n;
  Ratio oracle_scale{1};
  std::function<Ratio(const SequenceSpec&, ShiftedRange)> closed_form;

  bool seed_fixed() const { return fixed_seeds.has_value(); }
  bool accepts_n(Index n) const { return !min_n || n >= *min_n; }
  SequenceSpec effective_spec(const SequenceSpec& requested) const {
    return fixed_seeds ? *fixed_seeds : requested;
  }
  Index effective_t(Index requested) const { return fixed_t.value_or(requested); }
};

const std::vector<IdentityDescriptor>& registry();

/// Throws UnknownIdentityError.
const IdentityDescriptor& find_identity(std::string_view id);

struct ReportError {
  std::string kind;  // "zero_denominator" or "integrality"
  std::optional<Index> index;
  std::string message;

  friend bool operator==(const ReportError&, const ReportError&) = default;
};

/// One closed-form-versus-oracle comparison.
///
/// match is true when both values are equal rationals, and also when both
/// sides fail with the same zero-denominator index (the identity holds
/// vacuously outside its domain); error then records that failure. For point
/// identities t carries r and n carries s (0 when unused), and closed/oracle
/// hold the left/right sides.
struct VerificationReport {
  std::string identity;
  Int g0;
  Int g1;
  Index t = 0;
  Index n = 0;
  std::optional<std::string> closed;
  std::optional<std::string> oracle;
  bool match = false;
  std::optional<ReportError> error;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// A report with inputs filled in and no outcome yet.
inline VerificationReport make_report(std::string identity, const SequenceSpec& spec, Index t,
                                      Index n) {
  VerificationReport report;
  report.identity = std::move(identity);
  report.g0 = spec.g0();
  report.g1 = spec.g1();
  report.t = t;
  report.n = n;
  return report;
}

struct GridSpec {
  std::vector<SequenceSpec> seeds;
  IntRange t_range;
  IntRange n_range;
};

/// Closed-form value at an (effective) grid point. Throws DomainError when n
/// is outside the identity's domain.
Ratio evaluate_closed(const IdentityDescriptor& desc, const SequenceSpec& spec, ShiftedRange r);
Ratio evaluate_oracle(const IdentityDescriptor& desc, const SequenceSpec& spec, ShiftedRange r);

VerificationReport verify_one(std::string_view id, const SequenceSpec& spec, Index t, Index n);

/// Reports in (seed, t, n) lexicographic order. Seed and t axes collapse for
/// seed-fixed and t-fixed identities; n values outside the identity's domain
/// are skipped.
std::vector<VerificationReport> sweep(std::string_view id, const GridSpec& grid);

/// S(n) - S(n-1) from closed forms against the oracle's n-th summand, for each
/// n in the range (clipped so that n - 1 stays in the identity's domain).
std::vector<VerificationReport> check_telescoping(std::string_view id, const SequenceSpec& spec,
                                                  Index t, IntRange n_range);

/// Point identities checked at every r (and s for the two-index one):
///   vajda28       G_r G_{r+2} = G_{r+1}^2 + (-1)^r e
///   vajda10a      G_{r+s} + (-1)^s G_{r-s} = L_s G_r
///   gap4_product  G_{r-2} G_{r+2} = G_r^2 + (-1)^r e
///   double_diff   G_{r+2} - G_{r-1} = 2 G_r
///   double_sum    G_{r+2} + G_{r-1} = 2 G_{r+1}
///   triple_sum    P(r) + P(r-1) = 2 G_r^4 G_{r+1}^2 + 2 G_{r+1}^4 G_r^2
///   triple_diff   P(r) - P(r-1) = 4 G_r^3 G_{r+1}^3
/// where P(k) = G_k^2 G_{k+1}^2 G_{k+2}^2.
std::vector<VerificationReport> check_point_identities(const SequenceSpec& spec, IntRange r_range,
                                                       IntRange s_range);

}  // namespace gibsum
