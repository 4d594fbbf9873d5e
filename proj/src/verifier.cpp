#include "gibsum/verifier.hpp"

#include <algorithm>
#include <string>

#include "gibsum/errors.hpp"

namespace gibsum {

namespace {

template <typename F>
std::function<Ratio(const SequenceSpec&, ShiftedRange)> general(F f) {
  return [f](const SequenceSpec& spec, ShiftedRange r) { return Ratio(f(spec, r)); };
}

template <typename F>
std::function<Ratio(const SequenceSpec&, ShiftedRange)> by_range(F f) {
  return [f](const SequenceSpec&, ShiftedRange r) { return Ratio(f(r)); };
}

template <typename F>
std::function<Ratio(const SequenceSpec&, ShiftedRange)> by_length(F f) {
  return [f](const SequenceSpec&, ShiftedRange r) { return Ratio(f(r.n)); };
}

std::vector<IdentityDescriptor> build_registry() {
  const SequenceSpec& fibs = fibonacci_spec();
  const SequenceSpec& lucs = lucas_spec();
  using K = SummandKind;
  std::vector<IdentityDescriptor> out;
  out.push_back({"sum_g2", "sum_squares_closed", K::kSquare, "G_{j+t}^2",
                 "squares telescoping lemma", {}, {}, {}, 1, general(sum_squares_closed)});
  out.push_back({"sum_g6", "sum_sixth_closed", K::kSixthPower, "G_{j+t}^6",
                 "generalized sixth-power sum", {}, {}, {}, 1, general(sum_sixth_closed)});
  out.push_back({"fib6", "fib_sixth_closed", K::kSixthPower, "F_{j+t}^6",
                 "Ohtsuka-Nakamura Fibonacci sixth powers, shifted", fibs, {}, {}, 1,
                 by_range(fib_sixth_closed)});
  out.push_back({"lucas6", "lucas_sixth_closed", K::kSixthPower, "L_{j+t}^6",
                 "Ohtsuka-Nakamura Lucas sixth powers, shifted (constant 32 at t=0)", lucs, {}, {},
                 1, by_range(lucas_sixth_closed)});
  out.push_back({"alt_g5", "alt_sum_fifth_closed", K::kAltFifthNeighbor,
                 "(-1)^{j-1} G_{j+t}^5 (G_{j+t+1} + G_{j+t-1})",
                 "alternating fifth-power neighbour sum", {}, {}, {}, 1,
                 general(alt_sum_fifth_closed)});
  out.push_back({"fib_alt_f5l", "fib_alt_f5l_closed", K::kAltFifthNeighbor,
                 "(-1)^{j-1} F_j^5 L_j", "alternating F^5 L special case, sign (-1)^n", fibs, 0,
                 0, 1, by_length(fib_alt_f5l_closed)});
  out.push_back({"lucas_alt_l5f", "lucas_alt_l5f_closed", K::kAltFifthNeighbor,
                 "(-1)^{j-1} L_j^5 F_j", "alternating L^5 F special case, sign (-1)^n, constant 14/5",
                 lucs, 0, 0, Ratio(1, 5), by_length(lucas_alt_l5f_closed)});
  out.push_back({"sum_g3g3", "sum_cubes_product_closed", K::kCubeProduct,
                 "G_{j+t}^3 G_{j+t+1}^3", "cube-product sum generalizing Treeby", {}, {}, {}, 1,
                 general(sum_cubes_product_closed)});
  out.push_back({"recip", "recip_sum_closed", K::kReciprocalWindow,
                 "1 / (G_{j+t-1}^2 G_{j+t} G_{j+t+1} G_{j+t+2}^2)",
                 "reciprocal of the cube-product difference", {}, {}, {}, 1,
                 general(recip_sum_closed)});
  out.push_back({"treeby_f3", "treeby_f3_closed", K::kCubeProduct, "F_j^3 F_{j+1}^3",
                 "Treeby Fibonacci cube products", fibs, 0, 0, 1, by_length(treeby_f3_closed)});
  out.push_back({"treeby_l3", "treeby_l3_closed", K::kCubeProduct, "L_j^3 L_{j+1}^3",
                 "Treeby Lucas cube products, constant -9", lucs, 0, 0, 1,
                 by_length(treeby_l3_closed)});
  out.push_back({"recip_fib", "recip_fib_special", K::kReciprocalWindow,
                 "1 / (F_j^2 F_{j+1} F_{j+2} F_{j+3}^2)", "reciprocal Fibonacci special, inner 1/4",
                 fibs, 1, 1, 1, by_length(recip_fib_special)});
  out.push_back({"recip_lucas", "recip_lucas_special", K::kReciprocalWindow,
                 "1 / (L_j^2 L_{j+1} L_{j+2} L_{j+3}^2)",
                 "reciprocal Lucas special, inner 1/144", lucs, 1, 1, 1,
                 by_length(recip_lucas_special)});
  return out;
}

void require_domain(const IdentityDescriptor& desc, Index n) {
  if (!desc.accepts_n(n)) {
    throw DomainError(desc.id + ": n must be >= " + std::to_string(*desc.min_n) + ", got " +
                      std::to_string(n));
  }
}

ReportError zero_error(const ZeroDenominatorError& e) {
  return {"zero_denominator", e.index(), e.what()};
}

// One side of a comparison: a value or the failure that prevented it.
struct Outcome {
  std::optional<Ratio> value;
  std::optional<ReportError> error;
};

template <typename F>
Outcome attempt(F&& f) {
  try {
    return {f(), std::nullopt};
  } catch (const ZeroDenominatorError& e) {
    return {std::nullopt, zero_error(e)};
  } catch (const IntegralityError& e) {
    return {std::nullopt, ReportError{"integrality", std::nullopt, e.what()}};
  }
}

VerificationReport compare(std::string identity, const SequenceSpec& spec, Index t, Index n,
                           const Outcome& lhs, const Outcome& rhs) {
  VerificationReport report = make_report(std::move(identity), spec, t, n);
  if (lhs.value) report.closed = lhs.value->to_string();
  if (rhs.value) report.oracle = rhs.value->to_string();
  if (lhs.value && rhs.value) {
    report.match = *lhs.value == *rhs.value;
  } else if (lhs.error && rhs.error) {
    report.match = lhs.error->kind == "zero_denominator" && *lhs.error == *rhs.error;
    report.error = lhs.error;
    if (!report.match) report.error->message += "; oracle: " + rhs.error->message;
  } else {
    report.match = false;
    report.error = lhs.error ? lhs.error : rhs.error;
  }
  return report;
}

Int square(const Int& x) { return x * x; }

}  // namespace

const std::vector<IdentityDescriptor>& registry() {
  static const std::vector<IdentityDescriptor> entries = build_registry();
  return entries;
}

const IdentityDescriptor& find_identity(std::string_view id) {
  const auto& entries = registry();
  auto it = std::find_if(entries.begin(), entries.end(),
                         [&](const IdentityDescriptor& d) { return d.id == id; });
  if (it == entries.end()) throw UnknownIdentityError(std::string(id));
  return *it;
}

Ratio evaluate_closed(const IdentityDescriptor& desc, const SequenceSpec& spec, ShiftedRange r) {
  require_domain(desc, r.n);
  return desc.closed_form(desc.effective_spec(spec), {desc.effective_t(r.t), r.n});
}

Ratio evaluate_oracle(const IdentityDescriptor& desc, const SequenceSpec& spec, ShiftedRange r) {
  require_domain(desc, r.n);
  return oracle_sum(desc.kind, desc.effective_spec(spec), {desc.effective_t(r.t), r.n}) *
         desc.oracle_scale;
}

VerificationReport verify_one(std::string_view id, const SequenceSpec& spec, Index t, Index n) {
  const IdentityDescriptor& desc = find_identity(id);
  require_domain(desc, n);
  const SequenceSpec eff = desc.effective_spec(spec);
  const ShiftedRange r{desc.effective_t(t), n};
  const Outcome closed = attempt([&] { return evaluate_closed(desc, eff, r); });
  const Outcome oracle = attempt([&] { return evaluate_oracle(desc, eff, r); });
  return compare(desc.id, eff, r.t, n, closed, oracle);
}

std::vector<VerificationReport> sweep(std::string_view id, const GridSpec& grid) {
  const IdentityDescriptor& desc = find_identity(id);
  if (grid.seeds.empty()) throw DomainError("sweep: seed list is empty");

  std::vector<SequenceSpec> seeds = grid.seeds;
  if (desc.fixed_seeds) seeds = {*desc.fixed_seeds};
  IntRange ts = grid.t_range;
  if (desc.fixed_t) ts = {*desc.fixed_t, *desc.fixed_t};
  IntRange ns = grid.n_range;
  if (desc.min_n) ns.lo = std::max(ns.lo, *desc.min_n);

  std::vector<VerificationReport> reports;
  for (const SequenceSpec& spec : seeds) {
    for (Index t = ts.lo; t <= ts.hi; ++t) {
      for (Index n = ns.lo; n <= ns.hi; ++n) {
        reports.push_back(verify_one(desc.id, spec, t, n));
      }
    }
  }
  return reports;
}

std::vector<VerificationReport> check_telescoping(std::string_view id, const SequenceSpec& spec,
                                                  Index t, IntRange n_range) {
  const IdentityDescriptor& desc = find_identity(id);
  const SequenceSpec eff = desc.effective_spec(spec);
  const Index eff_t = desc.effective_t(t);
  Index lo = n_range.lo;
  if (desc.min_n) lo = std::max(lo, *desc.min_n + 1);

  std::vector<VerificationReport> reports;
  for (Index n = lo; n <= n_range.hi; ++n) {
    const Outcome diff = attempt([&] {
      return evaluate_closed(desc, eff, {eff_t, n}) - evaluate_closed(desc, eff, {eff_t, n - 1});
    });
    VerificationReport report;
    if (diff.error && diff.error->kind == "zero_denominator") {
      // Outside the identity's domain; nothing to compare.
      report = make_report(desc.id, eff, eff_t, n);
      report.match = true;
      report.error = diff.error;
    } else {
      const Outcome summand =
          attempt([&] { return oracle_term(desc.kind, eff, eff_t, n) * desc.oracle_scale; });
      report = compare(desc.id, eff, eff_t, n, diff, summand);
    }
    reports.push_back(std::move(report));
  }
  return reports;
}

std::vector<VerificationReport> check_point_identities(const SequenceSpec& spec, IntRange r_range,
                                                       IntRange s_range) {
  const Int e = characteristic_e(spec);
  std::vector<VerificationReport> reports;
  auto record = [&](const char* id, Index r, Index s, const Int& lhs, const Int& rhs) {
    VerificationReport report = make_report(id, spec, r, s);
    report.closed = to_string(lhs);
    report.oracle = to_string(rhs);
    report.match = lhs == rhs;
    reports.push_back(std::move(report));
  };
  auto triple = [](const TermWindow& g, Index k) {
    return square(g[k] * g[k + 1] * g[k + 2]);
  };

  for (Index r = r_range.lo; r <= r_range.hi; ++r) {
    const TermWindow g(spec, checked_add(r, -2), 5);
    const Int signed_e = sign_pow(r) * e;
    record("vajda28", r, 0, g[r] * g[r + 2], square(g[r + 1]) + signed_e);
    record("gap4_product", r, 0, g[r - 2] * g[r + 2], square(g[r]) + signed_e);
    record("double_diff", r, 0, g[r + 2] - g[r - 1], 2 * g[r]);
    record("double_sum", r, 0, g[r + 2] + g[r - 1], 2 * g[r + 1]);
    const Int a = g[r];
    const Int b = g[r + 1];
    record("triple_sum", r, 0, triple(g, r) + triple(g, r - 1),
           2 * square(square(a)) * square(b) + 2 * square(square(b)) * square(a));
    record("triple_diff", r, 0, triple(g, r) - triple(g, r - 1), 4 * a * a * a * b * b * b);
    for (Index s = s_range.lo; s <= s_range.hi; ++s) {
      record("vajda10a", r, s,
             term(spec, checked_add(r, s)) + sign_pow(s) * term(spec, checked_add(r, -s)),
             lucas(s) * g[r]);
    }
  }
  return reports;
}

}  // namespace gibsum
