#include "gibsum/oracle.hpp"

#include <array>
#include <utility>

#include "gibsum/errors.hpp"

namespace gibsum {

std::string_view to_string(SummandKind kind) {
  switch (kind) {
    case SummandKind::kSixthPower:
      return "SIXTH_POWER";
    case SummandKind::kSquare:
      return "SQUARE";
    case SummandKind::kAltFifthNeighbor:
      return "ALT_FIFTH_NEIGHBOR";
    case SummandKind::kCubeProduct:
      return "CUBE_PRODUCT";
    case SummandKind::kReciprocalWindow:
      return "RECIPROCAL_WINDOW";
  }
  return "UNKNOWN";
}

namespace {

// Four consecutive terms G_{m-1}, G_m, G_{m+1}, G_{m+2} around m = j + t,
// advanced one position at a time by the recurrence.
class RollingTerms {
 public:
  RollingTerms(const SequenceSpec& spec, Index m) {
    g_[0] = term(spec, m - 1);
    g_[1] = term(spec, m);
    g_[2] = g_[0] + g_[1];
    g_[3] = g_[1] + g_[2];
  }

  const Int& prev() const { return g_[0]; }
  const Int& at() const { return g_[1]; }
  const Int& next() const { return g_[2]; }
  const Int& next2() const { return g_[3]; }

  void advance() {
    std::swap(g_[0], g_[1]);
    std::swap(g_[1], g_[2]);
    std::swap(g_[2], g_[3]);
    g_[3] = g_[1] + g_[2];
  }

 private:
  std::array<Int, 4> g_;
};

Int power(const Int& x, unsigned long e) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), x.get_mpz_t(), e);
  return out;
}

// Integer-valued summand at position j (m = j + t).
Int integer_summand(SummandKind kind, const RollingTerms& g, Index j) {
  switch (kind) {
    case SummandKind::kSixthPower:
      return power(g.at(), 6);
    case SummandKind::kSquare:
      return g.at() * g.at();
    case SummandKind::kAltFifthNeighbor: {
      Int v = power(g.at(), 5) * (g.next() + g.prev());
      return (j - 1) % 2 == 0 ? v : Int(-v);
    }
    case SummandKind::kCubeProduct:
      return power(g.at() * g.next(), 3);
    case SummandKind::kReciprocalWindow:
      break;
  }
  throw std::logic_error("integer_summand: reciprocal kind");
}

Ratio reciprocal_summand(const RollingTerms& g) {
  return Ratio(1, g.prev() * g.prev() * g.at() * g.next() * g.next2() * g.next2());
}

void scan_for_zero(const SequenceSpec& spec, Index lo, Index hi) {
  Int a = term(spec, lo);
  if (sgn(a) == 0) throw ZeroDenominatorError(lo);
  if (lo == hi) return;
  Int b = term(spec, lo + 1);
  for (Index k = lo + 1;; ++k) {
    if (sgn(b) == 0) throw ZeroDenominatorError(k);
    if (k == hi) return;
    Int c = a + b;
    a = std::move(b);
    b = std::move(c);
  }
}

}  // namespace

Ratio oracle_term(SummandKind kind, const SequenceSpec& spec, Index t, Index j) {
  const Index m = checked_add(j, t);
  if (kind == SummandKind::kReciprocalWindow) {
    scan_for_zero(spec, checked_add(m, -1), checked_add(m, 2));
    return reciprocal_summand(RollingTerms(spec, m));
  }
  checked_add(m, 2);
  return Ratio(integer_summand(kind, RollingTerms(spec, m), j));
}

Ratio oracle_sum(SummandKind kind, const SequenceSpec& spec, ShiftedRange r) {
  if (kind == SummandKind::kReciprocalWindow) {
    const auto [lo, hi] = reciprocal_window(r.t, r.n);
    scan_for_zero(spec, lo, hi);
  }
  if (r.n == 0) return Ratio(0);

  // Summation range [first, last] and its sign.
  const Index first = r.n > 0 ? 1 : r.n + 1;
  const Index last = r.n > 0 ? r.n : 0;
  checked_add(checked_add(last, r.t), 2);
  checked_add(checked_add(first, r.t), -1);

  RollingTerms g(spec, first + r.t);
  Ratio total;
  if (kind == SummandKind::kReciprocalWindow) {
    for (Index j = first;; ++j) {
      total += reciprocal_summand(g);
      if (j == last) break;
      g.advance();
    }
  } else {
    Int acc = 0;
    for (Index j = first;; ++j) {
      acc += integer_summand(kind, g, j);
      if (j == last) break;
      g.advance();
    }
    total = Ratio(acc);
  }
  return r.n > 0 ? total : -total;
}

}  // namespace gibsum
