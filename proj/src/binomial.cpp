#include "macaulay/binomial.hpp"

#include <algorithm>

namespace macaulay {

std::optional<Nat> try_binom(Nat n, Nat k) noexcept {
  if (k > n) return Nat(0);
  Nat::word kk = std::min(k.value(), n.value() - k.value());
  const Nat::word base = n.value() - kk;
  // r runs through C(base + i, i), each bounded by the final value.
  unsigned __int128 r = 1;
  for (Nat::word i = 1; i <= kk; ++i) {
    r = r * (base + i) / i;
    if (r > std::numeric_limits<Nat::word>::max()) return std::nullopt;
  }
  return Nat(static_cast<Nat::word>(r));
}

Nat binom(Nat n, Nat k) {
  if (auto r = try_binom(n, k)) return *r;
  throw Error(ErrorCode::CapacityExceeded,
              "C(" + n.str() + ", " + k.str() + ") exceeds 64-bit capacity");
}

namespace {

bool binom_leq(Nat k, Degree d, Nat a) {
  auto v = try_binom(k, d);
  return v && *v <= a;
}

}  // namespace

Nat largest_top(Nat a, Degree d) {
  require_degree(d);
  if (a.is_zero()) {
    throw Error(ErrorCode::InvalidInput, "largest_top requires a > 0");
  }
  if (d == 1) return a;
  // C(d, d) = 1 <= a; gallop to an upper bound, then bisect.
  Nat::word lo = d;
  Nat::word step = 1;
  Nat::word hi;
  for (;;) {
    if (__builtin_add_overflow(lo, step, &hi)) {
      hi = std::numeric_limits<Nat::word>::max();
      if (binom_leq(hi, d, a)) return Nat(hi);
      break;
    }
    if (!binom_leq(hi, d, a)) break;
    lo = hi;
    step *= 2;
  }
  // Invariant: C(lo, d) <= a < C(hi, d).
  while (hi - lo > 1) {
    const Nat::word mid = lo + (hi - lo) / 2;
    if (binom_leq(mid, d, a)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return Nat(lo);
}

std::optional<Nat> simplex_index(Nat a, Degree d) {
  require_degree(d);
  if (a.is_zero()) return std::nullopt;
  const Nat k = largest_top(a, d);
  if (binom(k, d) != a) return std::nullopt;
  return k - Nat(d) + 1;
}

void BinomialRep::validate() const {
  if (d == 0) throw Error(ErrorCode::InvalidRep, "representation degree is 0");
  Degree expected = d;
  for (std::size_t pos = 0; pos < terms.size(); ++pos) {
    const auto& t = terms[pos];
    if (expected == 0 || t.i != expected) {
      throw Error(ErrorCode::InvalidRep,
                  "term indices must run d, d-1, ... down to j >= 1");
    }
    if (t.k < Nat(t.i)) {
      throw Error(ErrorCode::InvalidRep,
                  "k_" + std::to_string(t.i) + " = " + t.k.str() +
                      " is below its index");
    }
    if (pos > 0 && !(t.k < terms[pos - 1].k)) {
      throw Error(ErrorCode::InvalidRep, "k values must strictly decrease");
    }
    --expected;
  }
}

BinomialRep d_binomial_rep(Nat a, Degree d) {
  require_degree(d);
  BinomialRep rep{d, {}};
  Nat rest = a;
  for (Degree i = d; i >= 1 && !rest.is_zero(); --i) {
    const Nat k = largest_top(rest, i);
    rep.terms.push_back({k, i});
    rest -= binom(k, i);
  }
  return rep;
}

Nat rep_value(const BinomialRep& rep) {
  rep.validate();
  Nat sum = 0;
  for (const auto& t : rep.terms) sum += binom(t.k, t.i);
  return sum;
}

std::strong_ordering rep_lex_compare(const BinomialRep& lhs,
                                     const BinomialRep& rhs) {
  if (lhs.d != rhs.d) {
    throw Error(ErrorCode::DegreeMismatch,
                "cannot compare representations of degree " +
                    std::to_string(lhs.d) + " and " + std::to_string(rhs.d));
  }
  return std::lexicographical_compare_three_way(
      lhs.terms.begin(), lhs.terms.end(), rhs.terms.begin(), rhs.terms.end(),
      [](const BinomialTerm& x, const BinomialTerm& y) { return x.k <=> y.k; });
}

Nat Decomposition::value() const {
  return binom(c + Nat(d) - 1, d) + A;
}

Nat Decomposition::remainder_bound() const {
  return binom(c + Nat(d) - 1, d - 1);
}

void Decomposition::validate() const {
  const Nat bound = remainder_bound();
  const bool ok = form == DecompositionForm::HalfOpen
                      ? (c > Nat(0) && A < bound)
                      : (A > Nat(0) && A <= bound);
  if (!ok) {
    throw Error(ErrorCode::InvariantViolated,
                "decomposition c=" + c.str() + ", A=" + A.str() +
                    " violates its range constraint");
  }
}

namespace {

void require_positive(Nat a, Degree d) {
  require_degree(d);
  if (a.is_zero()) {
    throw Error(ErrorCode::InvalidInput, "decomposition requires a > 0");
  }
}

}  // namespace

Decomposition decompose_half_open(Nat a, Degree d) {
  require_positive(a, d);
  const Nat k = largest_top(a, d);
  const Nat c = k - Nat(d) + 1;
  return {c, a - binom(k, d), DecompositionForm::HalfOpen, d};
}

Decomposition decompose_half_closed(Nat a, Degree d) {
  Decomposition dec = decompose_half_open(a, d);
  dec.form = DecompositionForm::HalfClosed;
  if (!dec.A.is_zero()) return dec;
  // a = C(b-1+d, d) with b = c: step down one row of Pascal's triangle.
  const Nat b = dec.c;
  dec.c = b - 1;
  dec.A = binom(b + Nat(d) - 2, d - 1);
  return dec;
}

Decomposition decompose(Nat a, Degree d, DecompositionForm form) {
  return form == DecompositionForm::HalfOpen ? decompose_half_open(a, d)
                                             : decompose_half_closed(a, d);
}

}  // namespace macaulay
