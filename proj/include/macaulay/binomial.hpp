#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "macaulay/nat.hpp"

namespace macaulay {

/// C(n, k) = n! / ((n-k)! k!), and 0 when n < k. Throws CapacityExceeded when
/// the value does not fit in a Nat.
Nat binom(Nat n, Nat k);

/// Same as binom, but reports overflow as nullopt.
std::optional<Nat> try_binom(Nat n, Nat k) noexcept;

/// Largest k with C(k, d) <= a. Requires a >= 1, d >= 1; the result is >= d.
Nat largest_top(Nat a, Degree d);

/// The m >= 1 with a == C(m-1+d, d), if a has that form.
std::optional<Nat> simplex_index(Nat a, Degree d);

/// One term C(k, i) of a d-binomial representation.
struct BinomialTerm {
  Nat k;
  Degree i = 0;

  friend bool operator==(const BinomialTerm&, const BinomialTerm&) = default;
};

/// The representation a = C(k_d, d) + C(k_{d-1}, d-1) + ... + C(k_j, j) with
/// k_d > k_{d-1} > ... > k_j >= j >= 1. Zero is the empty term list.
struct BinomialRep {
  Degree d = 1;
  std::vector<BinomialTerm> terms;

  /// Throws InvalidRep unless the terms are a well-formed representation.
  void validate() const;

  friend bool operator==(const BinomialRep&, const BinomialRep&) = default;
};

BinomialRep d_binomial_rep(Nat a, Degree d);

/// Sum of C(k_i, i). Throws InvalidRep on malformed input.
Nat rep_value(const BinomialRep& rep);

/// Left-lexicographic order on (k_d, k_{d-1}, ...); a missing trailing entry
/// compares smaller. Throws DegreeMismatch if the top degrees differ.
std::strong_ordering rep_lex_compare(const BinomialRep& lhs,
                                     const BinomialRep& rhs);

enum class DecompositionForm {
  HalfOpen,    // 0 <= A <  C(c-1+d, d-1), c > 0
  HalfClosed,  // 0 <  A <= C(c-1+d, d-1), c >= 0
};

/// a = C(c-1+d, d) + A.
struct Decomposition {
  Nat c;
  Nat A;
  DecompositionForm form = DecompositionForm::HalfOpen;
  Degree d = 1;

  Nat value() const;
  /// C(c-1+d, d-1), the bound on A.
  Nat remainder_bound() const;
  /// Throws InvariantViolated if the range constraint of the form fails.
  void validate() const;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

Decomposition decompose_half_open(Nat a, Degree d);
Decomposition decompose_half_closed(Nat a, Degree d);
Decomposition decompose(Nat a, Degree d, DecompositionForm form);

}  // namespace macaulay
