#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "macaulay/lemmas.hpp"

namespace macaulay {

/// An instance within the hypotheses of the naive two-term inequality
/// (a1, a2 <= b1 and a1 + a2 <= b1 + b2) where it fails: lhs > rhs.
struct ViolationRecord {
  Nat a1;
  Nat a2;
  Nat b1;
  Nat b2;
  Degree d = 1;
  Nat lhs;
  Nat rhs;

  friend bool operator==(const ViolationRecord&, const ViolationRecord&) = default;
};

/// Bounds for an exhaustive sweep.
///
///  - Superadditive: 0 <= a, b <= max_value.
///  - Naive35: 0 <= a1, a2, b1, b2 <= max_value.
///  - Constrained: 1 <= m <= max_m, a, b, c bounded by C(m-1+d, d).
///  - Sequence: 1 <= m <= max_m, 1 <= t, s <= max_len, entries bounded by
///    C(m-1+d, d).
///
/// Degrees run over [min_d, max_d].
struct SweepConfig {
  LemmaKind lemma = LemmaKind::Superadditive;
  Nat max_value = 10;
  Degree min_d = 1;
  Degree max_d = 1;
  Nat max_m = 4;
  std::size_t max_len = 4;
  unsigned worker_count = 1;

  /// Throws InvalidInput on out-of-range bounds.
  void validate() const;
};

struct SweepSummary {
  LemmaKind lemma = LemmaKind::Superadditive;
  std::uint64_t instances_checked = 0;
  std::vector<LemmaReport> violations;
};

/// Every violation of the naive inequality within bounds, ordered by
/// (d, a1 + a2, a1, a2, b1, b2). cfg.lemma is ignored.
std::vector<ViolationRecord> find_violations_35(const SweepConfig& cfg);

/// Runs the selected checker over every in-bounds instance meeting its
/// hypotheses. For Sequence both modes run and a mismatch counts as a
/// violation. Output is independent of worker_count.
SweepSummary sweep_lemma(const SweepConfig& cfg);

/// Growth of the lex-final segment of a degree-d monomials in n variables:
/// the number of degree-(d+1) monomials all of whose degree-d divisors are in
/// the segment. Throws InsufficientVariables if there are fewer than a
/// degree-d monomials.
Nat macaulay_via_order_ideal(Nat a, Degree d, unsigned n);

/// Starts from the smallest viable n and adds variables until two
/// consecutive counts agree.
Nat macaulay_via_order_ideal(Nat a, Degree d);

}  // namespace macaulay
