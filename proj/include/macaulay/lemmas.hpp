#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "macaulay/function.hpp"

namespace macaulay {

enum class LemmaKind { Superadditive, Constrained, Sequence, Naive35 };

std::string_view to_string(LemmaKind kind);

enum class CaseTag { Initial, Case1, Case2 };

std::string_view to_string(CaseTag tag);

/// One (a_i, b_i) pair of the sum-preserving pair construction.
struct PairState {
  Nat a;
  Nat b;
  std::size_t step_index = 0;
  CaseTag case_applied = CaseTag::Initial;

  friend bool operator==(const PairState&, const PairState&) = default;
};

/// A named instance coordinate; scalars are single-element, non-list fields.
struct InstanceField {
  std::string name;
  std::vector<Nat> values;
  bool is_list = false;
};

/// Which branch of the sequence-inequality induction produced a node.
enum class ReplayCase {
  SingleA,       // t = 1: monotonicity
  SingleB,       // s = 1: iterated superadditivity, then monotonicity
  Case1,         // b_1 >= a_1: peel a_1 off b_1
  Case2Pair,     // b_1 < a_1, s = 2
  Case2Drop,     // b_1 < a_1, sum(a) <= b_2 + ... + b_s: drop b_1
  Case2Relabel,  // b_1 < a_1, fold the excess into a new first b
};

std::string_view to_string(ReplayCase c);

/// One inequality invoked as a justification inside a replay node.
struct ReplayStep {
  std::string rule;
  std::vector<Nat> operands;
  Nat lhs;
  Nat rhs;
  bool holds = false;
};

struct ReplayNode {
  ReplayCase kind = ReplayCase::SingleA;
  std::vector<Nat> as;
  std::vector<Nat> bs;
  Nat lhs;
  Nat rhs;
  /// Verdict derived from the steps and children, not from lhs <= rhs.
  bool holds = false;
  std::vector<ReplayStep> steps;
  std::vector<ReplayNode> children;
};

struct LemmaReport {
  LemmaKind lemma = LemmaKind::Superadditive;
  std::vector<InstanceField> instance;
  Nat lhs;
  Nat rhs;
  bool holds = false;
  std::vector<PairState> pair_trace;
  std::optional<ReplayNode> replay;
};

/// a^<d> + b^<d> <= (a+b)^<d>.
LemmaReport check_superadditive(
    Nat a, Nat b, Degree d,
    const MacaulayTable& table = MacaulayTable::direct());

/// a^<d> + b^<d> <= C(m-1+d, d)^<d> + c^<d>, under max(a, b) <= C(m-1+d, d),
/// a + b <= C(m-1+d, d) + c and c >= 1. Throws PreconditionViolated when the
/// hypotheses fail.
LemmaReport check_constrained(
    Nat m, Degree d, Nat a, Nat b, Nat c,
    const MacaulayTable& table = MacaulayTable::direct());

/// a1 + a2 <= b1 + b2 => a1^<d> + a2^<d> <= b1^<d> + b2^<d>, given
/// a1, a2 <= b1. False in general; holds may come back false.
LemmaReport check_naive_35(
    Nat a1, Nat a2, Nat b1, Nat b2, Degree d,
    const MacaulayTable& table = MacaulayTable::direct());

/// Reduction of a constrained instance to the shape the pair construction
/// needs: a >= b > 0, a < C(m-1+d, d), a + b = C(m-1+d, d) + c.
struct Normalization {
  enum class Outcome {
    Construct,  // (a, b) is ready to trace
    ZeroB,      // b = 0: follows from monotonicity, a <= bound
    AtBound,    // a reaches the bound, so b <= c: monotonicity
  };

  Nat a;
  Nat b;
  Nat bound;
  bool swapped = false;
  bool clamped = false;
  Outcome outcome = Outcome::Construct;
};

std::string_view to_string(Normalization::Outcome o);

Normalization normalize_constrained(Nat m, Degree d, Nat a, Nat b, Nat c);

/// One step of the pair construction from (a, b), a >= b > 0, d > 1.
std::pair<PairState, PairState> construct_pair_step(Nat a, Nat b, Degree d);

struct ConstructionTrace {
  std::vector<PairState> states;
  Nat bound;
  /// First index with a_i == C(m-1+d, d); b there equals c.
  std::size_t bound_index = 0;
  /// Final index, with a_i == a + b and b_i == 0.
  std::size_t end_index = 0;
};

/// Iterates the pair construction until b reaches 0. Input must already be
/// normalized (see normalize_constrained); a and b may come in either order.
/// For d = 1 the construction degenerates to moving one unit per step.
ConstructionTrace trace_construction(
    Nat a, Nat b, Degree d, Nat m, Nat c,
    const MacaulayTable& table = MacaulayTable::direct());

/// a_1 <= ... <= a_t and b_1 <= b_2 = ... = b_s = C(m-1+d, d), with every
/// a_i <= b_s and sum(a) <= sum(b).
struct SequenceInstance {
  std::vector<Nat> as;
  std::vector<Nat> bs;
  Degree d = 1;
  Nat m = 1;

  Nat bound() const;
  /// Throws `code` (InvariantViolated by default) naming the first failure.
  void validate(ErrorCode code = ErrorCode::InvariantViolated) const;
};

enum class SequenceMode { Direct, ProofReplay };

std::string_view to_string(SequenceMode mode);

/// ProofReplay walks the lexicographic (t, s) induction, checking every
/// inequality it leans on. A sub-instance that breaks its own hypotheses
/// throws ReplayDivergence.
LemmaReport check_sequence_lemma(
    const SequenceInstance& inst, SequenceMode mode,
    const MacaulayTable& table = MacaulayTable::direct());

}  // namespace macaulay
