#include "macaulay/lemmas.hpp"

#include <algorithm>
#include <numeric>

namespace macaulay {

std::string_view to_string(LemmaKind kind) {
  switch (kind) {
    case LemmaKind::Superadditive: return "super";
    case LemmaKind::Constrained: return "constrained";
    case LemmaKind::Sequence: return "seq";
    case LemmaKind::Naive35: return "naive35";
  }
  return "unknown";
}

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::Initial: return "initial";
    case CaseTag::Case1: return "case1";
    case CaseTag::Case2: return "case2";
  }
  return "unknown";
}

std::string_view to_string(ReplayCase c) {
  switch (c) {
    case ReplayCase::SingleA: return "single-a";
    case ReplayCase::SingleB: return "single-b";
    case ReplayCase::Case1: return "case1";
    case ReplayCase::Case2Pair: return "case2-pair";
    case ReplayCase::Case2Drop: return "case2-drop";
    case ReplayCase::Case2Relabel: return "case2-relabel";
  }
  return "unknown";
}

std::string_view to_string(Normalization::Outcome o) {
  switch (o) {
    case Normalization::Outcome::Construct: return "construct";
    case Normalization::Outcome::ZeroB: return "zero-b";
    case Normalization::Outcome::AtBound: return "at-bound";
  }
  return "unknown";
}

std::string_view to_string(SequenceMode mode) {
  return mode == SequenceMode::Direct ? "direct" : "proof-replay";
}

namespace {

InstanceField scalar(std::string name, Nat v) {
  return {std::move(name), {v}, false};
}

InstanceField list(std::string name, std::vector<Nat> v) {
  return {std::move(name), std::move(v), true};
}

LemmaReport make_report(LemmaKind kind, std::vector<InstanceField> instance,
                        Nat lhs, Nat rhs) {
  LemmaReport r;
  r.lemma = kind;
  r.instance = std::move(instance);
  r.lhs = lhs;
  r.rhs = rhs;
  r.holds = lhs <= rhs;
  return r;
}

[[noreturn]] void precondition(const std::string& what) {
  throw Error(ErrorCode::PreconditionViolated, what);
}

Nat simplex_bound(Nat m, Degree d) {
  if (m.is_zero()) precondition("m must be positive");
  return binom(m + Nat(d) - 1, d);
}

Nat sum(const std::vector<Nat>& v) {
  return std::accumulate(v.begin(), v.end(), Nat(0));
}

}  // namespace

LemmaReport check_superadditive(Nat a, Nat b, Degree d,
                                const MacaulayTable& table) {
  require_degree(d);
  return make_report(LemmaKind::Superadditive,
                     {scalar("a", a), scalar("b", b), scalar("d", d)},
                     table(a, d) + table(b, d), table(a + b, d));
}

LemmaReport check_constrained(Nat m, Degree d, Nat a, Nat b, Nat c,
                              const MacaulayTable& table) {
  require_degree(d);
  const Nat bound = simplex_bound(m, d);
  if (c.is_zero()) precondition("c must be positive");
  if (std::max(a, b) > bound) {
    precondition("max(a, b) = " + std::max(a, b).str() +
                 " exceeds C(m-1+d, d) = " + bound.str());
  }
  if (a + b > bound + c) {
    precondition("a + b = " + (a + b).str() + " exceeds C(m-1+d, d) + c = " +
                 (bound + c).str());
  }
  return make_report(LemmaKind::Constrained,
                     {scalar("m", m), scalar("d", d), scalar("a", a),
                      scalar("b", b), scalar("c", c)},
                     table(a, d) + table(b, d), table(bound, d) + table(c, d));
}

LemmaReport check_naive_35(Nat a1, Nat a2, Nat b1, Nat b2, Degree d,
                           const MacaulayTable& table) {
  require_degree(d);
  if (a1 > b1 || a2 > b1) precondition("a1 and a2 must not exceed b1");
  if (a1 + a2 > b1 + b2) precondition("a1 + a2 must not exceed b1 + b2");
  return make_report(LemmaKind::Naive35,
                     {scalar("a1", a1), scalar("a2", a2), scalar("b1", b1),
                      scalar("b2", b2), scalar("d", d)},
                     table(a1, d) + table(a2, d), table(b1, d) + table(b2, d));
}

Normalization normalize_constrained(Nat m, Degree d, Nat a, Nat b, Nat c) {
  // Raises PreconditionViolated if the instance is outside the hypotheses.
  (void)check_constrained(m, d, a, b, c);
  Normalization n;
  n.bound = simplex_bound(m, d);
  n.swapped = a < b;
  n.a = n.swapped ? b : a;
  n.b = n.swapped ? a : b;
  if (n.b.is_zero()) {
    n.outcome = Normalization::Outcome::ZeroB;
    return n;
  }
  // Largest a' <= bound with a' + b <= bound + c.
  const Nat clamp = std::min(n.bound, n.bound + c - n.b);
  if (clamp != n.a) {
    n.a = clamp;
    n.clamped = true;
  }
  if (n.a == n.bound) n.outcome = Normalization::Outcome::AtBound;
  return n;
}

namespace {

// The construction step itself; valid for d = 1 as well, where it moves a
// single unit from b to a.
PairState advance(const PairState& cur, Degree d) {
  const Decomposition da = decompose_half_open(cur.a, d);
  const Decomposition db = decompose_half_closed(cur.b, d);
  const Nat& s = da.c;
  const Nat& t = db.c;
  const Nat threshold = da.remainder_bound();  // C(s-1+d, d-1)
  const Nat total = da.A + db.A;
  PairState next;
  next.step_index = cur.step_index + 1;
  if (total < threshold) {
    next.case_applied = CaseTag::Case1;
    next.a = binom(s + Nat(d) - 1, d) + total;
    next.b = binom(t + Nat(d) - 1, d);
  } else {
    next.case_applied = CaseTag::Case2;
    const Nat e = total - threshold;
    if (!(e < db.remainder_bound())) {
      throw Error(ErrorCode::InvariantViolated,
                  "case 2 excess e = " + e.str() +
                      " is not below C(t-1+d, d-1) = " +
                      db.remainder_bound().str());
    }
    next.a = binom(s + Nat(d), d);
    next.b = binom(t + Nat(d) - 1, d) + e;
  }
  return next;
}

}  // namespace

std::pair<PairState, PairState> construct_pair_step(Nat a, Nat b, Degree d) {
  require_degree(d);
  if (d < 2) {
    throw Error(ErrorCode::InvalidInput,
                "pair construction needs d > 1; d = 1 is the closed-form case");
  }
  if (b.is_zero() || b > a) {
    throw Error(ErrorCode::InvalidInput, "pair construction needs a >= b > 0");
  }
  PairState initial{a, b, 0, CaseTag::Initial};
  return {initial, advance(initial, d)};
}

ConstructionTrace trace_construction(Nat a, Nat b, Degree d, Nat m, Nat c,
                                     const MacaulayTable& table) {
  require_degree(d);
  (void)check_constrained(m, d, a, b, c);
  const Nat bound = simplex_bound(m, d);
  const Nat hi = std::max(a, b);
  const Nat lo = std::min(a, b);
  if (lo.is_zero()) precondition("b must be positive");
  if (hi >= bound) {
    precondition("max(a, b) must be below C(m-1+d, d) = " + bound.str());
  }
  if (a + b != bound + c) precondition("a + b must equal C(m-1+d, d) + c");

  ConstructionTrace trace;
  trace.bound = bound;
  trace.states.push_back({hi, lo, 0, CaseTag::Initial});
  const Nat total = a + b;
  std::optional<std::size_t> bound_index;
  while (!trace.states.back().b.is_zero()) {
    const PairState& cur = trace.states.back();
    if (Nat(cur.step_index) >= total) {
      throw Error(ErrorCode::InvariantViolated,
                  "pair construction exceeded its step budget");
    }
    PairState next = advance(cur, d);
    if (!(next.a > cur.a) || !(next.b < cur.b) || next.a + next.b != total ||
        table(next.a, d) + table(next.b, d) < table(cur.a, d) + table(cur.b, d)) {
      throw Error(ErrorCode::InvariantViolated,
                  "pair construction step from (" + cur.a.str() + ", " +
                      cur.b.str() + ") broke its transition invariants");
    }
    trace.states.push_back(next);
    if (!bound_index && next.a == bound) bound_index = next.step_index;
  }
  if (!bound_index) {
    throw Error(ErrorCode::InvariantViolated,
                "pair construction skipped over C(m-1+d, d)");
  }
  trace.bound_index = *bound_index;
  trace.end_index = trace.states.size() - 1;
  return trace;
}

Nat SequenceInstance::bound() const {
  require_degree(d);
  return simplex_bound(m, d);
}

void SequenceInstance::validate(ErrorCode code) const {
  auto fail = [code](const std::string& what) { throw Error(code, what); };
  const Nat C = bound();
  if (as.empty() || bs.empty()) fail("as and bs must be nonempty");
  if (!std::is_sorted(as.begin(), as.end())) fail("as must be nondecreasing");
  if (bs.front() > C) fail("b_1 exceeds C(m-1+d, d) = " + C.str());
  for (std::size_t i = 1; i < bs.size(); ++i) {
    if (bs[i] != C) fail("b_2, ..., b_s must equal C(m-1+d, d) = " + C.str());
  }
  if (as.back() > bs.back()) fail("every a_i must be at most b_s");
  if (sum(as) > sum(bs)) fail("sum(as) exceeds sum(bs)");
}

namespace {

class Replayer {
 public:
  Replayer(Degree d, Nat m, const MacaulayTable& table)
      : d_(d), m_(m), bound_(simplex_bound(m, d)), table_(table) {}

  ReplayNode run(std::vector<Nat> as, std::vector<Nat> bs) {
    SequenceInstance{as, bs, d_, m_}.validate(ErrorCode::ReplayDivergence);
    ReplayNode node;
    node.as = std::move(as);
    node.bs = std::move(bs);
    node.lhs = mac_sum(node.as);
    node.rhs = mac_sum(node.bs);
    const std::size_t t = node.as.size();
    const std::size_t s = node.bs.size();
    if (t == 1) {
      node.kind = ReplayCase::SingleA;
      monotone(node, node.as[0], node.bs.back());
    } else if (s == 1) {
      node.kind = ReplayCase::SingleB;
      const Nat total = fold_superadditive(node, node.as, 0);
      monotone(node, total, node.bs[0]);
    } else if (node.bs[0] >= node.as[0]) {
      node.kind = ReplayCase::Case1;
      const Nat a1 = node.as[0];
      const Nat b1 = node.bs[0];
      superadditive(node, a1, b1 - a1);
      std::vector<Nat> sub_b = node.bs;
      sub_b[0] = b1 - a1;
      descend(node, tail(node.as), std::move(sub_b));
    } else {
      case2(node);
    }
    node.holds = std::all_of(node.steps.begin(), node.steps.end(),
                             [](const ReplayStep& st) { return st.holds; }) &&
                 std::all_of(node.children.begin(), node.children.end(),
                             [](const ReplayNode& ch) { return ch.holds; });
    return node;
  }

 private:
  void case2(ReplayNode& node) {
    const std::size_t s = node.bs.size();
    const Nat a1 = node.as[0];
    const Nat b1 = node.bs[0];
    const Nat rest_a = sum(node.as) - a1;
    if (s == 2) {
      node.kind = ReplayCase::Case2Pair;
      if (rest_a > node.bs[1]) {
        diverge("case 2 with s = 2 needs a_2 + ... + a_t <= b_2");
      }
      fold_superadditive(node, node.as, 1);
      constrained(node, a1, rest_a, b1);
      return;
    }
    const Nat rest_b = sum(node.bs) - b1;  // b_2 + ... + b_s
    if (sum(node.as) <= rest_b) {
      node.kind = ReplayCase::Case2Drop;
      descend(node, node.as, tail(node.bs));
      return;
    }
    node.kind = ReplayCase::Case2Relabel;
    const Nat beyond = rest_b - node.bs[1];  // b_3 + ... + b_s
    if (rest_a <= beyond) diverge("relabel case reached with no excess");
    const Nat folded = rest_a - beyond;
    if (folded > bound_) {
      diverge("relabelled b'_1 = " + folded.str() +
              " exceeds C(m-1+d, d) = " + bound_.str());
    }
    constrained(node, a1, folded, b1);
    std::vector<Nat> sub_b = tail(node.bs);
    sub_b[0] = folded;
    descend(node, tail(node.as), std::move(sub_b));
  }

  void descend(ReplayNode& node, std::vector<Nat> as, std::vector<Nat> bs) {
    node.children.push_back(run(std::move(as), std::move(bs)));
  }

  // x <= y  =>  x^<d> <= y^<d>
  void monotone(ReplayNode& node, Nat x, Nat y) {
    if (x > y) diverge("monotonicity invoked with " + x.str() + " > " + y.str());
    push(node, "monotone", {x, y}, mac(x), mac(y));
  }

  void superadditive(ReplayNode& node, Nat x, Nat y) {
    push(node, "superadditive", {x, y}, mac(x) + mac(y), mac(x + y));
  }

  // Sum of values[from..], recording each superadditivity merge.
  Nat fold_superadditive(ReplayNode& node, const std::vector<Nat>& values,
                         std::size_t from) {
    Nat acc = values[from];
    for (std::size_t i = from + 1; i < values.size(); ++i) {
      superadditive(node, acc, values[i]);
      acc += values[i];
    }
    return acc;
  }

  // x^<d> + y^<d> <= C^<d> + c^<d> with max(x, y) <= C, x + y <= C + c.
  void constrained(ReplayNode& node, Nat x, Nat y, Nat c) {
    if (std::max(x, y) > bound_ || x + y > bound_ + c) {
      diverge("constrained step invoked outside its hypotheses");
    }
    if (c.is_zero()) {
      // x + y <= C: superadditivity, then monotonicity.
      superadditive(node, x, y);
      monotone(node, x + y, bound_);
      return;
    }
    const LemmaReport r = check_constrained(m_, d_, x, y, c, table_);
    push(node, "constrained", {x, y, c}, r.lhs, r.rhs);
  }

  void push(ReplayNode& node, std::string rule, std::vector<Nat> operands,
            Nat lhs, Nat rhs) {
    node.steps.push_back(
        {std::move(rule), std::move(operands), lhs, rhs, lhs <= rhs});
  }

  Nat mac(Nat x) const { return table_(x, d_); }

  Nat mac_sum(const std::vector<Nat>& v) const {
    Nat total = 0;
    for (Nat x : v) total += mac(x);
    return total;
  }

  static std::vector<Nat> tail(const std::vector<Nat>& v) {
    return {v.begin() + 1, v.end()};
  }

  [[noreturn]] static void diverge(const std::string& what) {
    throw Error(ErrorCode::ReplayDivergence, what);
  }

  Degree d_;
  Nat m_;
  Nat bound_;
  const MacaulayTable& table_;
};

}  // namespace

LemmaReport check_sequence_lemma(const SequenceInstance& inst,
                                 SequenceMode mode,
                                 const MacaulayTable& table) {
  inst.validate();
  std::vector<InstanceField> fields{
      list("as", inst.as), list("bs", inst.bs), scalar("d", inst.d),
      scalar("m", inst.m)};
  if (mode == SequenceMode::Direct) {
    Nat lhs = 0;
    Nat rhs = 0;
    for (Nat a : inst.as) lhs += table(a, inst.d);
    for (Nat b : inst.bs) rhs += table(b, inst.d);
    return make_report(LemmaKind::Sequence, std::move(fields), lhs, rhs);
  }
  Replayer replayer(inst.d, inst.m, table);
  ReplayNode root = replayer.run(inst.as, inst.bs);
  LemmaReport report;
  report.lemma = LemmaKind::Sequence;
  report.instance = std::move(fields);
  report.lhs = root.lhs;
  report.rhs = root.rhs;
  report.holds = root.holds;
  report.replay = std::move(root);
  return report;
}

}  // namespace macaulay
