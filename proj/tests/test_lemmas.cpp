#include <functional>
#include <set>

#include "doctest.h"
#include "macaulay/lemmas.hpp"

using namespace macaulay;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidInput;
}

void walk(const ReplayNode& node, const std::function<void(const ReplayNode&)>& fn) {
  fn(node);
  for (const auto& ch : node.children) walk(ch, fn);
}

}  // namespace

TEST_CASE("superadditivity examples") {
  auto r = check_superadditive(4, 4, 3);
  CHECK(r.lhs == Nat(10));
  CHECK(r.rhs == Nat(10));
  CHECK(r.holds);
  r = check_superadditive(9, 0, 4);
  CHECK(r.lhs == macaulay_value(9, 4));
  CHECK(r.rhs == r.lhs);
  r = check_superadditive(3, 3, 1);
  CHECK(r.lhs == Nat(12));
  CHECK(r.rhs == Nat(21));
  CHECK(r.holds);
  CHECK(code_of([] { (void)check_superadditive(1, 1, 0); }) == ErrorCode::InvalidDegree);
}

TEST_CASE("superadditivity holds, a, b <= 300, d <= 4") {
  const MacaulayTable table(600, 4);
  for (Degree d = 1; d <= 4; ++d) {
    for (std::uint64_t a = 0; a <= 300; ++a) {
      for (std::uint64_t b = 0; b <= 300; ++b) {
        REQUIRE(check_superadditive(a, b, d, table).holds);
      }
    }
  }
}

TEST_CASE("constrained examples") {
  auto r = check_constrained(2, 3, 3, 3, 2);
  CHECK(r.lhs == Nat(6));
  CHECK(r.rhs == Nat(7));
  CHECK(r.holds);
  r = check_constrained(2, 3, 4, 4, 4);
  CHECK(r.lhs == Nat(10));
  CHECK(r.rhs == Nat(10));
  CHECK(r.holds);
  // a at the bound with b <= c: monotonicity
  r = check_constrained(3, 2, 6, 2, 3);
  CHECK(r.holds);
}

TEST_CASE("constrained preconditions") {
  using E = ErrorCode;
  CHECK(code_of([] { (void)check_constrained(2, 3, 3, 3, 0); }) == E::PreconditionViolated);
  CHECK(code_of([] { (void)check_constrained(2, 3, 5, 1, 4); }) == E::PreconditionViolated);
  CHECK(code_of([] { (void)check_constrained(2, 3, 4, 4, 3); }) == E::PreconditionViolated);
  CHECK(code_of([] { (void)check_constrained(0, 3, 0, 0, 1); }) == E::PreconditionViolated);
  CHECK(code_of([] { (void)check_constrained(2, 0, 1, 1, 1); }) == E::InvalidDegree);
}

TEST_CASE("constrained holds, m <= 4, d <= 3") {
  for (Degree d = 1; d <= 3; ++d) {
    for (std::uint64_t m = 1; m <= 4; ++m) {
      const std::uint64_t C = binom(m - 1 + d, d).value();
      for (std::uint64_t a = 0; a <= C; ++a) {
        for (std::uint64_t b = 0; b <= C; ++b) {
          for (std::uint64_t c = 1; c <= C; ++c) {
            if (a + b > C + c) continue;
            REQUIRE(check_constrained(m, d, a, b, c).holds);
          }
        }
      }
    }
  }
}

TEST_CASE("d = 1 base-case identity m c = ab - ij") {
  for (std::int64_t a = 0; a <= 200; ++a) {
    for (std::int64_t b = 0; b <= a; ++b) {
      // a + b = m + c with m >= a >= b, c >= 0
      for (std::int64_t m = a; m <= a + b; ++m) {
        const std::int64_t c = a + b - m;
        const std::int64_t i = m - a;
        const std::int64_t j = m - b;
        REQUIRE(m * c == (a + i) * (a - j));
        REQUIRE((a + i) * (a - j) == a * (a + i - j) - i * j);
        REQUIRE(a * (a + i - j) == a * b);
        REQUIRE(m * c <= a * b);
        if (c >= 1 && m >= 1) {
          REQUIRE(check_constrained(m, 1, a, b, c).holds);
        }
      }
    }
  }
}

TEST_CASE("naive claim") {
  auto r = check_naive_35(4, 4, 6, 2, 3);
  CHECK(r.lhs == Nat(10));
  CHECK(r.rhs == Nat(9));
  CHECK_FALSE(r.holds);
  CHECK(check_naive_35(7, 0, 7, 0, 2).holds);
  CHECK(code_of([] { (void)check_naive_35(7, 1, 6, 9, 2); }) ==
        ErrorCode::PreconditionViolated);
  CHECK(code_of([] { (void)check_naive_35(2, 2, 2, 1, 2); }) ==
        ErrorCode::PreconditionViolated);
}

TEST_CASE("naive claim agrees with the constrained lemma when b1 = C(m-1+d, d)") {
  for (Degree d = 1; d <= 3; ++d) {
    for (std::uint64_t m = 1; m <= 4; ++m) {
      const std::uint64_t b1 = binom(m - 1 + d, d).value();
      for (std::uint64_t a1 = 0; a1 <= b1; ++a1) {
        for (std::uint64_t a2 = 0; a2 <= b1; ++a2) {
          for (std::uint64_t b2 = 0; b2 <= b1 + 3; ++b2) {
            if (a1 + a2 > b1 + b2) continue;
            const auto naive = check_naive_35(a1, a2, b1, b2, d);
            REQUIRE(naive.holds);
            if (b2 >= 1) {
              const auto constrained = check_constrained(m, d, a1, a2, b2);
              REQUIRE(constrained.lhs == naive.lhs);
              REQUIRE(constrained.rhs == naive.rhs);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("normalize_constrained") {
  using O = Normalization::Outcome;
  // already normalized
  auto n = normalize_constrained(2, 3, 3, 3, 2);
  CHECK(n.outcome == O::Construct);
  CHECK(n.a == Nat(3));
  CHECK(n.b == Nat(3));
  CHECK(n.bound == Nat(4));
  CHECK_FALSE(n.swapped);
  CHECK_FALSE(n.clamped);
  // swap
  n = normalize_constrained(3, 3, 2, 9, 1);
  CHECK(n.swapped);
  CHECK(n.a == Nat(9));
  CHECK(n.b == Nat(2));
  CHECK(n.outcome == O::Construct);
  // zero b
  n = normalize_constrained(2, 3, 0, 4, 1);
  CHECK(n.outcome == O::ZeroB);
  // a at the bound
  n = normalize_constrained(2, 3, 4, 1, 2);
  CHECK(n.outcome == O::AtBound);
  // slack: 2 + 2 < 4 + 3, clamp a up to the bound
  n = normalize_constrained(2, 3, 2, 2, 3);
  CHECK(n.clamped);
  CHECK(n.a == Nat(4));
  CHECK(n.outcome == O::AtBound);
  // slack smaller than the room below the bound: C(5,3) = 10, b = 6, c = 1
  n = normalize_constrained(3, 3, 7, 6, 9);
  CHECK(n.outcome == O::AtBound);
  n = normalize_constrained(3, 3, 6, 6, 3);
  CHECK(n.clamped);
  CHECK(n.a == Nat(7));
  CHECK(n.a + n.b == n.bound + Nat(3));
  CHECK(n.outcome == O::Construct);
  CHECK(code_of([] { (void)normalize_constrained(2, 3, 5, 0, 1); }) ==
        ErrorCode::PreconditionViolated);
}

TEST_CASE("construct_pair_step examples") {
  auto [before, after] = construct_pair_step(3, 3, 3);
  CHECK(before == PairState{3, 3, 0, CaseTag::Initial});
  CHECK(after == PairState{4, 2, 1, CaseTag::Case2});

  // 4 = C(4,3) + 0, 2 = C(3,3) + 1; 0 + 1 < C(4,2): case 1
  auto [b2, a2] = construct_pair_step(4, 2, 3);
  CHECK(a2 == PairState{5, 1, 1, CaseTag::Case1});
  CHECK(a2.a + a2.b == b2.a + b2.b);

  CHECK(code_of([] { (void)construct_pair_step(3, 0, 3); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { (void)construct_pair_step(3, 3, 1); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { (void)construct_pair_step(2, 3, 3); }) == ErrorCode::InvalidInput);
}

TEST_CASE("construct_pair_step transition invariants, a, b <= 300, d in {2, 3, 4}") {
  const MacaulayTable table(600, 4);
  for (Degree d = 2; d <= 4; ++d) {
    for (std::uint64_t a = 1; a <= 300; ++a) {
      const Nat s = decompose_half_open(a, d).c;
      const Nat cap = binom(s + Nat(d), d);
      for (std::uint64_t b = 1; b <= a; ++b) {
        const auto [x, y] = construct_pair_step(a, b, d);
        REQUIRE(y.b < x.b);           // 0 <= b1 < b
        REQUIRE(x.b <= x.a);          // b <= a
        REQUIRE(x.a < y.a);           // a < a1
        REQUIRE(y.a <= cap);          // a1 <= C(s+d, d)
        REQUIRE(y.a + y.b == x.a + x.b);
        REQUIRE(table(x.a, d) + table(x.b, d) <= table(y.a, d) + table(y.b, d));
      }
    }
  }
}

TEST_CASE("trace_construction example") {
  const auto trace = trace_construction(3, 3, 3, 2, 2);
  const std::vector<PairState> expected{{3, 3, 0, CaseTag::Initial},
                                        {4, 2, 1, CaseTag::Case2},
                                        {5, 1, 2, CaseTag::Case1},
                                        {6, 0, 3, CaseTag::Case1}};
  CHECK(trace.states == expected);
  CHECK(trace.bound == Nat(4));
  CHECK(trace.bound_index == 1);
  CHECK(trace.states[trace.bound_index].b == Nat(2));  // = c
  CHECK(trace.end_index == 3);
}

TEST_CASE("trace_construction preconditions") {
  using E = ErrorCode;
  CHECK(code_of([] { (void)trace_construction(4, 0, 3, 2, 1); }) == E::PreconditionViolated);
  CHECK(code_of([] { (void)trace_construction(3, 2, 3, 2, 2); }) == E::PreconditionViolated);
  CHECK(code_of([] { (void)trace_construction(4, 1, 3, 2, 1); }) == E::PreconditionViolated);
  CHECK(code_of([] { (void)trace_construction(3, 3, 3, 2, 0); }) == E::PreconditionViolated);
}

TEST_CASE("trace_construction at d = 1 moves one unit at a time") {
  const auto trace = trace_construction(5, 4, 1, 7, 2);
  REQUIRE(trace.states.size() == 5);
  for (std::size_t i = 0; i < trace.states.size(); ++i) {
    CHECK(trace.states[i].a == Nat(5 + i));
  }
  CHECK(trace.states[trace.bound_index].a == Nat(7));
  CHECK(trace.states[trace.bound_index].b == Nat(2));
}

TEST_CASE("trace_construction reaches both endpoints, a, b <= 60, d <= 4") {
  const MacaulayTable table(200, 4);
  for (Degree d = 1; d <= 4; ++d) {
    for (std::uint64_t m = 1;; ++m) {
      const std::uint64_t C = binom(m - 1 + d, d).value();
      if (C > 120) break;
      for (std::uint64_t a = 1; a < C && a <= 60; ++a) {
        for (std::uint64_t b = 1; b <= a; ++b) {
          if (a + b <= C) continue;
          const std::uint64_t c = a + b - C;
          const auto tr = trace_construction(a, b, d, m, c, table);
          REQUIRE(tr.states[tr.bound_index].a == Nat(C));
          REQUIRE(tr.states[tr.bound_index].b == Nat(c));
          REQUIRE(tr.states[tr.end_index].a == Nat(a + b));
          REQUIRE(tr.states[tr.end_index].b == Nat(0));
          REQUIRE(tr.end_index <= a + b);
        }
      }
    }
  }
}

TEST_CASE("sequence lemma examples") {
  const SequenceInstance inst{{2, 3, 4}, {3, 4, 4}, 3, 2};
  for (auto mode : {SequenceMode::Direct, SequenceMode::ProofReplay}) {
    const auto r = check_sequence_lemma(inst, mode);
    CHECK(r.lhs == Nat(10));
    CHECK(r.rhs == Nat(13));
    CHECK(r.holds);
  }
  const auto replay = check_sequence_lemma(inst, SequenceMode::ProofReplay);
  REQUIRE(replay.replay);
  CHECK(replay.replay->kind == ReplayCase::Case1);

  const SequenceInstance single{{4}, {4}, 3, 2};
  const auto r = check_sequence_lemma(single, SequenceMode::ProofReplay);
  CHECK(r.lhs == Nat(5));
  CHECK(r.rhs == Nat(5));
  CHECK(r.holds);
  CHECK(r.replay->kind == ReplayCase::SingleA);
}

TEST_CASE("sequence instance validation") {
  auto bad = [](SequenceInstance inst) {
    return code_of([&] { (void)check_sequence_lemma(inst, SequenceMode::Direct); });
  };
  using E = ErrorCode;
  CHECK(bad({{3, 2}, {4, 4}, 3, 2}) == E::InvariantViolated);     // not sorted
  CHECK(bad({{1, 2}, {4, 3}, 3, 2}) == E::InvariantViolated);     // b_2 != C
  CHECK(bad({{1, 2}, {5, 4}, 3, 2}) == E::InvariantViolated);     // b_1 > C
  CHECK(bad({{4, 4, 4}, {3, 4, 4}, 3, 2}) == E::InvariantViolated);  // sum
  CHECK(bad({{5}, {4, 4}, 3, 2}) == E::InvariantViolated);        // a > b_s
  CHECK(bad({{}, {4}, 3, 2}) == E::InvariantViolated);            // empty
}

TEST_CASE("proof replay matches direct evaluation and every branch is exercised") {
  std::set<ReplayCase> seen;
  std::size_t instances = 0;
  for (Degree d = 1; d <= 3; ++d) {
    for (std::uint64_t m = 1; m <= 4; ++m) {
      const std::uint64_t C = binom(m - 1 + d, d).value();
      if (C > 10) continue;
      for (std::size_t s = 1; s <= 4; ++s) {
        for (std::uint64_t b1 = 0; b1 <= C; ++b1) {
          std::vector<Nat> bs(s, C);
          bs[0] = b1;
          const std::uint64_t cap = bs.back().value();
          std::uint64_t b_total = 0;
          for (Nat b : bs) b_total += b.value();
          // as of length up to 4, plain odometer
          for (std::size_t t = 1; t <= 4; ++t) {
            std::vector<std::uint64_t> as(t, 0);
            for (;;) {
              std::uint64_t a_total = 0;
              bool sorted = true;
              for (std::size_t i = 0; i < t; ++i) {
                a_total += as[i];
                if (i && as[i] < as[i - 1]) sorted = false;
              }
              if (sorted && a_total <= b_total) {
                const SequenceInstance inst{{as.begin(), as.end()}, bs, d, m};
                const auto direct = check_sequence_lemma(inst, SequenceMode::Direct);
                const auto replay = check_sequence_lemma(inst, SequenceMode::ProofReplay);
                REQUIRE(direct.holds);
                REQUIRE(replay.holds == direct.holds);
                REQUIRE(replay.lhs == direct.lhs);
                REQUIRE(replay.rhs == direct.rhs);
                walk(*replay.replay, [&](const ReplayNode& node) {
                  seen.insert(node.kind);
                  SequenceInstance{node.as, node.bs, d, m}.validate();
                  for (const auto& st : node.steps) REQUIRE(st.holds);
                });
                ++instances;
              }
              std::size_t pos = 0;
              while (pos < t && as[pos] == cap) as[pos++] = 0;
              if (pos == t) break;
              ++as[pos];
            }
          }
        }
      }
    }
  }
  CHECK(instances > 1000);
  CHECK(seen.size() == 6);
}
