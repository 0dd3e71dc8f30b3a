#include "macaulay/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <thread>

namespace macaulay {

void SweepConfig::validate() const {
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::InvalidInput, what);
  };
  if (max_value.is_zero()) fail("max_value must be at least 1");
  if (min_d == 0 || max_d == 0) fail("degrees must be positive");
  if (min_d > max_d) fail("min_d exceeds max_d");
  if (max_m.is_zero()) fail("max_m must be at least 1");
  if (max_len == 0) fail("max_len must be at least 1");
  if (worker_count == 0) fail("worker_count must be at least 1");
}

namespace {

struct ChunkResult {
  std::uint64_t checked = 0;
  std::vector<LemmaReport> violations;
};

// Runs body(i) for every chunk index on a pool of workers and returns the
// results in chunk order. The first failing chunk, by index, is rethrown.
std::vector<ChunkResult> run_chunks(std::size_t chunks, unsigned workers,
                                    const std::function<ChunkResult(std::size_t)>& body) {
  std::vector<ChunkResult> results(chunks);
  std::vector<std::exception_ptr> errors(chunks);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < chunks;) {
      try {
        results[i] = body(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1U, std::min<unsigned>(workers, chunks));
  if (n == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n);
    for (unsigned w = 0; w < n; ++w) pool.emplace_back(work);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

SweepSummary merge(LemmaKind kind, std::vector<ChunkResult> parts) {
  SweepSummary summary;
  summary.lemma = kind;
  for (auto& p : parts) {
    summary.instances_checked += p.checked;
    std::move(p.violations.begin(), p.violations.end(),
              std::back_inserter(summary.violations));
  }
  return summary;
}

struct DegreeChunk {
  Degree d;
  Nat::word lead;
};

// Cartesian (d, lead) chunk index, d outermost.
std::vector<DegreeChunk> degree_chunks(const SweepConfig& cfg,
                                       const std::function<Nat::word(Degree)>& leads) {
  std::vector<DegreeChunk> out;
  for (Degree d = cfg.min_d; d <= cfg.max_d; ++d) {
    const Nat::word n = leads(d);
    for (Nat::word i = 0; i < n; ++i) out.push_back({d, i});
  }
  return out;
}

SweepSummary sweep_superadditive(const SweepConfig& cfg) {
  const Nat::word max = cfg.max_value.value();
  const MacaulayTable table(cfg.max_value * 2, cfg.max_d);
  const auto chunks = degree_chunks(cfg, [&](Degree) { return max + 1; });
  auto parts = run_chunks(chunks.size(), cfg.worker_count, [&](std::size_t i) {
    const auto [d, a] = chunks[i];
    ChunkResult r;
    for (Nat::word b = 0; b <= max; ++b) {
      ++r.checked;
      LemmaReport rep = check_superadditive(a, b, d, table);
      if (!rep.holds) r.violations.push_back(std::move(rep));
    }
    return r;
  });
  return merge(LemmaKind::Superadditive, std::move(parts));
}

// Naive35 chunks are (d, a1 + a2).
ChunkResult naive35_chunk(Degree d, Nat::word sum, Nat::word max,
                          const MacaulayTable& table) {
  ChunkResult r;
  const Nat::word a1_lo = sum > max ? sum - max : 0;
  const Nat::word a1_hi = std::min(sum, max);
  for (Nat::word a1 = a1_lo; a1 <= a1_hi; ++a1) {
    const Nat::word a2 = sum - a1;
    for (Nat::word b1 = std::max(a1, a2); b1 <= max; ++b1) {
      const Nat::word b2_lo = sum > b1 ? sum - b1 : 0;
      for (Nat::word b2 = b2_lo; b2 <= max; ++b2) {
        ++r.checked;
        LemmaReport rep = check_naive_35(a1, a2, b1, b2, d, table);
        if (!rep.holds) r.violations.push_back(std::move(rep));
      }
    }
  }
  return r;
}

SweepSummary sweep_naive35(const SweepConfig& cfg) {
  const Nat::word max = cfg.max_value.value();
  const MacaulayTable table(cfg.max_value, cfg.max_d);
  const auto chunks = degree_chunks(cfg, [&](Degree) { return 2 * max + 1; });
  auto parts = run_chunks(chunks.size(), cfg.worker_count, [&](std::size_t i) {
    return naive35_chunk(chunks[i].d, chunks[i].lead, max, table);
  });
  return merge(LemmaKind::Naive35, std::move(parts));
}

struct ModelChunk {
  Degree d;
  Nat m;
  Nat bound;
  Nat::word lead;
};

std::vector<ModelChunk> model_chunks(const SweepConfig& cfg,
                                     const std::function<Nat::word(Nat)>& leads) {
  std::vector<ModelChunk> out;
  for (Degree d = cfg.min_d; d <= cfg.max_d; ++d) {
    for (Nat m = 1; m <= cfg.max_m; ++m) {
      const Nat bound = binom(m + Nat(d) - 1, d);
      const Nat::word n = leads(bound);
      for (Nat::word i = 0; i < n; ++i) out.push_back({d, m, bound, i});
    }
  }
  return out;
}

Nat largest_bound(const SweepConfig& cfg) {
  Nat best = 0;
  for (Degree d = cfg.min_d; d <= cfg.max_d; ++d) {
    best = std::max(best, binom(cfg.max_m + Nat(d) - 1, d));
  }
  return best;
}

SweepSummary sweep_constrained(const SweepConfig& cfg) {
  const MacaulayTable table(largest_bound(cfg), cfg.max_d);
  const auto chunks =
      model_chunks(cfg, [](Nat bound) { return bound.value() + 1; });
  auto parts = run_chunks(chunks.size(), cfg.worker_count, [&](std::size_t i) {
    const auto& ch = chunks[i];
    const Nat::word C = ch.bound.value();
    const Nat::word a = ch.lead;
    ChunkResult r;
    for (Nat::word b = 0; b <= C; ++b) {
      // a + b <= C + c <= 2C, c >= 1
      const Nat::word c_lo = std::max<Nat::word>(1, a + b > C ? a + b - C : 0);
      for (Nat::word c = c_lo; c <= C; ++c) {
        ++r.checked;
        LemmaReport rep = check_constrained(ch.m, ch.d, a, b, c, table);
        if (!rep.holds) r.violations.push_back(std::move(rep));
      }
    }
    return r;
  });
  return merge(LemmaKind::Constrained, std::move(parts));
}

// Calls emit on every nondecreasing sequence of length len over [0, max].
void nondecreasing(std::size_t len, Nat::word max,
                   const std::function<void(const std::vector<Nat>&)>& emit) {
  std::vector<Nat> cur(len);
  std::function<void(std::size_t, Nat::word)> rec = [&](std::size_t pos,
                                                        Nat::word from) {
    if (pos == len) {
      emit(cur);
      return;
    }
    for (Nat::word v = from; v <= max; ++v) {
      cur[pos] = v;
      rec(pos + 1, v);
    }
  };
  rec(0, 0);
}

// Sequence chunks are (d, m, b_1); inside, t and s run 1..max_len.
SweepSummary sweep_sequence(const SweepConfig& cfg) {
  const MacaulayTable table(largest_bound(cfg) * Nat(cfg.max_len), cfg.max_d);
  const auto chunks =
      model_chunks(cfg, [](Nat bound) { return bound.value() + 1; });
  auto parts = run_chunks(chunks.size(), cfg.worker_count, [&](std::size_t i) {
    const auto& ch = chunks[i];
    const Nat b1 = ch.lead;
    ChunkResult r;
    for (std::size_t s = 1; s <= cfg.max_len; ++s) {
      std::vector<Nat> bs(s, ch.bound);
      bs[0] = b1;
      Nat b_total = 0;
      for (Nat b : bs) b_total += b;
      for (std::size_t t = 1; t <= cfg.max_len; ++t) {
        nondecreasing(t, bs.back().value(), [&](const std::vector<Nat>& as) {
          Nat a_total = 0;
          for (Nat a : as) a_total += a;
          if (a_total > b_total) return;
          ++r.checked;
          const SequenceInstance inst{as, bs, ch.d, ch.m};
          LemmaReport direct = check_sequence_lemma(inst, SequenceMode::Direct, table);
          LemmaReport replay =
              check_sequence_lemma(inst, SequenceMode::ProofReplay, table);
          if (!direct.holds) {
            r.violations.push_back(std::move(direct));
          } else if (!replay.holds) {
            r.violations.push_back(std::move(replay));
          }
        });
      }
    }
    return r;
  });
  return merge(LemmaKind::Sequence, std::move(parts));
}

}  // namespace

std::vector<ViolationRecord> find_violations_35(const SweepConfig& cfg) {
  SweepConfig c = cfg;
  c.lemma = LemmaKind::Naive35;
  c.validate();
  const SweepSummary summary = sweep_naive35(c);
  std::vector<ViolationRecord> out;
  out.reserve(summary.violations.size());
  for (const auto& rep : summary.violations) {
    const auto& f = rep.instance;
    out.push_back({f[0].values[0], f[1].values[0], f[2].values[0],
                   f[3].values[0], static_cast<Degree>(f[4].values[0].value()),
                   rep.lhs, rep.rhs});
  }
  return out;
}

SweepSummary sweep_lemma(const SweepConfig& cfg) {
  cfg.validate();
  switch (cfg.lemma) {
    case LemmaKind::Superadditive: return sweep_superadditive(cfg);
    case LemmaKind::Constrained: return sweep_constrained(cfg);
    case LemmaKind::Sequence: return sweep_sequence(cfg);
    case LemmaKind::Naive35: return sweep_naive35(cfg);
  }
  throw Error(ErrorCode::InvalidInput, "unknown lemma");
}

}  // namespace macaulay
