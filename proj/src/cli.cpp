#include "macaulay/cli.hpp"

#include <functional>
#include <map>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "macaulay/output.hpp"

namespace macaulay::cli {

namespace {

using output::Format;
using output::Json;
using output::num;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Nat parse_nat(const std::string& text, const std::string& what) {
  if (auto n = Nat::parse(text)) return *n;
  throw UsageError(what + " must be a nonnegative integer, got '" + text + "'");
}

Degree parse_degree(const std::string& text, const std::string& what = "d") {
  const Nat n = parse_nat(text, what);
  if (n.is_zero()) throw UsageError(what + " must be positive");
  if (n > Nat(1U << 16)) throw UsageError(what + " is unreasonably large");
  return static_cast<Degree>(n.value());
}

std::vector<Nat> parse_list(const std::string& text, const std::string& what) {
  std::vector<Nat> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    out.push_back(parse_nat(item, what + " entry"));
  }
  if (out.empty()) throw UsageError(what + " must not be empty");
  return out;
}

Json nums(const std::vector<Nat>& v) {
  Json out = Json::array();
  for (Nat x : v) out.push_back(num(x));
  return out;
}

struct Outcome {
  std::vector<Json> records;
  int code = kOk;
};

/// State shared between option callbacks and command handlers.
struct Args {
  std::string format = "json";
  std::string a, b, a1, a2, b1, b2;
  std::string d, m, c;
  std::string as, bs;
  std::string mode = "direct";
  std::string method = "definitional";
  std::string lemma;
  std::string max = "10", max_d, max_m = "4", max_len = "4", workers = "1";
};

Outcome cmd_rep(const Args& args) {
  const Nat a = parse_nat(args.a, "a");
  const Degree d = parse_degree(args.d);
  const BinomialRep rep = d_binomial_rep(a, d);
  Json inputs{{"a", num(a)}, {"d", num(d)}};
  Json result = output::to_json(rep);
  result["value"] = num(rep_value(rep));
  return {{output::make_record("rep", std::move(inputs), std::move(result))}};
}

Outcome cmd_macaulay(const Args& args) {
  const Nat a = parse_nat(args.a, "a");
  const Degree d = parse_degree(args.d);
  Json inputs{{"a", num(a)}, {"d", num(d)}, {"method", args.method}};
  Json result;
  int code = kOk;
  if (args.method == "both") {
    const Nat def = evaluate(a, d, Method::Definitional).output;
    const Nat rec = evaluate(a, d, Method::Recursive).output;
    const bool agree = def == rec;
    result = Json{{"value", num(def)},
                  {"definitional", num(def)},
                  {"recursive", num(rec)},
                  {"agree", agree}};
    if (!agree) code = kInternal;
  } else {
    const Method method =
        args.method == "recursive" ? Method::Recursive : Method::Definitional;
    result = Json{{"value", num(evaluate(a, d, method).output)}};
  }
  return {{output::make_record("macaulay", std::move(inputs), std::move(result))},
          code};
}

Outcome report_outcome(const std::string& command, Json inputs,
                       const LemmaReport& report) {
  return {{output::make_record(command, std::move(inputs),
                               output::to_json(report))},
          report.holds ? kOk : kViolation};
}

Outcome cmd_check(const std::string& lemma, const Args& args) {
  const std::string command = "check " + lemma;
  const Degree d = parse_degree(args.d);
  if (lemma == "super") {
    const Nat a = parse_nat(args.a, "a");
    const Nat b = parse_nat(args.b, "b");
    return report_outcome(command, Json{{"a", num(a)}, {"b", num(b)}, {"d", num(d)}},
                          check_superadditive(a, b, d));
  }
  if (lemma == "constrained") {
    const Nat a = parse_nat(args.a, "a");
    const Nat b = parse_nat(args.b, "b");
    const Nat m = parse_nat(args.m, "m");
    const Nat c = parse_nat(args.c, "c");
    return report_outcome(command,
                          Json{{"a", num(a)},
                               {"b", num(b)},
                               {"d", num(d)},
                               {"m", num(m)},
                               {"c", num(c)}},
                          check_constrained(m, d, a, b, c));
  }
  if (lemma == "naive35") {
    const Nat a1 = parse_nat(args.a1, "a1");
    const Nat a2 = parse_nat(args.a2, "a2");
    const Nat b1 = parse_nat(args.b1, "b1");
    const Nat b2 = parse_nat(args.b2, "b2");
    return report_outcome(command,
                          Json{{"a1", num(a1)},
                               {"a2", num(a2)},
                               {"b1", num(b1)},
                               {"b2", num(b2)},
                               {"d", num(d)}},
                          check_naive_35(a1, a2, b1, b2, d));
  }
  // seq
  SequenceInstance inst{parse_list(args.as, "--as"), parse_list(args.bs, "--bs"),
                        d, parse_nat(args.m, "m")};
  const SequenceMode mode = args.mode == "proof-replay" ? SequenceMode::ProofReplay
                                                        : SequenceMode::Direct;
  inst.validate(ErrorCode::PreconditionViolated);
  return report_outcome(command,
                        Json{{"as", nums(inst.as)},
                             {"bs", nums(inst.bs)},
                             {"d", num(d)},
                             {"m", num(inst.m)},
                             {"mode", to_string(mode)}},
                        check_sequence_lemma(inst, mode));
}

Outcome cmd_trace(const Args& args) {
  const Nat a = parse_nat(args.a, "a");
  const Nat b = parse_nat(args.b, "b");
  const Degree d = parse_degree(args.d);
  const Nat m = parse_nat(args.m, "m");
  const Nat c = parse_nat(args.c, "c");
  const ConstructionTrace trace = trace_construction(a, b, d, m, c);
  // Re-check the sum on every emitted state.
  for (const auto& s : trace.states) {
    if (s.a + s.b != a + b) {
      throw Error(ErrorCode::InvariantViolated, "trace lost sum preservation");
    }
  }
  return {{output::make_record(
      "trace",
      Json{{"a", num(a)}, {"b", num(b)}, {"d", num(d)}, {"m", num(m)}, {"c", num(c)}},
      output::to_json(trace))}};
}

LemmaKind parse_lemma(const std::string& name) {
  static const std::map<std::string, LemmaKind> kinds{
      {"super", LemmaKind::Superadditive},
      {"constrained", LemmaKind::Constrained},
      {"seq", LemmaKind::Sequence},
      {"naive35", LemmaKind::Naive35}};
  const auto it = kinds.find(name);
  if (it == kinds.end()) throw UsageError("unknown lemma '" + name + "'");
  return it->second;
}

Outcome cmd_sweep(const Args& args) {
  SweepConfig cfg;
  cfg.lemma = parse_lemma(args.lemma);
  cfg.max_value = parse_nat(args.max, "--max");
  if (!args.d.empty()) {
    cfg.min_d = cfg.max_d = parse_degree(args.d);
  } else {
    cfg.min_d = 1;
    cfg.max_d = args.max_d.empty() ? 1 : parse_degree(args.max_d, "--max-d");
  }
  cfg.max_m = parse_nat(args.max_m, "--m");
  cfg.max_len = parse_nat(args.max_len, "--max-len").value();
  const Nat workers = parse_nat(args.workers, "--workers");
  if (workers.is_zero() || workers > Nat(1024)) {
    throw UsageError("--workers must be between 1 and 1024");
  }
  cfg.worker_count = static_cast<unsigned>(workers.value());
  cfg.validate();

  // Worker count is deliberately absent: it must not change the output.
  Json inputs{{"lemma", to_string(cfg.lemma)},
              {"min_d", num(cfg.min_d)},
              {"max_d", num(cfg.max_d)}};
  if (cfg.lemma == LemmaKind::Superadditive || cfg.lemma == LemmaKind::Naive35) {
    inputs["max"] = num(cfg.max_value);
  } else {
    inputs["max_m"] = num(cfg.max_m);
  }
  if (cfg.lemma == LemmaKind::Sequence) inputs["max_len"] = num(cfg.max_len);

  Outcome out;
  std::uint64_t violations = 0;
  std::uint64_t checked = 0;
  if (cfg.lemma == LemmaKind::Naive35) {
    const auto records = find_violations_35(cfg);
    violations = records.size();
    for (const auto& r : records) {
      out.records.push_back(output::make_record(
          "sweep", inputs, Json{{"violation", output::to_json(r)}}));
    }
    checked = sweep_lemma(cfg).instances_checked;
  } else {
    const SweepSummary summary = sweep_lemma(cfg);
    checked = summary.instances_checked;
    violations = summary.violations.size();
    for (const auto& r : summary.violations) {
      out.records.push_back(output::make_record(
          "sweep", inputs, Json{{"violation", output::to_json(r)}}));
    }
    if (violations) out.code = kViolation;
  }
  out.records.push_back(output::make_record(
      "sweep", inputs,
      Json{{"summary",
            Json{{"instances_checked", num(checked)}, {"violations", num(violations)}}}}));
  return out;
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  Args args;
  CLI::App app{"Macaulay representations, growth function and inequality checks",
               "macaulay"};
  app.require_subcommand(1);

  std::function<Outcome()> handler;
  auto leaf = [&](CLI::App* sub, std::function<Outcome()> fn) {
    sub->add_option("--format", args.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));
    sub->callback([&handler, fn = std::move(fn)] { handler = fn; });
  };

  auto* rep = app.add_subcommand("rep", "d-binomial representation of a");
  rep->add_option("a", args.a)->required();
  rep->add_option("d", args.d)->required();
  leaf(rep, [&] { return cmd_rep(args); });

  auto* mac = app.add_subcommand("macaulay", "Macaulay function a^<d>");
  mac->add_option("a", args.a)->required();
  mac->add_option("d", args.d)->required();
  mac->add_option("--method", args.method)
      ->check(CLI::IsMember({"definitional", "recursive", "both"}));
  leaf(mac, [&] { return cmd_macaulay(args); });

  auto* check = app.add_subcommand("check", "check one lemma instance");
  check->require_subcommand(1);
  auto* super = check->add_subcommand("super", "a^<d> + b^<d> <= (a+b)^<d>");
  super->add_option("a", args.a)->required();
  super->add_option("b", args.b)->required();
  super->add_option("--d", args.d)->required();
  leaf(super, [&] { return cmd_check("super", args); });

  auto* constrained =
      check->add_subcommand("constrained", "bounded two-term inequality");
  constrained->add_option("a", args.a)->required();
  constrained->add_option("b", args.b)->required();
  constrained->add_option("--d", args.d)->required();
  constrained->add_option("--m", args.m)->required();
  constrained->add_option("--c", args.c)->required();
  leaf(constrained, [&] { return cmd_check("constrained", args); });

  auto* seq = check->add_subcommand("seq", "sequence inequality");
  seq->add_option("--as", args.as)->required();
  seq->add_option("--bs", args.bs)->required();
  seq->add_option("--d", args.d)->required();
  seq->add_option("--m", args.m)->required();
  seq->add_option("--mode", args.mode)
      ->check(CLI::IsMember({"direct", "proof-replay"}));
  leaf(seq, [&] { return cmd_check("seq", args); });

  auto* naive = check->add_subcommand("naive35", "the unrestricted two-term claim");
  naive->add_option("a1", args.a1)->required();
  naive->add_option("a2", args.a2)->required();
  naive->add_option("b1", args.b1)->required();
  naive->add_option("b2", args.b2)->required();
  naive->add_option("--d", args.d)->required();
  leaf(naive, [&] { return cmd_check("naive35", args); });

  auto* trace = app.add_subcommand("trace", "replay the pair construction");
  trace->add_option("a", args.a)->required();
  trace->add_option("b", args.b)->required();
  trace->add_option("--d", args.d)->required();
  trace->add_option("--m", args.m)->required();
  trace->add_option("--c", args.c)->required();
  leaf(trace, [&] { return cmd_trace(args); });

  auto* sweep = app.add_subcommand("sweep", "exhaustive sweep of one lemma");
  sweep->add_option("lemma", args.lemma)
      ->required()
      ->check(CLI::IsMember({"super", "constrained", "seq", "naive35"}));
  sweep->add_option("--max", args.max, "Largest value for super/naive35");
  auto* fixed_d = sweep->add_option("--d", args.d, "Sweep a single degree");
  sweep->add_option("--max-d", args.max_d, "Sweep degrees 1..N")->excludes(fixed_d);
  sweep->add_option("--m", args.max_m, "Largest m for constrained/seq");
  sweep->add_option("--max-len", args.max_len, "Longest sequence for seq");
  sweep->add_option("--workers", args.workers, "Worker threads");
  leaf(sweep, [&] { return cmd_sweep(args); });

  std::vector<const char*> raw{"macaulay"};
  for (const auto& s : argv) raw.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    // Help requested on a subcommand surfaces as CallForHelp too.
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    const Outcome result = handler();
    const Format format = args.format == "text" ? Format::Text : Format::Json;
    for (const auto& rec : result.records) out << output::render(rec, format) << '\n';
    return result.code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    if (e.is_usage_error() || e.code() == ErrorCode::CapacityExceeded) return kUsage;
    return kInternal;
  }
}

}  // namespace macaulay::cli
