#include "macaulay/output.hpp"

namespace macaulay::output {

namespace {

Json nums(const std::vector<Nat>& v) {
  Json out = Json::array();
  for (Nat x : v) out.push_back(num(x));
  return out;
}

}  // namespace

Json to_json(const BinomialRep& rep) {
  Json ks = Json::array();
  for (const auto& t : rep.terms) ks.push_back(Json::array({num(t.k), num(t.i)}));
  return Json{{"d", num(rep.d)}, {"ks", std::move(ks)}};
}

Json to_json(const Decomposition& dec) {
  return Json{{"c", num(dec.c)},
              {"A", num(dec.A)},
              {"form", dec.form == DecompositionForm::HalfOpen ? "half-open"
                                                               : "half-closed"},
              {"d", num(dec.d)}};
}

Json to_json(const PairState& state) {
  return Json{{"step", num(state.step_index)},
              {"a", num(state.a)},
              {"b", num(state.b)},
              {"case", to_string(state.case_applied)}};
}

Json to_json(const ReplayNode& node) {
  Json steps = Json::array();
  for (const auto& st : node.steps) {
    steps.push_back(Json{{"rule", st.rule},
                         {"operands", nums(st.operands)},
                         {"lhs", num(st.lhs)},
                         {"rhs", num(st.rhs)},
                         {"holds", st.holds}});
  }
  Json children = Json::array();
  for (const auto& ch : node.children) children.push_back(to_json(ch));
  return Json{{"case", to_string(node.kind)},
              {"as", nums(node.as)},
              {"bs", nums(node.bs)},
              {"lhs", num(node.lhs)},
              {"rhs", num(node.rhs)},
              {"holds", node.holds},
              {"steps", std::move(steps)},
              {"children", std::move(children)}};
}

Json to_json(const LemmaReport& report) {
  Json instance = Json::object();
  for (const auto& f : report.instance) {
    instance[f.name] = f.is_list ? nums(f.values) : num(f.values.at(0));
  }
  Json out{{"lemma", to_string(report.lemma)},
           {"instance", std::move(instance)},
           {"lhs", num(report.lhs)},
           {"rhs", num(report.rhs)},
           {"holds", report.holds}};
  if (!report.pair_trace.empty()) {
    Json states = Json::array();
    for (const auto& s : report.pair_trace) states.push_back(to_json(s));
    out["trace"] = std::move(states);
  }
  if (report.replay) out["trace"] = to_json(*report.replay);
  return out;
}

Json to_json(const ViolationRecord& r) {
  return Json{{"a1", num(r.a1)}, {"a2", num(r.a2)}, {"b1", num(r.b1)},
              {"b2", num(r.b2)}, {"d", num(r.d)},   {"lhs", num(r.lhs)},
              {"rhs", num(r.rhs)}};
}

Json to_json(const ConstructionTrace& trace) {
  Json states = Json::array();
  for (const auto& s : trace.states) states.push_back(to_json(s));
  return Json{{"states", std::move(states)},
              {"bound", num(trace.bound)},
              {"l1", num(trace.bound_index)},
              {"l2", num(trace.end_index)}};
}

Json make_record(std::string_view command, Json inputs, Json result) {
  return Json{{"schema_version", kSchemaVersion},
              {"command", command},
              {"inputs", std::move(inputs)},
              {"result", std::move(result)}};
}

namespace {

bool is_flat(const Json& j) {
  if (!j.is_array()) return !j.is_object();
  for (const auto& el : j) {
    if (!is_flat(el)) return false;
  }
  return true;
}

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) s += ',';
      s += scalar_text(j[i]);
    }
    return s + "]";
  }
  return j.dump();
}

void flatten(const Json& j, const std::string& prefix, std::string& out) {
  if (is_flat(j)) {
    out += ' ';
    out += prefix;
    out += '=';
    out += scalar_text(j);
    return;
  }
  const std::string lead = prefix.empty() ? "" : prefix + ".";
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, lead + k, out);
  } else {
    for (std::size_t i = 0; i < j.size(); ++i) {
      flatten(j[i], lead + std::to_string(i), out);
    }
  }
}

}  // namespace

std::string render(const Json& record, Format format) {
  if (format == Format::Json) return record.dump();
  std::string out = record.at("command").get<std::string>();
  for (const auto& [k, v] : record.at("inputs").items()) flatten(v, k, out);
  out += " |";
  const Json& result = record.at("result");
  if (result.is_object()) {
    for (const auto& [k, v] : result.items()) flatten(v, k, out);
  } else {
    flatten(result, "result", out);
  }
  return out;
}

}  // namespace macaulay::output
