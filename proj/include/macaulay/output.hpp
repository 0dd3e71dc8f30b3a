#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "macaulay/search.hpp"

namespace macaulay::output {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchemaVersion = "1";

enum class Format { Json, Text };

/// Numbers are always emitted as decimal strings.
inline Json num(Nat n) { return n.str(); }
inline Json num(std::uint64_t n) { return std::to_string(n); }

Json to_json(const BinomialRep& rep);
Json to_json(const Decomposition& dec);
Json to_json(const PairState& state);
Json to_json(const ReplayNode& node);
Json to_json(const LemmaReport& report);
Json to_json(const ViolationRecord& record);
Json to_json(const ConstructionTrace& trace);

/// {schema_version, command, inputs, result}
Json make_record(std::string_view command, Json inputs, Json result);

/// One line, no trailing newline. Text mode flattens the record into
/// `command key=value ... | key=value ...` with the same numeric content.
std::string render(const Json& record, Format format);

}  // namespace macaulay::output
