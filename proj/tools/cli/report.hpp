#pragma once

#include <resolvent/resolvent.hpp>

#include <json.hpp>

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace resolvent::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* schema_version = "1";

enum class Format { json, csv, plain };

std::optional<Format> parse_format(const std::string& name);

/// One solved graph as it appears in solve and scan reports.
struct SolvedGraph {
    std::uint64_t index = 0;
    std::string graph; ///< graph6 of the labelled input, or the generator spec
    SolveReport report;
};

struct CellCount {
    int beta = 0;
    int res = 0;
    std::uint64_t count = 0;
};

/// The document every subcommand emits. `results` holds either solved graphs
/// or theorem verdicts; `timing` is the only non-deterministic part.
struct Report {
    std::string command;
    Json inputs = Json::object();
    std::vector<SolvedGraph> solved;
    std::vector<TheoremVerdict> verdicts;
    Json summary = Json::object();
    Json timing = Json::object();
};

Json to_json(const SolveReport& r);
Json to_json(const SolvedGraph& g);
Json to_json(const TheoremVerdict& v);
Json to_json(const Report& r);

void write_report(std::ostream& out, const Report& r, Format format);

} // namespace resolvent::cli
