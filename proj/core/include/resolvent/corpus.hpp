#pragma once

#include "resolvent/graph.hpp"

#include <cstdint>
#include <istream>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace resolvent {

/// graph6 decoding for n <= 62. Accepts an optional ">>graph6<<" prefix and
/// a trailing CR. Throws Error{MalformedHeader, TruncatedPayload,
/// TrailingBits, UnsupportedSize, ParseError}.
Graph parse_graph6(std::string_view line);

/// Encodes the labelled adjacency as is (no canonical relabelling).
/// Throws Error{UnsupportedSize}.
std::string emit_graph6(const Graph& g);

/// "n" on the first line, then one "u v" pair per line (0-based).
/// Blank lines and lines starting with '#' are ignored.
Graph parse_edge_list(std::string_view text);

/// Named generators. `params` are the values following the name in the
/// `name:param[:param]` syntax:
///   path:n  cycle:n  complete:n  complete_bipartite:m:n  petersen
///   star:n (K_{1,n})  random:n:p:seed (seed may be written "seed42")
/// Throws Error{BadParams, ConnectivityRetryExhausted, CapacityExceeded}.
Graph generate(std::string_view name, const std::vector<std::string>& params);

/// Parses and evaluates a full `name:param...` spec.
Graph generate(std::string_view spec);

inline constexpr int random_connectivity_retries = 1000;

enum class RecordSource { enumeration, file, generator };

struct GraphRecord {
    std::uint64_t index = 0; ///< position in the stream
    std::string id;          ///< graph6 string or generator spec
    Graph graph;
    RecordSource source = RecordSource::generator;
};

/// Pull-style stream of graphs.
class GraphStream {
public:
    virtual ~GraphStream() = default;
    virtual std::optional<GraphRecord> next() = 0;
};

inline constexpr int max_enumeration_order = 7;

/// Decodes upper-triangle bits in graph6 column order: bit t of `mask` is
/// the t-th pair of (0,1),(0,2),(1,2),(0,3),...
Graph graph_from_pair_mask(int n, std::uint64_t mask);

/// Every connected labelled graph on n vertices, ascending by pair mask.
/// Throws Error{UnsupportedSize} unless 1 <= n <= 7.
std::unique_ptr<GraphStream> enumerate_connected(int n);

/// Chains enumerate_connected(lo) ... enumerate_connected(hi).
std::unique_ptr<GraphStream> enumerate_connected_range(int lo, int hi);

/// One graph6 line per record; blank lines skipped. The stream must outlive
/// the returned object.
std::unique_ptr<GraphStream> graph6_lines(std::istream& in);

std::unique_ptr<GraphStream> from_records(std::vector<GraphRecord> records);

} // namespace resolvent
