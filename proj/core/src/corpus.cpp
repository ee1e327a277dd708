#include "resolvent/corpus.hpp"

#include "resolvent/error.hpp"

#include <array>
#include <charconv>
#include <random>
#include <sstream>

namespace resolvent {

namespace {

constexpr int graph6_offset = 63;
constexpr int graph6_max_order = 62;
constexpr std::string_view graph6_prefix = ">>graph6<<";

int pair_count(int n) { return n * (n - 1) / 2; }

} // namespace

Graph parse_graph6(std::string_view line) {
    if (line.starts_with(graph6_prefix)) line.remove_prefix(graph6_prefix.size());
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.remove_suffix(1);
    if (line.empty()) throw Error(ErrorKind::MalformedHeader, "empty graph6 line");

    const int head = static_cast<unsigned char>(line.front());
    if (head == 126) throw Error(ErrorKind::UnsupportedSize, "graph6 orders above 62 are not supported");
    if (head < graph6_offset || head > 126)
        throw Error(ErrorKind::MalformedHeader, "bad order byte " + std::to_string(head));
    const int n = head - graph6_offset;
    const std::string_view payload = line.substr(1);

    const int bits = pair_count(n);
    const std::size_t want = static_cast<std::size_t>((bits + 5) / 6);
    if (payload.size() < want)
        throw Error(ErrorKind::TruncatedPayload,
                    "expected " + std::to_string(want) + " payload bytes, got " + std::to_string(payload.size()));
    if (payload.size() > want)
        throw Error(ErrorKind::TrailingBits, std::to_string(payload.size() - want) + " extra payload bytes");

    std::vector<Edge> edges;
    int t = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++t) {
            const int byte = static_cast<unsigned char>(payload[static_cast<std::size_t>(t / 6)]);
            if (byte < graph6_offset || byte > 126)
                throw Error(ErrorKind::ParseError, "bad payload byte " + std::to_string(byte));
            if (((byte - graph6_offset) >> (5 - t % 6)) & 1) edges.emplace_back(i, j);
        }
    if (bits % 6 != 0) {
        const int last = static_cast<unsigned char>(payload.back()) - graph6_offset;
        const int pad = 6 - bits % 6;
        if (last & ((1 << pad) - 1)) throw Error(ErrorKind::TrailingBits, "non-zero padding bits");
    }
    return build_graph(n, edges);
}

std::string emit_graph6(const Graph& g) {
    const int n = g.order();
    if (n > graph6_max_order) throw Error(ErrorKind::UnsupportedSize, "graph6 orders above 62 are not supported");
    std::string out(1, static_cast<char>(n + graph6_offset));
    int acc = 0, filled = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + graph6_offset));
                acc = filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + graph6_offset));
    return out;
}

namespace {

int parse_int(std::string_view token, std::string_view what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw Error(ErrorKind::ParseError, "expected integer for " + std::string(what) + ", got '" +
                                               std::string(token) + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        std::size_t pos = s.find(sep, start);
        out.push_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos) return out;
        start = pos + 1;
    }
}

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

} // namespace

Graph parse_edge_list(std::string_view text) {
    std::optional<int> n;
    std::vector<Edge> edges;
    int line_no = 0;
    for (std::string_view line : split(text, '\n')) {
        ++line_no;
        auto toks = tokens(line);
        if (toks.empty() || toks.front().starts_with('#')) continue;
        if (!n) {
            if (toks.size() != 1) throw Error(ErrorKind::ParseError, "line 1 must hold the vertex count");
            n = parse_int(toks[0], "vertex count");
            continue;
        }
        if (toks.size() != 2)
            throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": expected 'u v'");
        edges.emplace_back(parse_int(toks[0], "u"), parse_int(toks[1], "v"));
    }
    if (!n) throw Error(ErrorKind::ParseError, "missing vertex count");
    return build_graph(*n, edges);
}

namespace {

int int_param(const std::vector<std::string>& params, std::size_t i, std::string_view name, int lo) {
    if (i >= params.size()) throw Error(ErrorKind::BadParams, std::string(name) + ": missing parameter");
    int v = 0;
    try {
        v = parse_int(params[i], name);
    } catch (const Error& e) {
        throw Error(ErrorKind::BadParams, e.what());
    }
    if (v < lo) throw Error(ErrorKind::BadParams, std::string(name) + ": parameter must be >= " + std::to_string(lo));
    return v;
}

void expect_arity(const std::vector<std::string>& params, std::size_t arity, std::string_view name) {
    if (params.size() != arity)
        throw Error(ErrorKind::BadParams, std::string(name) + " takes " + std::to_string(arity) + " parameter(s)");
}

void check_order(int n) {
    if (n > max_vertices) throw Error(ErrorKind::CapacityExceeded, std::to_string(n) + " vertices (limit 64)");
}

Graph random_connected(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    // 53 high bits to a double in [0,1); independent of the standard
    // library's distribution implementation.
    auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    for (int attempt = 0; attempt < random_connectivity_retries; ++attempt) {
        std::vector<Edge> edges;
        for (Vertex j = 1; j < n; ++j)
            for (Vertex i = 0; i < j; ++i)
                if (uniform() < p) edges.emplace_back(i, j);
        Graph g = build_graph(n, edges);
        if (is_connected(g)) return g;
    }
    throw Error(ErrorKind::ConnectivityRetryExhausted,
                "no connected G(" + std::to_string(n) + "," + std::to_string(p) + ") sample in " +
                    std::to_string(random_connectivity_retries) + " tries");
}

} // namespace

Graph generate(std::string_view name, const std::vector<std::string>& params) {
    std::vector<Edge> edges;
    if (name == "path") {
        expect_arity(params, 1, name);
        int n = int_param(params, 0, name, 1);
        check_order(n);
        for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
        return build_graph(n, edges);
    }
    if (name == "cycle") {
        expect_arity(params, 1, name);
        int n = int_param(params, 0, name, 3);
        check_order(n);
        for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
        return build_graph(n, edges);
    }
    if (name == "complete") {
        expect_arity(params, 1, name);
        int n = int_param(params, 0, name, 1);
        check_order(n);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
        return build_graph(n, edges);
    }
    if (name == "complete_bipartite") {
        expect_arity(params, 2, name);
        int a = int_param(params, 0, name, 1);
        int b = int_param(params, 1, name, 1);
        check_order(a + b);
        for (Vertex u = 0; u < a; ++u)
            for (Vertex v = a; v < a + b; ++v) edges.emplace_back(u, v);
        return build_graph(a + b, edges);
    }
    if (name == "star") {
        expect_arity(params, 1, name);
        int leaves = int_param(params, 0, name, 1);
        check_order(leaves + 1);
        for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
        return build_graph(leaves + 1, edges);
    }
    if (name == "petersen") {
        expect_arity(params, 0, name);
        // Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram 5..9.
        for (Vertex i = 0; i < 5; ++i) {
            edges.emplace_back(i, (i + 1) % 5);
            edges.emplace_back(i, i + 5);
            edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        }
        return build_graph(10, edges);
    }
    if (name == "random") {
        expect_arity(params, 3, name);
        int n = int_param(params, 0, name, 1);
        check_order(n);
        double p = 0;
        try {
            std::size_t used = 0;
            p = std::stod(params[1], &used);
            if (used != params[1].size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw Error(ErrorKind::BadParams, "random: bad edge probability '" + params[1] + "'");
        }
        if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorKind::BadParams, "random: edge probability outside [0,1]");
        std::string seed_text = params[2];
        if (seed_text.starts_with("seed")) seed_text.erase(0, 4);
        std::uint64_t seed = 0;
        auto [ptr, ec] = std::from_chars(seed_text.data(), seed_text.data() + seed_text.size(), seed);
        if (ec != std::errc{} || ptr != seed_text.data() + seed_text.size() || seed_text.empty())
            throw Error(ErrorKind::BadParams, "random: bad seed '" + params[2] + "'");
        return random_connected(n, p, seed);
    }
    throw Error(ErrorKind::BadParams, "unknown generator '" + std::string(name) + "'");
}

Graph generate(std::string_view spec) {
    auto parts = split(spec, ':');
    std::vector<std::string> params;
    for (std::size_t i = 1; i < parts.size(); ++i) params.emplace_back(parts[i]);
    return generate(parts.front(), params);
}

Graph graph_from_pair_mask(int n, std::uint64_t mask) {
    std::vector<Edge> edges;
    int t = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++t)
            if ((mask >> t) & 1U) edges.emplace_back(i, j);
    return build_graph(n, edges);
}

namespace {

class EnumerationStream final : public GraphStream {
public:
    explicit EnumerationStream(int n) : n_(n), limit_(std::uint64_t{1} << pair_count(n)) {}

    std::optional<GraphRecord> next() override {
        while (mask_ < limit_) {
            std::uint64_t mask = mask_++;
            if (!connected(mask)) continue;
            GraphRecord r;
            r.index = emitted_++;
            r.graph = graph_from_pair_mask(n_, mask);
            r.id = emit_graph6(r.graph);
            r.source = RecordSource::enumeration;
            return r;
        }
        return std::nullopt;
    }

private:
    bool connected(std::uint64_t mask) const {
        std::array<std::uint64_t, max_enumeration_order> adj{};
        int t = 0;
        for (int j = 1; j < n_; ++j)
            for (int i = 0; i < j; ++i, ++t)
                if ((mask >> t) & 1U) {
                    adj[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
                    adj[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
                }
        std::uint64_t seen = 1, frontier = 1;
        while (frontier) {
            std::uint64_t next = 0;
            for (VertexSet f(frontier); Vertex v : f) next |= adj[static_cast<std::size_t>(v)];
            frontier = next & ~seen;
            seen |= next;
        }
        return seen == VertexSet::first_n(n_).bits();
    }

    int n_;
    std::uint64_t limit_;
    std::uint64_t mask_ = 0;
    std::uint64_t emitted_ = 0;
};

class ChainStream final : public GraphStream {
public:
    explicit ChainStream(std::vector<std::unique_ptr<GraphStream>> parts) : parts_(std::move(parts)) {}

    std::optional<GraphRecord> next() override {
        while (current_ < parts_.size()) {
            if (auto r = parts_[current_]->next()) {
                r->index = emitted_++;
                return r;
            }
            ++current_;
        }
        return std::nullopt;
    }

private:
    std::vector<std::unique_ptr<GraphStream>> parts_;
    std::size_t current_ = 0;
    std::uint64_t emitted_ = 0;
};

class Graph6Stream final : public GraphStream {
public:
    explicit Graph6Stream(std::istream& in) : in_(in) {}

    std::optional<GraphRecord> next() override {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
            if (line.empty()) continue;
            GraphRecord r;
            try {
                r.graph = parse_graph6(line);
            } catch (const Error& e) {
                throw Error(e.kind(), "line " + std::to_string(line_no_) + ": " + e.what());
            }
            r.index = emitted_++;
            r.id = line.starts_with(graph6_prefix) ? line.substr(graph6_prefix.size()) : line;
            r.source = RecordSource::file;
            return r;
        }
        return std::nullopt;
    }

private:
    std::istream& in_;
    std::uint64_t line_no_ = 0;
    std::uint64_t emitted_ = 0;
};

class VectorStream final : public GraphStream {
public:
    explicit VectorStream(std::vector<GraphRecord> records) : records_(std::move(records)) {}

    std::optional<GraphRecord> next() override {
        if (pos_ >= records_.size()) return std::nullopt;
        GraphRecord r = std::move(records_[pos_]);
        r.index = pos_++;
        return r;
    }

private:
    std::vector<GraphRecord> records_;
    std::size_t pos_ = 0;
};

} // namespace

std::unique_ptr<GraphStream> enumerate_connected(int n) {
    if (n < 1 || n > max_enumeration_order)
        throw Error(ErrorKind::UnsupportedSize,
                    "exhaustive enumeration covers 1 <= n <= 7, got " + std::to_string(n));
    return std::make_unique<EnumerationStream>(n);
}

std::unique_ptr<GraphStream> enumerate_connected_range(int lo, int hi) {
    std::vector<std::unique_ptr<GraphStream>> parts;
    for (int n = lo; n <= hi; ++n) parts.push_back(enumerate_connected(n));
    return std::make_unique<ChainStream>(std::move(parts));
}

std::unique_ptr<GraphStream> graph6_lines(std::istream& in) { return std::make_unique<Graph6Stream>(in); }

std::unique_ptr<GraphStream> from_records(std::vector<GraphRecord> records) {
    return std::make_unique<VectorStream>(std::move(records));
}

} // namespace resolvent
