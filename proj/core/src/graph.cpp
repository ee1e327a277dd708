#include "resolvent/graph.hpp"

#include "resolvent/error.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace resolvent {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::CapacityExceeded: return "CapacityExceeded";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::MalformedHeader: return "MalformedHeader";
    case ErrorKind::TruncatedPayload: return "TruncatedPayload";
    case ErrorKind::TrailingBits: return "TrailingBits";
    case ErrorKind::UnsupportedSize: return "UnsupportedSize";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::ConnectivityRetryExhausted: return "ConnectivityRetryExhausted";
    }
    return "Unknown";
}

std::string VertexSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for (Vertex v : *this) {
        if (!first) out += ',';
        out += std::to_string(v);
        first = false;
    }
    out += '}';
    return out;
}

Graph build_graph(int n, std::span<const Edge> edges) {
    if (n < 0) throw Error(ErrorKind::VertexOutOfRange, "negative vertex count");
    if (n > max_vertices)
        throw Error(ErrorKind::CapacityExceeded, std::to_string(n) + " vertices (limit 64)");
    Graph g;
    g.n_ = n;
    g.adj_.assign(static_cast<std::size_t>(n), VertexSet{});
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error(ErrorKind::VertexOutOfRange,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v) throw Error(ErrorKind::SelfLoop, "loop at vertex " + std::to_string(u));
        g.adj_[static_cast<std::size_t>(u)].insert(v);
        g.adj_[static_cast<std::size_t>(v)].insert(u);
    }
    int degree_sum = 0;
    for (VertexSet s : g.adj_) degree_sum += s.size();
    g.m_ = degree_sum / 2;
    return g;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

namespace {

// Vertices reachable from `start` avoiding `removed`.
VertexSet reach(const Graph& g, Vertex start, VertexSet removed) {
    VertexSet seen{start};
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (Vertex v : frontier) next = next | g.neighbors(v);
        next = next - seen - removed;
        seen = seen | next;
        frontier = next;
    }
    return seen;
}

} // namespace

int DistanceMatrix::diameter() const noexcept {
    int d = 0;
    for (auto e : ecc_) d = std::max(d, static_cast<int>(e));
    return d;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
    const int n = g.order();
    DistanceMatrix dm;
    dm.n_ = n;
    dm.dist_.assign(static_cast<std::size_t>(n * n), 0);
    dm.ecc_.assign(static_cast<std::size_t>(n), 0);
    const VertexSet all = g.vertices();
    for (Vertex s = 0; s < n; ++s) {
        VertexSet seen{s};
        VertexSet frontier = seen;
        int depth = 0;
        while (!frontier.empty()) {
            ++depth;
            VertexSet next;
            for (Vertex v : frontier) next = next | g.neighbors(v);
            next = next - seen;
            for (Vertex v : next) dm.dist_[static_cast<std::size_t>(s * n + v)] = static_cast<std::uint8_t>(depth);
            if (!next.empty()) dm.ecc_[static_cast<std::size_t>(s)] = static_cast<std::uint8_t>(depth);
            seen = seen | next;
            frontier = next;
        }
        if (seen != all)
            throw Error(ErrorKind::Disconnected,
                        "vertex " + std::to_string((all - seen).front()) + " unreachable from " + std::to_string(s));
    }
    return dm;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    return reach(g, 0, {}) == g.vertices();
}

int component_count(const Graph& g, VertexSet removed) {
    VertexSet left = g.vertices() - removed;
    int count = 0;
    while (!left.empty()) {
        left = left - reach(g, left.front(), removed);
        ++count;
    }
    return count;
}

bool is_separating(const Graph& g, VertexSet s) { return component_count(g, s) >= 2; }

VertexSet cut_vertices(const Graph& g) {
    if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "cut vertices need a connected graph");
    VertexSet cuts;
    for (Vertex v = 0; v < g.order(); ++v)
        if (is_separating(g, VertexSet{v})) cuts.insert(v);
    return cuts;
}

bool has_no_cut_vertex(const Graph& g) { return cut_vertices(g).empty(); }

bool is_two_connected(const Graph& g) {
    bool no_cut = has_no_cut_vertex(g);
    return g.order() >= 3 && !is_complete(g) && no_cut;
}

namespace {

// Branch and bound with a greedy colouring bound over the candidate set.
class CliqueSearch {
public:
    explicit CliqueSearch(const Graph& g) : g_(g) {}

    int run() {
        if (g_.order() == 0) return 0;
        expand(0, g_.vertices());
        return best_;
    }

private:
    void expand(int size, VertexSet candidates) {
        if (candidates.empty()) {
            best_ = std::max(best_, size);
            return;
        }
        std::array<Vertex, max_vertices> order{};
        std::array<int, max_vertices> colour{};
        int count = colour_sort(candidates, order, colour);
        for (int i = count - 1; i >= 0; --i) {
            if (size + colour[static_cast<std::size_t>(i)] <= best_) return;
            Vertex v = order[static_cast<std::size_t>(i)];
            expand(size + 1, candidates & g_.neighbors(v));
            candidates.erase(v);
        }
    }

    // Greedy sequential colouring; colour[i] bounds the clique size available
    // among order[0..i].
    int colour_sort(VertexSet candidates, std::array<Vertex, max_vertices>& order,
                    std::array<int, max_vertices>& colour) const {
        int count = 0;
        int c = 0;
        VertexSet uncoloured = candidates;
        while (!uncoloured.empty()) {
            ++c;
            VertexSet q = uncoloured;
            while (!q.empty()) {
                Vertex v = q.front();
                q = q - g_.neighbors(v);
                q.erase(v);
                uncoloured.erase(v);
                order[static_cast<std::size_t>(count)] = v;
                colour[static_cast<std::size_t>(count)] = c;
                ++count;
            }
        }
        return count;
    }

    const Graph& g_;
    int best_ = 0;
};

} // namespace

int clique_number(const Graph& g) { return CliqueSearch(g).run(); }

std::vector<Edge> twin_pairs(const Graph& g) {
    std::vector<Edge> out;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v) {
            VertexSet nu = g.neighbors(u), nv = g.neighbors(v);
            nu.erase(v);
            nv.erase(u);
            if (nu == nv) out.emplace_back(u, v);
        }
    return out;
}

bool is_complete(const Graph& g) noexcept {
    const int n = g.order();
    return g.edge_count() == n * (n - 1) / 2;
}

bool is_path(const Graph& g) {
    if (g.order() == 0 || g.edge_count() != g.order() - 1 || !is_connected(g)) return false;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) > 2) return false;
    return true;
}

bool is_cycle(const Graph& g) {
    if (g.order() < 3 || !is_connected(g)) return false;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

GraphSummary summarize(const Graph& g) {
    GraphSummary s;
    s.cut_vertices = cut_vertices(g);
    s.is_two_connected = g.order() >= 3 && !is_complete(g) && s.cut_vertices.empty();
    s.min_degree = g.order() == 0 ? 0 : g.order();
    for (Vertex v = 0; v < g.order(); ++v) {
        s.min_degree = std::min(s.min_degree, g.degree(v));
        s.max_degree = std::max(s.max_degree, g.degree(v));
    }
    s.clique_number = clique_number(g);
    s.twin_pairs = twin_pairs(g);
    return s;
}

} // namespace resolvent
