#pragma once

#include "resolvent/vertex_set.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace resolvent {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1 (at most 64).
///
/// Vertex v here corresponds to v_{v+1} in the usual 1-based textbook
/// labelling.
class Graph {
public:
    Graph() = default;

    int order() const noexcept { return n_; }
    int edge_count() const noexcept { return m_; }
    VertexSet vertices() const noexcept { return VertexSet::first_n(n_); }
    VertexSet neighbors(Vertex v) const noexcept { return adj_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const noexcept { return neighbors(v).size(); }
    bool adjacent(Vertex u, Vertex v) const noexcept { return neighbors(u).contains(v); }
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    friend Graph build_graph(int n, std::span<const Edge> edges);

    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;
};

/// Throws Error{SelfLoop, VertexOutOfRange, CapacityExceeded}. Duplicate
/// edges are merged.
Graph build_graph(int n, std::span<const Edge> edges);
inline Graph build_graph(int n, std::initializer_list<Edge> edges) {
    return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

/// All-pairs hop distances. Entries fit a byte since n <= 64.
class DistanceMatrix {
public:
    int order() const noexcept { return n_; }
    int operator()(Vertex u, Vertex v) const noexcept {
        return dist_[static_cast<std::size_t>(u * n_ + v)];
    }
    int eccentricity(Vertex v) const noexcept { return ecc_[static_cast<std::size_t>(v)]; }
    int diameter() const noexcept;

private:
    friend DistanceMatrix all_pairs_distances(const Graph& g);

    int n_ = 0;
    std::vector<std::uint8_t> dist_;
    std::vector<std::uint8_t> ecc_;
};

/// BFS from every vertex. Throws Error{Disconnected}.
DistanceMatrix all_pairs_distances(const Graph& g);

bool is_connected(const Graph& g);

/// Number of connected components of the subgraph induced by V \ removed.
int component_count(const Graph& g, VertexSet removed);

/// True iff deleting `s` leaves at least two components.
bool is_separating(const Graph& g, VertexSet s);

/// Vertices whose removal disconnects the rest, by removal and re-check.
/// Throws Error{Disconnected}.
VertexSet cut_vertices(const Graph& g);

bool has_no_cut_vertex(const Graph& g);

/// 2-connected in the strict sense used here: n >= 3, not complete, and no
/// cut vertex. K_n is deliberately excluded; use has_no_cut_vertex for the
/// conventional notion.
bool is_two_connected(const Graph& g);

int clique_number(const Graph& g);

/// All unordered pairs {u,v}, u < v, with N(u)\{v} == N(v)\{u}, in
/// lexicographic order.
std::vector<Edge> twin_pairs(const Graph& g);

bool is_complete(const Graph& g) noexcept;
/// Isomorphic to P_n.
bool is_path(const Graph& g);
/// Isomorphic to C_n for some n >= 3.
bool is_cycle(const Graph& g);

struct GraphSummary {
    int min_degree = 0;
    int max_degree = 0;
    int clique_number = 0;
    VertexSet cut_vertices;
    bool is_two_connected = false;
    std::vector<Edge> twin_pairs;
};

/// Throws Error{Disconnected}.
GraphSummary summarize(const Graph& g);

} // namespace resolvent
