#pragma once

#include "resolvent/graph.hpp"

#include <optional>
#include <vector>

namespace resolvent {

/// r(v|W): distances from v to the members of W in ascending vertex order.
struct Representation {
    std::vector<int> coords;
    friend bool operator==(const Representation&, const Representation&) = default;
};

/// Throws Error{EmptySet} when w is empty.
Representation representation(const DistanceMatrix& dm, Vertex v, VertexSet w);

/// True iff some x in w has d(x,u) != d(x,v).
bool resolves_pair(const DistanceMatrix& dm, VertexSet w, Vertex u, Vertex v);

/// Lexicographically first pair (u < v) sharing a representation with
/// respect to w, or nullopt if w resolves the graph. Only vertices outside w
/// are compared: a member of w is the unique vertex at distance 0 from
/// itself. Runs by partition refinement, one coordinate at a time.
std::optional<Edge> find_unresolved_pair(const DistanceMatrix& dm, VertexSet w);

/// Throws Error{EmptySet} when w is empty (unless the graph is K_1).
bool is_resolving(const DistanceMatrix& dm, VertexSet w);

/// E(u,v) = {w : d(w,u) = d(w,v)}. Never contains u or v.
VertexSet equidistant_class(const DistanceMatrix& dm, Vertex u, Vertex v);

/// The equidistant classes of all vertex pairs, reduced to the inclusion-
/// maximal ones. A set fails to resolve exactly when it fits inside one of
/// them, which makes this the fast membership test for subset searches.
class EquidistanceIndex {
public:
    explicit EquidistanceIndex(const DistanceMatrix& dm);

    int order() const noexcept { return n_; }
    bool resolves(VertexSet w) const noexcept {
        for (VertexSet e : maximal_)
            if (w.is_subset_of(e)) return false;
        return true;
    }
    /// Largest class and the (lexicographically first) pair producing it.
    VertexSet largest_class() const noexcept { return largest_; }
    std::optional<Edge> largest_pair() const noexcept { return largest_pair_; }
    const std::vector<VertexSet>& maximal_classes() const noexcept { return maximal_; }

private:
    int n_ = 0;
    std::vector<VertexSet> maximal_;
    VertexSet largest_;
    std::optional<Edge> largest_pair_;
};

struct NonResolvingWitness {
    VertexSet set;
    Edge pair;
};

struct ResolvingNumber {
    int value = 0;
    /// A largest non-resolving set with the pair it leaves tied; empty for
    /// K_1, which has no pairs.
    std::optional<NonResolvingWitness> witness;
};

/// res(G) = max |E(u,v)| + 1, with res(K_1) = 1. Throws Error{Disconnected}
/// only through DistanceMatrix construction.
ResolvingNumber resolving_number(const DistanceMatrix& dm);

struct DimensionResult {
    int value = 0;
    VertexSet basis;
};

/// Greedy partition refinement: repeatedly add the vertex that splits the
/// representation classes into the most parts. The set returned resolves.
DimensionResult greedy_dimension_upper_bound(const DistanceMatrix& dm);

/// Exact metric dimension. Sizes are tried in ascending order up to the
/// greedy bound and the combinations of each size in lexicographic order,
/// so `basis` is the lexicographically first basis.
DimensionResult metric_dimension(const DistanceMatrix& dm);

/// Every resolving set of size beta, in lexicographic order.
std::vector<VertexSet> all_bases(const DistanceMatrix& dm, int beta);
std::vector<VertexSet> all_bases(const DistanceMatrix& dm);

/// Largest r such that every r-subset of V lies inside one of `bases`.
/// `bases` must be non-empty and all of size beta.
int basis_number(int n, const std::vector<VertexSet>& bases, int beta);
int basis_number(const DistanceMatrix& dm);

struct RandomlyKResult {
    bool randomly = false;
    int k = 0; ///< always beta
};

/// Decides beta == res without a full dimension search when the answer is
/// yes: res comes from the closed form and then no (res-1)-set may resolve.
RandomlyKResult is_randomly_k_dimensional(const DistanceMatrix& dm);

enum class Compute : unsigned {
    beta = 1U << 0,
    res = 1U << 1,
    bas = 1U << 2,
    randk = 1U << 3,
    all = 0xFU,
};

constexpr Compute operator|(Compute a, Compute b) noexcept {
    return static_cast<Compute>(static_cast<unsigned>(a) | static_cast<unsigned>(b));
}
constexpr bool has(Compute set, Compute flag) noexcept {
    return (static_cast<unsigned>(set) & static_cast<unsigned>(flag)) != 0;
}

struct SolveReport {
    int order = 0;
    int edge_count = 0;
    Compute computed = Compute::all;
    int beta = 0;
    int res = 0;
    int bas = 0;
    int k = 0; ///< equals beta
    bool is_randomly_k = false;
    VertexSet sample_basis;
    std::optional<NonResolvingWitness> non_resolving_witness; ///< set when res > beta
    long long all_bases_count = 0;                            ///< only when bas is computed
};

/// Computes the selected invariants (and whatever they depend on). Throws
/// Error{Disconnected, BadParams (empty graph)}.
SolveReport solve(const Graph& g, Compute what = Compute::all);

} // namespace resolvent
