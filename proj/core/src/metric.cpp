#include "resolvent/metric.hpp"

#include "resolvent/error.hpp"

#include <algorithm>

namespace resolvent {

Representation representation(const DistanceMatrix& dm, Vertex v, VertexSet w) {
    if (w.empty()) throw Error(ErrorKind::EmptySet, "representation needs a non-empty set");
    Representation r;
    r.coords.reserve(static_cast<std::size_t>(w.size()));
    for (Vertex x : w) r.coords.push_back(dm(v, x));
    return r;
}

bool resolves_pair(const DistanceMatrix& dm, VertexSet w, Vertex u, Vertex v) {
    for (Vertex x : w)
        if (dm(x, u) != dm(x, v)) return true;
    return false;
}

std::optional<Edge> find_unresolved_pair(const DistanceMatrix& dm, VertexSet w) {
    const int n = dm.order();
    const VertexSet outside = VertexSet::first_n(n) - w;
    std::vector<int> cls(static_cast<std::size_t>(n), 0);
    int classes = 1;
    // (old class, distance) -> new class; distances are < n.
    std::vector<int> relabel(static_cast<std::size_t>(n * n), -1);
    for (Vertex x : w) {
        int next = 0;
        for (Vertex v : outside) {
            auto& slot = relabel[static_cast<std::size_t>(cls[static_cast<std::size_t>(v)] * n + dm(v, x))];
            if (slot < 0) slot = next++;
            cls[static_cast<std::size_t>(v)] = slot;
        }
        std::fill(relabel.begin(), relabel.begin() + static_cast<std::ptrdiff_t>(classes * n), -1);
        classes = next;
        if (classes == outside.size()) return std::nullopt;
    }
    for (Vertex u : outside)
        for (Vertex t : outside)
            if (t > u && cls[static_cast<std::size_t>(t)] == cls[static_cast<std::size_t>(u)]) return Edge{u, t};
    return std::nullopt;
}

bool is_resolving(const DistanceMatrix& dm, VertexSet w) {
    if (w.empty() && dm.order() > 1) throw Error(ErrorKind::EmptySet, "resolving sets are non-empty");
    return !find_unresolved_pair(dm, w).has_value();
}

VertexSet equidistant_class(const DistanceMatrix& dm, Vertex u, Vertex v) {
    VertexSet e;
    for (Vertex w = 0; w < dm.order(); ++w)
        if (dm(w, u) == dm(w, v)) e.insert(w);
    return e;
}

EquidistanceIndex::EquidistanceIndex(const DistanceMatrix& dm) : n_(dm.order()) {
    std::vector<VertexSet> classes;
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u + 1; v < n_; ++v) {
            VertexSet e = equidistant_class(dm, u, v);
            if (!largest_pair_ || e.size() > largest_.size()) {
                largest_ = e;
                largest_pair_ = Edge{u, v};
            }
            classes.push_back(e);
        }
    std::sort(classes.begin(), classes.end(), [](VertexSet a, VertexSet b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.bits() < b.bits();
    });
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    for (VertexSet e : classes) {
        bool dominated = std::any_of(maximal_.begin(), maximal_.end(),
                                     [e](VertexSet m) { return e.is_subset_of(m); });
        if (!dominated) maximal_.push_back(e);
    }
}

ResolvingNumber resolving_number(const DistanceMatrix& dm) {
    EquidistanceIndex index(dm);
    ResolvingNumber r;
    if (!index.largest_pair()) {
        r.value = 1;
        return r;
    }
    r.value = index.largest_class().size() + 1;
    r.witness = NonResolvingWitness{index.largest_class(), *index.largest_pair()};
    return r;
}

DimensionResult greedy_dimension_upper_bound(const DistanceMatrix& dm) {
    const int n = dm.order();
    if (n <= 1) return {1, VertexSet::first_n(n == 0 ? 0 : 1)};
    std::vector<int> cls(static_cast<std::size_t>(n), 0);
    std::vector<int> relabel(static_cast<std::size_t>(n * n), -1);
    std::vector<int> trial(static_cast<std::size_t>(n));
    int classes = 1;
    VertexSet chosen;

    auto refine = [&](Vertex x, std::vector<int>& out) {
        int next = 0;
        for (Vertex v = 0; v < n; ++v) {
            auto& slot = relabel[static_cast<std::size_t>(cls[static_cast<std::size_t>(v)] * n + dm(v, x))];
            if (slot < 0) slot = next++;
            out[static_cast<std::size_t>(v)] = slot;
        }
        std::fill(relabel.begin(), relabel.begin() + static_cast<std::ptrdiff_t>(classes * n), -1);
        return next;
    };

    while (classes < n) {
        Vertex best = -1;
        int best_classes = -1;
        for (Vertex x = 0; x < n; ++x) {
            if (chosen.contains(x)) continue;
            int c = refine(x, trial);
            if (c > best_classes) {
                best_classes = c;
                best = x;
            }
        }
        refine(best, cls);
        classes = best_classes;
        chosen.insert(best);
    }
    return {chosen.size(), chosen};
}

DimensionResult metric_dimension(const DistanceMatrix& dm) {
    const int n = dm.order();
    if (n <= 1) return {1, VertexSet::first_n(n == 0 ? 0 : 1)};
    const DimensionResult bound = greedy_dimension_upper_bound(dm);
    const EquidistanceIndex index(dm);
    for (int k = 1; k < bound.value; ++k) {
        std::optional<VertexSet> found;
        for_each_combination(n, k, [&](VertexSet w) {
            if (!index.resolves(w)) return true;
            found = w;
            return false;
        });
        if (found) return {k, *found};
    }
    // Nothing smaller resolves, so beta is the bound; report the
    // lexicographically first basis of that size rather than the greedy one.
    VertexSet first = bound.basis;
    for_each_combination(n, bound.value, [&](VertexSet w) {
        if (!index.resolves(w)) return true;
        first = w;
        return false;
    });
    return {bound.value, first};
}

std::vector<VertexSet> all_bases(const DistanceMatrix& dm, int beta) {
    const int n = dm.order();
    if (n <= 1) return {VertexSet::first_n(n == 0 ? 0 : 1)};
    const EquidistanceIndex index(dm);
    std::vector<VertexSet> out;
    for_each_combination(n, beta, [&](VertexSet w) {
        if (index.resolves(w)) out.push_back(w);
        return true;
    });
    return out;
}

std::vector<VertexSet> all_bases(const DistanceMatrix& dm) { return all_bases(dm, metric_dimension(dm).value); }

int basis_number(int n, const std::vector<VertexSet>& bases, int beta) {
    VertexSet covered;
    for (VertexSet b : bases) covered = covered | b;
    if (covered != VertexSet::first_n(n)) return 0;
    for (int r = beta; r >= 1; --r) {
        bool every = for_each_combination(n, r, [&](VertexSet s) {
            return std::any_of(bases.begin(), bases.end(), [s](VertexSet b) { return s.is_subset_of(b); });
        });
        if (every) return r;
    }
    return 0;
}

int basis_number(const DistanceMatrix& dm) {
    const DimensionResult dim = metric_dimension(dm);
    return basis_number(dm.order(), all_bases(dm, dim.value), dim.value);
}

RandomlyKResult is_randomly_k_dimensional(const DistanceMatrix& dm) {
    const int res = resolving_number(dm).value;
    if (res == 1) return {true, 1};
    const EquidistanceIndex index(dm);
    bool none_resolve = for_each_combination(dm.order(), res - 1, [&](VertexSet w) { return !index.resolves(w); });
    if (none_resolve) return {true, res};
    return {false, metric_dimension(dm).value};
}

SolveReport solve(const Graph& g, Compute what) {
    if (g.order() == 0) throw Error(ErrorKind::BadParams, "empty graph");
    const DistanceMatrix dm = all_pairs_distances(g);
    SolveReport r;
    r.order = g.order();
    r.edge_count = g.edge_count();
    r.computed = what;

    const bool need_beta = has(what, Compute::beta | Compute::bas | Compute::randk);
    const bool need_res = has(what, Compute::res | Compute::randk);
    if (need_beta) {
        const DimensionResult dim = metric_dimension(dm);
        r.beta = dim.value;
        r.k = dim.value;
        r.sample_basis = dim.basis;
    }
    if (need_res) {
        const ResolvingNumber res = resolving_number(dm);
        r.res = res.value;
        if (need_beta && r.res > r.beta) r.non_resolving_witness = res.witness;
    }
    if (has(what, Compute::randk)) r.is_randomly_k = r.beta == r.res;

    if (has(what, Compute::bas)) {
        const auto bases = all_bases(dm, r.beta);
        r.all_bases_count = static_cast<long long>(bases.size());
        r.bas = basis_number(g.order(), bases, r.beta);
    }
    return r;
}

} // namespace resolvent
