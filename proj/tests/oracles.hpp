#pragma once

// Definition-level reference computations. Nothing here calls into the
// library's search code: distances come from Floyd-Warshall on a plain
// matrix and every invariant is evaluated straight from its definition by
// enumerating subsets.

#include <resolvent/graph.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<int>>;

inline constexpr int inf = std::numeric_limits<int>::max() / 4;

inline Matrix adjacency(const resolvent::Graph& g) {
    const int n = g.order();
    Matrix a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    for (auto [u, v] : g.edges()) {
        a[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
        a[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
    }
    return a;
}

inline Matrix floyd_warshall(const resolvent::Graph& g) {
    const auto n = static_cast<std::size_t>(g.order());
    Matrix d(n, std::vector<int>(n, inf));
    Matrix a = adjacency(g);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i == j) d[i][j] = 0;
            else if (a[i][j]) d[i][j] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

inline std::vector<int> members(std::uint64_t mask, int n) {
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if ((mask >> v) & 1U) out.push_back(v);
    return out;
}

inline int popcount(std::uint64_t x) {
    int c = 0;
    for (; x; x &= x - 1) ++c;
    return c;
}

/// Distinct representations for all vertices, compared as whole vectors.
inline bool resolves(const Matrix& d, std::uint64_t w) {
    const int n = static_cast<int>(d.size());
    const auto ws = members(w, n);
    std::set<std::vector<int>> seen;
    for (int v = 0; v < n; ++v) {
        std::vector<int> r;
        for (int x : ws) r.push_back(d[static_cast<std::size_t>(v)][static_cast<std::size_t>(x)]);
        if (!seen.insert(r).second) return false;
    }
    return true;
}

inline std::vector<std::uint64_t> subsets_of_size(int n, int k) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
        if (popcount(m) == k) out.push_back(m);
    return out;
}

/// Smallest k with some resolving k-set (1 for K_1).
inline int beta(const Matrix& d) {
    const int n = static_cast<int>(d.size());
    if (n == 1) return 1;
    for (int k = 1; k <= n; ++k)
        for (auto m : subsets_of_size(n, k))
            if (resolves(d, m)) return k;
    return n;
}

/// Smallest k such that every k-set resolves (1 for K_1).
inline int res(const Matrix& d) {
    const int n = static_cast<int>(d.size());
    if (n == 1) return 1;
    for (int k = 1; k <= n; ++k) {
        bool all = true;
        for (auto m : subsets_of_size(n, k))
            if (!resolves(d, m)) {
                all = false;
                break;
            }
        if (all) return k;
    }
    return n;
}

inline std::vector<std::uint64_t> bases(const Matrix& d) {
    const int n = static_cast<int>(d.size());
    if (n == 1) return {1};
    std::vector<std::uint64_t> out;
    for (auto m : subsets_of_size(n, beta(d)))
        if (resolves(d, m)) out.push_back(m);
    return out;
}

/// Largest r such that every r-set is contained in some basis.
inline int bas(const Matrix& d) {
    const int n = static_cast<int>(d.size());
    const auto bs = bases(d);
    int best = 0;
    for (int r = 0; r <= beta(d); ++r) {
        bool all = true;
        for (auto s : subsets_of_size(n, r)) {
            bool inside = std::any_of(bs.begin(), bs.end(), [s](std::uint64_t b) { return (s & ~b) == 0; });
            if (!inside) {
                all = false;
                break;
            }
        }
        if (all) best = r;
    }
    return best;
}

inline bool connected_without(const Matrix& a, std::uint64_t removed) {
    const int n = static_cast<int>(a.size());
    int start = -1, remaining = 0;
    for (int v = 0; v < n; ++v)
        if (!((removed >> v) & 1U)) {
            if (start < 0) start = v;
            ++remaining;
        }
    if (remaining == 0) return true;
    std::vector<int> stack{start};
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    seen[static_cast<std::size_t>(start)] = true;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < n; ++u)
            if (a[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] && !((removed >> u) & 1U) &&
                !seen[static_cast<std::size_t>(u)]) {
                seen[static_cast<std::size_t>(u)] = true;
                ++count;
                stack.push_back(u);
            }
    }
    return count == remaining;
}

inline std::vector<int> cut_vertices(const resolvent::Graph& g) {
    Matrix a = adjacency(g);
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v)
        if (!connected_without(a, std::uint64_t{1} << v)) out.push_back(v);
    return out;
}

inline int clique_number(const resolvent::Graph& g) {
    const int n = g.order();
    Matrix a = adjacency(g);
    int best = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        auto vs = members(m, n);
        bool clique = true;
        for (std::size_t i = 0; i < vs.size() && clique; ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                if (!a[static_cast<std::size_t>(vs[i])][static_cast<std::size_t>(vs[j])]) {
                    clique = false;
                    break;
                }
        if (clique) best = std::max(best, static_cast<int>(vs.size()));
    }
    return best;
}

/// Labelled connected graphs on n vertices via
/// C(n) = 2^{n choose 2} - sum_{k=1}^{n-1} binom(n-1,k-1) C(k) 2^{(n-k) choose 2}.
inline std::uint64_t connected_labeled_count(int n) {
    auto binom = [](int a, int b) {
        std::uint64_t r = 1;
        for (int i = 1; i <= b; ++i) r = r * static_cast<std::uint64_t>(a - b + i) / static_cast<std::uint64_t>(i);
        return r;
    };
    auto all = [](int m) { return std::uint64_t{1} << (m * (m - 1) / 2); };
    std::vector<std::uint64_t> c(static_cast<std::size_t>(n + 1), 0);
    for (int m = 1; m <= n; ++m) {
        std::uint64_t disconnected = 0;
        for (int k = 1; k < m; ++k) disconnected += binom(m - 1, k - 1) * c[static_cast<std::size_t>(k)] * all(m - k);
        c[static_cast<std::size_t>(m)] = all(m) - disconnected;
    }
    return c[static_cast<std::size_t>(n)];
}

} // namespace oracle
