#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace resolvent {

using Vertex = int;

inline constexpr int max_vertices = 64;

/// A set of vertices packed into one machine word. Iteration and the ordered
/// view are always ascending by vertex id.
class VertexSet {
public:
    constexpr VertexSet() noexcept = default;
    constexpr explicit VertexSet(std::uint64_t bits) noexcept : bits_(bits) {}
    VertexSet(std::initializer_list<Vertex> vs) noexcept {
        for (Vertex v : vs) insert(v);
    }

    static constexpr VertexSet first_n(int n) noexcept {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static VertexSet from_range(const std::vector<Vertex>& vs) noexcept {
        VertexSet s;
        for (Vertex v : vs) s.insert(v);
        return s;
    }

    constexpr std::uint64_t bits() const noexcept { return bits_; }
    constexpr int size() const noexcept { return std::popcount(bits_); }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    constexpr bool contains(Vertex v) const noexcept { return (bits_ >> v) & 1U; }
    constexpr bool is_subset_of(VertexSet other) const noexcept { return (bits_ & ~other.bits_) == 0; }
    constexpr Vertex front() const noexcept { return std::countr_zero(bits_); }

    constexpr void insert(Vertex v) noexcept { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(Vertex v) noexcept { bits_ &= ~(std::uint64_t{1} << v); }

    std::vector<Vertex> ordered() const {
        std::vector<Vertex> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (Vertex v : *this) out.push_back(v);
        return out;
    }

    std::string to_string() const;

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) noexcept { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) noexcept { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) noexcept { return VertexSet(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(VertexSet, VertexSet) noexcept = default;

    /// Lexicographic order of the ascending ordered views.
    friend bool lex_less(VertexSet a, VertexSet b) noexcept {
        while (!a.empty() && !b.empty()) {
            Vertex x = a.front(), y = b.front();
            if (x != y) return x < y;
            a.erase(x);
            b.erase(y);
        }
        return a.empty() && !b.empty();
    }

    class iterator {
    public:
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;

        constexpr iterator() noexcept = default;
        constexpr explicit iterator(std::uint64_t rest) noexcept : rest_(rest) {}
        constexpr Vertex operator*() const noexcept { return std::countr_zero(rest_); }
        constexpr iterator& operator++() noexcept {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr iterator operator++(int) noexcept {
            iterator t = *this;
            ++*this;
            return t;
        }
        friend constexpr bool operator==(iterator, iterator) noexcept = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr iterator begin() const noexcept { return iterator(bits_); }
    constexpr iterator end() const noexcept { return iterator(0); }

private:
    std::uint64_t bits_ = 0;
};

/// Visits every k-subset of {0..n-1} in lexicographic order of the ascending
/// ordered views. The visitor returns false to stop early; the function
/// returns false iff it was stopped.
template <class Visitor>
bool for_each_combination(int n, int k, Visitor&& visit) {
    if (k < 0 || k > n) return true;
    std::vector<Vertex> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    for (;;) {
        std::uint64_t bits = 0;
        for (Vertex v : idx) bits |= std::uint64_t{1} << v;
        if (!visit(VertexSet(bits))) return false;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return true;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

} // namespace resolvent
