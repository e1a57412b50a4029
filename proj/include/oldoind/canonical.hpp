#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "oldoind/graph6.hpp"
#include "oldoind/graph.hpp"

namespace oldoind {

inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
    Graph h(g.order());
    for (auto [u, v] : g.edges()) h.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return h;
}

namespace detail {

// Upper-triangle bit code in graph6 column-major order; fits in 64 bits for
// n <= 11.
inline std::uint64_t triangle_code(const Graph& g) {
    std::uint64_t code = 0;
    int bit = 0;
    for (int col = 1; col < g.order(); ++col)
        for (int row = 0; row < col; ++row, ++bit)
            if (g.adjacent(row, col)) code |= std::uint64_t{1} << bit;
    return code;
}

inline Graph graph_from_triangle_code(int n, std::uint64_t code) {
    Graph g(n);
    int bit = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row, ++bit)
            if ((code >> bit) & 1u) g.add_edge(row, col);
    return g;
}

inline int pair_index(int i, int j) {  // requires i < j
    return j * (j - 1) / 2 + i;
}

}  // namespace detail

constexpr int canonical_max_order = 10;

// Brute-force canonical form: the graph6 line of the lexicographically
// smallest relabeling of the adjacency bit-string.  Two graphs are
// isomorphic exactly when their canonical forms coincide.
inline std::string canonical_form(const Graph& g) {
    int n = g.order();
    require_nonempty(g, "canonical_form");
    if (n > canonical_max_order)
        throw CapacityExceeded("canonical_form: order " + std::to_string(n) + " exceeds " +
                               std::to_string(canonical_max_order));

    static thread_local std::unordered_map<std::string, std::string> cache;
    std::string key = graph6_encode(g);
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    auto es = g.edges();
    do {
        std::uint64_t code = 0;
        for (auto [u, v] : es) {
            int a = perm[static_cast<std::size_t>(u)], b = perm[static_cast<std::size_t>(v)];
            if (a > b) std::swap(a, b);
            code |= std::uint64_t{1} << detail::pair_index(a, b);
        }
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::string result = graph6_encode(detail::graph_from_triangle_code(n, best));
    cache.emplace(std::move(key), result);
    return result;
}

inline bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order()) return false;
    if (a.order() == 0) return true;
    if (a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

// First vertex bijection (in lexicographic permutation order) mapping a onto
// b, if one exists.
inline std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b) {
    int n = a.order();
    if (n != b.order() || a.edge_count() != b.edge_count()) return std::nullopt;
    if (n > canonical_max_order) throw CapacityExceeded("find_isomorphism: order exceeds 10");
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n; ++v)
                if (a.adjacent(u, v) != b.adjacent(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)])) {
                    ok = false;
                    break;
                }
        if (ok) return perm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

constexpr int enumerate_max_order = 7;

// One representative per isomorphism class: every labeled graph on n
// vertices is generated and kept exactly when no relabeling yields a
// smaller triangle code.
inline std::vector<Graph> enumerate_nonisomorphic(int n, bool connected_only = false) {
    if (n < 1) throw InvalidInput("enumerate_nonisomorphic: order must be positive");
    if (n > enumerate_max_order)
        throw CapacityExceeded("enumerate_nonisomorphic: order " + std::to_string(n) + " exceeds " +
                               std::to_string(enumerate_max_order));

    int nbits = n * (n - 1) / 2;

    // Per-permutation bit relocation tables.
    std::vector<std::array<std::uint8_t, 21>> tables;
    {
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::array<std::uint8_t, 21> t{};
            for (int col = 1, bit = 0; col < n; ++col)
                for (int row = 0; row < col; ++row, ++bit) {
                    int a = perm[static_cast<std::size_t>(row)], b = perm[static_cast<std::size_t>(col)];
                    if (a > b) std::swap(a, b);
                    t[static_cast<std::size_t>(bit)] = static_cast<std::uint8_t>(detail::pair_index(a, b));
                }
            tables.push_back(t);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    std::vector<Graph> out;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << nbits); ++code) {
        bool canonical = true;
        for (const auto& t : tables) {
            std::uint64_t mapped = 0;
            for (std::uint64_t b = code; b; b &= b - 1)
                mapped |= std::uint64_t{1} << t[static_cast<std::size_t>(__builtin_ctzll(b))];
            if (mapped < code) {
                canonical = false;
                break;
            }
        }
        if (!canonical) continue;
        Graph g = detail::graph_from_triangle_code(n, code);
        if (connected_only && !is_connected(g)) continue;
        out.push_back(g);
    }
    return out;
}

}  // namespace oldoind
