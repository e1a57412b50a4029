#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "oldoind/graph.hpp"

namespace oldoind {

enum class SpiderKind { thin, thick };
enum class SpiderSide { clique, independent };
enum class TwinKind { adjacent, nonadjacent };  // K2 vs complement-of-K2 replacement

struct QuasiInfo {
    int pair_u = -1;  // the two vertices standing in for one spider vertex
    int pair_v = -1;
    TwinKind replacement = TwinKind::adjacent;
    SpiderSide original_side = SpiderSide::clique;
};

// Partition witness: clique C, independent set X (|C| = |X| = weight after
// contracting the quasi pair), head H joined to all of C and none of X.
struct SpiderPartition {
    SpiderKind kind = SpiderKind::thin;
    int weight = 0;
    VertexSet clique;
    VertexSet independent;
    VertexSet head;
    std::optional<QuasiInfo> quasi;
};

// Labels: clique 0..k-1, independent k..2k-1, head vertices after.
inline Graph gen_spider(SpiderKind kind, int k, const Graph& head) {
    if (k < 2) throw InvalidInput("gen_spider: weight must be at least 2");
    int h = head.order();
    if (2 * k + h > Graph::max_vertices) throw CapacityExceeded("gen_spider: order exceeds 64");
    Graph g(2 * k + h);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) g.add_edge(i, j);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (kind == SpiderKind::thin ? i == j : i != j) g.add_edge(k + i, j);
    for (auto [u, v] : head.edges()) g.add_edge(2 * k + u, 2 * k + v);
    for (int u = 0; u < h; ++u)
        for (int j = 0; j < k; ++j) g.add_edge(2 * k + u, j);
    return g;
}

// The replacement twin is appended as the last vertex and copies the
// adjacencies of the replaced spider vertex.
inline Graph gen_quasi_spider(SpiderKind kind, int k, const Graph& head, SpiderSide side, int index,
                              TwinKind replacement) {
    if (index < 0 || index >= k) throw InvalidInput("gen_quasi_spider: replaced index out of range");
    Graph base = gen_spider(kind, k, head);
    int n = base.order();
    if (n + 1 > Graph::max_vertices) throw CapacityExceeded("gen_quasi_spider: order exceeds 64");
    int v = side == SpiderSide::clique ? index : k + index;
    Graph g(n + 1);
    for (auto [a, b] : base.edges()) g.add_edge(a, b);
    for (int u : base.neighbors(v).vertices()) g.add_edge(n, u);
    if (replacement == TwinKind::adjacent) g.add_edge(v, n);
    return g;
}

namespace detail {

inline bool spider_adjacency_ok(const Graph& g, SpiderKind kind, const std::vector<int>& xs,
                                const std::vector<int>& cs, VertexSet clique, VertexSet independent,
                                VertexSet head) {
    int k = static_cast<int>(xs.size());
    // clique / independent structure
    for (int u : clique.vertices())
        for (int v : clique.vertices())
            if (u < v && !g.adjacent(u, v)) return false;
    for (int u : independent.vertices())
        for (int v : independent.vertices())
            if (u < v && g.adjacent(u, v)) return false;
    // cross pattern determined by the pairing
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            bool want = kind == SpiderKind::thin ? i == j : i != j;
            if (g.adjacent(xs[static_cast<std::size_t>(i)], cs[static_cast<std::size_t>(j)]) != want) return false;
        }
    // head joined to all of the clique and none of the independents
    for (int h : head.vertices()) {
        if ((g.neighbors(h) & clique) != clique) return false;
        if (!(g.neighbors(h) & independent).empty()) return false;
    }
    return true;
}

}  // namespace detail

// The independent set of a spider is exactly its minimum-degree set (degree
// 1 in the thin case, k-1 in the thick case), so the candidate partition is
// forced; a full adjacency check then rejects every non-spider.
inline std::optional<SpiderPartition> find_spider_partition(const Graph& g) {
    int n = g.order();
    if (n < 4) return std::nullopt;
    int dmin = n;
    for (int v = 0; v < n; ++v) dmin = std::min(dmin, g.degree(v));
    if (dmin == 0) return std::nullopt;
    VertexSet xset;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == dmin) xset.add(v);
    int k = xset.count();
    if (k < 2 || 2 * k > n) return std::nullopt;

    SpiderKind kind;
    if (dmin == 1)
        kind = SpiderKind::thin;
    else if (dmin == k - 1 && k >= 3)
        kind = SpiderKind::thick;
    else
        return std::nullopt;

    std::vector<int> xs = xset.vertices();
    VertexSet cset;
    for (int x : xs) cset = cset | g.neighbors(x);
    if (cset.count() != k || !(cset & xset).empty()) return std::nullopt;

    // pair x_i with c_i: the sole neighbor (thin) or the sole non-neighbor
    // within C (thick)
    std::vector<int> cs(static_cast<std::size_t>(k), -1);
    VertexSet used;
    for (int i = 0; i < k; ++i) {
        VertexSet cand = kind == SpiderKind::thin ? (g.neighbors(xs[static_cast<std::size_t>(i)]) & cset)
                                                  : (cset - g.neighbors(xs[static_cast<std::size_t>(i)]));
        if (cand.count() != 1) return std::nullopt;
        int c = cand.smallest();
        if (used.contains(c)) return std::nullopt;
        used.add(c);
        cs[static_cast<std::size_t>(i)] = c;
    }

    VertexSet head = VertexSet::full(n) - cset - xset;
    if (!detail::spider_adjacency_ok(g, kind, xs, cs, cset, xset, head)) return std::nullopt;

    SpiderPartition p;
    p.kind = kind;
    p.weight = k;
    p.clique = cset;
    p.independent = xset;
    p.head = head;
    return p;
}

// Quasi-spiders are found by contracting a twin pair (the replacement pair
// is necessarily a twin pair) and re-running plain detection; pairs are
// tried in lexicographic order.
inline std::optional<SpiderPartition> find_quasi_spider(const Graph& g) {
    if (auto plain = find_spider_partition(g)) return plain;
    int n = g.order();
    if (n < 5) return std::nullopt;
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w) {
            VertexSet nu = g.neighbors(u);
            VertexSet nw = g.neighbors(w);
            nu.remove(w);
            nw.remove(u);
            if (nu != nw) continue;
            VertexSet keep = VertexSet::full(n);
            keep.remove(w);
            auto sub = induced_subgraph(g, keep);
            auto sp = find_spider_partition(sub.graph);
            if (!sp) continue;
            int uc = sub.to_new[static_cast<std::size_t>(u)];
            if (!sp->clique.contains(uc) && !sp->independent.contains(uc)) continue;

            SpiderPartition p;
            p.kind = sp->kind;
            p.weight = sp->weight;
            for (int v : sp->clique.vertices()) p.clique.add(sub.to_old[static_cast<std::size_t>(v)]);
            for (int v : sp->independent.vertices()) p.independent.add(sub.to_old[static_cast<std::size_t>(v)]);
            for (int v : sp->head.vertices()) p.head.add(sub.to_old[static_cast<std::size_t>(v)]);
            QuasiInfo q;
            q.pair_u = u;
            q.pair_v = w;
            q.replacement = g.adjacent(u, w) ? TwinKind::adjacent : TwinKind::nonadjacent;
            q.original_side = sp->clique.contains(uc) ? SpiderSide::clique : SpiderSide::independent;
            if (q.original_side == SpiderSide::clique)
                p.clique.add(w);
            else
                p.independent.add(w);
            p.quasi = q;
            return p;
        }
    return std::nullopt;
}

}  // namespace oldoind
