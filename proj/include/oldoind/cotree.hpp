#pragma once

#include <optional>
#include <vector>

#include "oldoind/graph.hpp"

namespace oldoind {

// Cotree of a cograph: leaves are the vertices, internal nodes alternate
// between disjoint-union and join.  Normalized by construction: children of
// a union node are connected, children of a join node are co-connected.
struct Cotree {
    enum class Kind { leaf, disjoint_union, join };

    Kind kind = Kind::leaf;
    int vertex = -1;  // leaf payload, an original vertex id
    std::vector<Cotree> children;

    VertexSet leaf_set() const {
        if (kind == Kind::leaf) return VertexSet::of({vertex});
        VertexSet s;
        for (const auto& c : children) s = s | c.leaf_set();
        return s;
    }
};

namespace detail {

inline std::optional<Cotree> build_cotree_rec(const Graph& g, const std::vector<int>& ids) {
    if (g.order() == 1) {
        Cotree t;
        t.kind = Cotree::Kind::leaf;
        t.vertex = ids[0];
        return t;
    }
    for (bool in_complement : {false, true}) {
        auto parts = components(g, in_complement);
        if (parts.size() < 2) continue;
        Cotree t;
        t.kind = in_complement ? Cotree::Kind::join : Cotree::Kind::disjoint_union;
        for (const auto& part : parts) {
            auto sub = induced_subgraph(g, part);
            std::vector<int> sub_ids;
            sub_ids.reserve(sub.to_old.size());
            for (int v : sub.to_old) sub_ids.push_back(ids[static_cast<std::size_t>(v)]);
            auto child = build_cotree_rec(sub.graph, sub_ids);
            if (!child) return std::nullopt;
            t.children.push_back(std::move(*child));
        }
        return t;
    }
    return std::nullopt;  // connected and co-connected on >= 2 vertices: not a cograph
}

inline void add_cotree_edges(const Cotree& t, Graph& g) {
    if (t.kind == Cotree::Kind::leaf) return;
    for (const auto& c : t.children) add_cotree_edges(c, g);
    if (t.kind == Cotree::Kind::join) {
        std::vector<VertexSet> sets;
        sets.reserve(t.children.size());
        for (const auto& c : t.children) sets.push_back(c.leaf_set());
        for (std::size_t i = 0; i < sets.size(); ++i)
            for (std::size_t j = i + 1; j < sets.size(); ++j)
                for (int u : sets[i].vertices())
                    for (int v : sets[j].vertices()) g.add_edge(u, v);
    }
}

}  // namespace detail

inline std::optional<Cotree> build_cotree(const Graph& g) {
    require_nonempty(g, "build_cotree");
    std::vector<int> ids(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) ids[static_cast<std::size_t>(v)] = v;
    return detail::build_cotree_rec(g, ids);
}

inline bool is_cograph(const Graph& g) { return build_cotree(g).has_value(); }

// Evaluates a cotree back into the graph it represents (original labels).
inline Graph cotree_graph(const Cotree& t, int n) {
    Graph g(n);
    detail::add_cotree_edges(t, g);
    return g;
}

}  // namespace oldoind
