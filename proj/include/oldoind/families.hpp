#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oldoind/canonical.hpp"
#include "oldoind/graph.hpp"

namespace oldoind {

inline Graph gen_path(int n) {
    if (n < 1) throw InvalidInput("gen_path: order must be positive");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph gen_cycle(int n) {
    if (n < 3) throw InvalidInput("gen_cycle: order must be at least 3");
    Graph g = gen_path(n);
    g.add_edge(n - 1, 0);
    return g;
}

inline Graph gen_complete(int n) {
    if (n < 1) throw InvalidInput("gen_complete: order must be positive");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph gen_edgeless(int n) {
    if (n < 1) throw InvalidInput("gen_edgeless: order must be positive");
    return Graph(n);
}

// Complement of s disjoint edges: K_{2s} minus the perfect matching
// (2v, 2v+1).
inline Graph gen_cocktail_party(int s) {
    if (s < 1) throw InvalidInput("gen_cocktail_party: s must be positive");
    if (2 * s > Graph::max_vertices) throw CapacityExceeded("gen_cocktail_party: order exceeds 64");
    Graph g(2 * s);
    for (int u = 0; u < 2 * s; ++u)
        for (int v = u + 1; v < 2 * s; ++v)
            if (!(u / 2 == v / 2)) g.add_edge(u, v);
    return g;
}

// R(l,m): l independent vertices 0..l-1 joined completely to m disjoint
// edges (l, l+1), (l+2, l+3), ...
inline Graph gen_r(int l, int m) {
    if (l < 1 || m < 1) throw InvalidInput("gen_r: parameters must be positive");
    int n = l + 2 * m;
    if (n > Graph::max_vertices) throw CapacityExceeded("gen_r: order exceeds 64");
    Graph g(n);
    for (int p = 0; p < m; ++p) g.add_edge(l + 2 * p, l + 2 * p + 1);
    for (int i = 0; i < l; ++i)
        for (int j = l; j < n; ++j) g.add_edge(i, j);
    return g;
}

// R*(l,m): R(l,m) with the edge between independent vertex 0 and pair
// vertex l removed.
inline Graph gen_r_star(int l, int m) {
    Graph g = gen_r(l, m);
    Graph h(g.order());
    for (auto [u, v] : g.edges())
        if (!(u == 0 && v == l)) h.add_edge(u, v);
    return h;
}

// Universal vertex 0 joined to a cocktail-party graph on 2m vertices.
inline Graph gen_k1_join_cocktail_party(int m) {
    if (m < 1) throw InvalidInput("gen_k1_join_cocktail_party: m must be positive");
    return join(gen_complete(1), gen_cocktail_party(m));
}

inline Graph gen_named(const std::string& family, const std::vector<int>& params) {
    auto need = [&](std::size_t k) {
        if (params.size() != k)
            throw InvalidInput("gen_named: family '" + family + "' takes " + std::to_string(k) + " parameter(s)");
    };
    if (family == "path") { need(1); return gen_path(params[0]); }
    if (family == "cycle") { need(1); return gen_cycle(params[0]); }
    if (family == "complete") { need(1); return gen_complete(params[0]); }
    if (family == "edgeless") { need(1); return gen_edgeless(params[0]); }
    if (family == "cocktail") { need(1); return gen_cocktail_party(params[0]); }
    if (family == "r") { need(2); return gen_r(params[0], params[1]); }
    if (family == "rstar") { need(2); return gen_r_star(params[0], params[1]); }
    if (family == "k1-cocktail") { need(1); return gen_k1_join_cocktail_party(params[0]); }
    throw InvalidInput("gen_named: unknown family '" + family + "'");
}

// ---------------------------------------------------------------------------
// Recognition of the R(l,m) / R*(l,m) shapes.

struct RForm {
    int l = 0;
    int m = 0;
    bool starred = false;
    VertexSet independents;    // the l-vertex independent side
    VertexSet matching;        // the 2m endpoints of the independent edges
    int deficient = -1;        // starred only: the independent vertex missing an edge
    int deficient_pair = -1;   // starred only: the matching vertex it misses
};

namespace detail {

// All ways to read g as R(l,m).  The complement of R(l,m) splits into the
// clique on the independent side plus either a cocktail-party component
// (m >= 2) or two isolated vertices (m == 1); the reading is unique except
// for K3, which admits three.
inline std::vector<RForm> r_decompositions(const Graph& g) {
    std::vector<RForm> out;
    int n = g.order();
    if (n < 3) return out;
    auto parts = anticomponents(g);
    auto independent_in_g = [&](VertexSet s) {
        for (int v : s.vertices())
            if ((g.neighbors(v) & s).count() > 0) return false;
        return true;
    };
    if (parts.size() == 3) {  // m == 1
        for (std::size_t i = 0; i < 3; ++i) {
            if (parts[i].count() != n - 2) continue;
            std::size_t j = (i + 1) % 3, k = (i + 2) % 3;
            if (parts[j].count() != 1 || parts[k].count() != 1) continue;
            int a = parts[j].smallest(), b = parts[k].smallest();
            if (!g.adjacent(a, b)) continue;
            if (!independent_in_g(parts[i])) continue;
            RForm f;
            f.l = n - 2;
            f.m = 1;
            f.independents = parts[i];
            f.matching = VertexSet::of({a, b});
            out.push_back(f);
        }
    } else if (parts.size() == 2) {  // m >= 2
        for (int which : {0, 1}) {
            VertexSet pi = parts[static_cast<std::size_t>(which)];
            VertexSet pm = parts[static_cast<std::size_t>(1 - which)];
            if (pm.count() < 4 || pm.count() % 2 != 0) continue;
            if (!independent_in_g(pi)) continue;
            bool matching_ok = true;
            for (int v : pm.vertices())
                if ((g.neighbors(v) & pm).count() != 1) {
                    matching_ok = false;
                    break;
                }
            if (!matching_ok) continue;
            RForm f;
            f.l = pi.count();
            f.m = pm.count() / 2;
            f.independents = pi;
            f.matching = pm;
            out.push_back(f);
        }
    }
    return out;
}

}  // namespace detail

// Matches g against R(l,m) and R*(l,m); the unstarred reading wins when both
// could apply.  Works at any order up to 64.
inline std::optional<RForm> recognize_r(const Graph& g) {
    auto plain = detail::r_decompositions(g);
    if (!plain.empty()) return plain.front();

    // Starred: restoring the single missing independent-to-pair edge must
    // produce an R(l,m) in which the restored endpoints take those roles.
    int n = g.order();
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w) {
            if (g.adjacent(u, w)) continue;
            Graph h(n);
            for (auto [a, b] : g.edges()) h.add_edge(a, b);
            h.add_edge(u, w);
            for (const RForm& f : detail::r_decompositions(h)) {
                int ind = -1, pair = -1;
                if (f.independents.contains(u) && f.matching.contains(w)) {
                    ind = u;
                    pair = w;
                } else if (f.independents.contains(w) && f.matching.contains(u)) {
                    ind = w;
                    pair = u;
                } else {
                    continue;
                }
                RForm starred = f;
                starred.starred = true;
                starred.deficient = ind;
                starred.deficient_pair = pair;
                return starred;
            }
        }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Fixed catalog of small named graphs, keyed by canonical form.

inline Graph gen_z() {
    return from_edges(5, {{0, 1}, {0, 2}, {1, 3}, {0, 4}, {2, 4}});
}

inline const std::vector<std::pair<std::string, Graph>>& base_catalog() {
    static const std::vector<std::pair<std::string, Graph>> catalog = {
        {"K2", gen_complete(2)},
        {"K3", gen_complete(3)},
        {"P5", gen_path(5)},
        {"P5_join_K1", join(gen_path(5), gen_complete(1))},
        {"Z", gen_z()},
        {"Z_join_K1", join(gen_z(), gen_complete(1))},
        {"C5", gen_cycle(5)},
        {"co_P5", complement(gen_path(5))},
    };
    return catalog;
}

inline std::optional<std::string> recognize_base(const Graph& g) {
    if (g.order() < 2 || g.order() > 6) return std::nullopt;
    std::string canon = canonical_form(g);
    for (const auto& [name, h] : base_catalog())
        if (g.order() == h.order() && canon == canonical_form(h)) return name;
    return std::nullopt;
}

}  // namespace oldoind
