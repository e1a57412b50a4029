#pragma once

#include <vector>

#include "oldoind/families.hpp"
#include "oldoind/graph.hpp"
#include "oldoind/spider.hpp"

namespace oldoind {

namespace detail {

inline bool induces_p4(const Graph& g, int a, int b, int c, int d) {
    int vs[4] = {a, b, c, d};
    int deg[4] = {0, 0, 0, 0};
    int edges = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (g.adjacent(vs[i], vs[j])) {
                ++edges;
                ++deg[i];
                ++deg[j];
            }
    if (edges != 3) return false;
    for (int i = 0; i < 4; ++i)
        if (deg[i] < 1 || deg[i] > 2) return false;
    return true;  // 3 edges, degrees within {1,2}: a path on the 4 vertices
}

}  // namespace detail

constexpr int p4tidy_definitional_max_order = 8;

// Literal reading of the defining property: every vertex set inducing a P4
// tolerates at most one outside vertex whose addition yields two or more
// induced P4's.
inline bool is_p4_tidy_definitional(const Graph& g) {
    require_nonempty(g, "is_p4_tidy_definitional");
    int n = g.order();
    if (n > p4tidy_definitional_max_order)
        throw CapacityExceeded("is_p4_tidy_definitional: order exceeds " +
                               std::to_string(p4tidy_definitional_max_order));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    if (!detail::induces_p4(g, a, b, c, d)) continue;
                    int partners = 0;
                    for (int v = 0; v < n; ++v) {
                        if (v == a || v == b || v == c || v == d) continue;
                        int quad[4] = {a, b, c, d};
                        int p4s = 1;  // the original quadruple
                        for (int skip = 0; skip < 4 && p4s < 2; ++skip) {
                            int x[3];
                            int t = 0;
                            for (int i = 0; i < 4; ++i)
                                if (i != skip) x[t++] = quad[i];
                            if (detail::induces_p4(g, x[0], x[1], x[2], v)) ++p4s;
                        }
                        if (p4s >= 2) ++partners;
                    }
                    if (partners >= 2) return false;
                }
    return true;
}

// Structural recognition: recurse through unions and joins; a connected,
// co-connected graph must be C5, P5, the complement of P5, or a spider /
// quasi-spider whose head is empty or itself P4-tidy.
inline bool is_p4_tidy(const Graph& g) {
    require_nonempty(g, "is_p4_tidy");
    if (g.order() == 1) return true;
    for (bool in_complement : {false, true}) {
        auto parts = components(g, in_complement);
        if (parts.size() < 2) continue;
        for (const auto& part : parts)
            if (!is_p4_tidy(induced_subgraph(g, part).graph)) return false;
        return true;
    }
    if (g.order() == 5) {
        auto name = recognize_base(g);
        if (name && (*name == "C5" || *name == "P5" || *name == "co_P5")) return true;
    }
    if (auto sp = find_quasi_spider(g)) {
        if (sp->head.empty()) return true;
        return is_p4_tidy(induced_subgraph(g, sp->head).graph);
    }
    return false;
}

}  // namespace oldoind
