#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oldoind/canonical.hpp"
#include "oldoind/cotree.hpp"
#include "oldoind/families.hpp"
#include "oldoind/graph.hpp"
#include "oldoind/graph6.hpp"
#include "oldoind/p4tidy.hpp"
#include "oldoind/verify.hpp"

namespace oldoind {

struct DecideTrace {
    std::string kind;  // "components" | "base" | "universal-split"
    std::string graph6;
    std::string base_name;          // base only
    int universal_vertex = -1;      // universal-split only (local label of the subgraph)
    std::vector<int> witness;       // vertices contributed at this level, input labels
    std::vector<DecideTrace> children;
};

struct DecideResult {
    bool accepted = false;
    VertexSet witness;
    DecideTrace trace;
};

namespace detail {

// Minimum witnesses for the accepted catalog graphs, in catalog labels.
// Values produced by min_oldoind and frozen; the unit tests re-derive them.
inline const std::vector<int>* base_witness(const std::string& name) {
    static const std::vector<std::pair<std::string, std::vector<int>>> table = {
        {"K2", {0, 1}},          {"K3", {0, 1}},
        {"P5", {0, 1, 3, 4}},    {"P5_join_K1", {0, 1, 3, 4}},
        {"Z", {1, 2, 3, 4}},     {"Z_join_K1", {1, 2, 3, 4}},
    };
    for (const auto& [n, w] : table)
        if (n == name) return &w;
    return nullptr;
}

inline const Graph* catalog_graph(const std::string& name) {
    for (const auto& [n, g] : base_catalog())
        if (n == name) return &g;
    return nullptr;
}

// Decides one connected graph; `ids` maps local labels to input labels.
inline std::optional<std::pair<VertexSet, DecideTrace>> decide_connected(
    const Graph& g, const std::vector<int>& ids, const std::vector<std::string>& bases) {
    DecideTrace trace;
    trace.graph6 = graph6_encode(g);

    if (auto name = recognize_base(g)) {
        bool accepted_base = false;
        for (const auto& b : bases) accepted_base |= (b == *name);
        if (accepted_base) {
            const Graph* cat = catalog_graph(*name);
            const std::vector<int>* wit = base_witness(*name);
            auto iso = find_isomorphism(*cat, g);  // catalog label -> local label
            if (!iso) throw InternalContract("catalog match without isomorphism");
            VertexSet w;
            trace.kind = "base";
            trace.base_name = *name;
            for (int v : *wit) {
                int local = (*iso)[static_cast<std::size_t>(v)];
                w.add(ids[static_cast<std::size_t>(local)]);
            }
            trace.witness = w.vertices();
            return std::make_pair(w, trace);
        }
    }

    // One universal vertex at most can disconnect the rest.
    for (int v : universal_vertices(g)) {
        if (g.order() == 1) break;
        VertexSet keep = VertexSet::full(g.order());
        keep.remove(v);
        auto sub = induced_subgraph(g, keep);
        auto parts = components(sub.graph);
        if (parts.size() < 2) continue;
        trace.kind = "universal-split";
        trace.universal_vertex = ids[static_cast<std::size_t>(v)];
        VertexSet w;
        for (const auto& part : parts) {
            auto comp = induced_subgraph(sub.graph, part);
            std::vector<int> comp_ids;
            comp_ids.reserve(comp.to_old.size());
            for (int u : comp.to_old)
                comp_ids.push_back(ids[static_cast<std::size_t>(sub.to_old[static_cast<std::size_t>(u)])]);
            auto child = decide_connected(comp.graph, comp_ids, bases);
            if (!child) return std::nullopt;
            w = w | child->first;
            trace.children.push_back(std::move(child->second));
        }
        trace.witness = w.vertices();
        return std::make_pair(w, trace);
    }
    return std::nullopt;
}

inline DecideResult decide_recursive(const Graph& g, const std::vector<std::string>& bases) {
    auto parts = components(g);
    std::vector<int> identity(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) identity[static_cast<std::size_t>(v)] = v;

    DecideResult result;
    if (parts.size() == 1) {
        auto r = decide_connected(g, identity, bases);
        if (!r) return result;
        result.accepted = true;
        result.witness = r->first;
        result.trace = std::move(r->second);
    } else {
        // A disconnected graph has a set exactly when each component does.
        result.trace.kind = "components";
        result.trace.graph6 = graph6_encode(g);
        VertexSet w;
        for (const auto& part : parts) {
            auto comp = induced_subgraph(g, part);
            auto r = decide_connected(comp.graph, comp.to_old, bases);
            if (!r) return DecideResult{};
            w = w | r->first;
            result.trace.children.push_back(std::move(r->second));
        }
        result.accepted = true;
        result.witness = w;
        result.trace.witness = w.vertices();
    }
    Verdict check = verify_oldoind(g, result.witness);
    if (!check.valid) throw InternalContract("decider witness failed verification: " + check.describe());
    return result;
}

}  // namespace detail

inline DecideResult p4tidy_oldoind_traced(const Graph& g) {
    require_nonempty(g, "p4tidy_oldoind");
    if (!is_p4_tidy(g)) throw ClassMismatch("p4tidy_oldoind: input is not P4-tidy");
    static const std::vector<std::string> bases = {"K2", "K3", "P5", "P5_join_K1", "Z", "Z_join_K1"};
    return detail::decide_recursive(g, bases);
}

inline DecideResult cograph_oldoind_traced(const Graph& g) {
    require_nonempty(g, "cograph_oldoind");
    if (!is_cograph(g)) throw ClassMismatch("cograph_oldoind: input is not a cograph");
    static const std::vector<std::string> bases = {"K2", "K3"};
    return detail::decide_recursive(g, bases);
}

inline std::optional<VertexSet> p4tidy_oldoind(const Graph& g) {
    auto r = p4tidy_oldoind_traced(g);
    if (!r.accepted) return std::nullopt;
    return r.witness;
}

inline std::optional<VertexSet> cograph_oldoind(const Graph& g) {
    auto r = cograph_oldoind_traced(g);
    if (!r.accepted) return std::nullopt;
    return r.witness;
}

}  // namespace oldoind
