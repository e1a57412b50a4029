#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oldoind/cotree.hpp"
#include "oldoind/families.hpp"
#include "oldoind/graph.hpp"
#include "oldoind/graph6.hpp"
#include "oldoind/verify.hpp"

namespace oldoind {

struct PrismTrace {
    std::string kind;  // "universal-base" | "size2-structure" | "peel"
    std::string graph6;              // the cograph decided at this level
    int s = 0;                       // universal-base: number of K2 parts
    struct Part {
        std::string type;  // "K2" | "R" | "R*"
        int l = 0;
        int m = 0;
        int size = 0;
    };
    std::vector<Part> parts;         // size2-structure
    std::string h_graph6;            // peel: the component recursed on
    std::string f_type;              // peel: "K2" | "R_1_m"
    int f_m = 0;                     // peel: m of the R(1,m) part, if any
    int r = 0;                       // peel: count of further K2 parts
    std::vector<int> s0;             // S0 vertices chosen at this level
    std::vector<PrismTrace> inner;   // peel recursion (0 or 1 entries)
};

// Witness for the complementary prism of G: S0 lives on the G side
// (labels < n), S1bar on the complement side (labels n..2n-1).
struct PrismWitness {
    VertexSet s0;
    VertexSet s1bar;
    PrismTrace derivation;

    VertexSet full() const { return s0 | s1bar; }
};

namespace detail {

struct PartView {
    VertexSet vertices;       // original labels in G
    Graph graph;              // the component of the complement, relabeled
    std::vector<int> to_old;  // local -> original
    std::optional<RForm> rform;
    bool is_k2 = false;
    int size = 0;
};

inline PrismTrace::Part part_summary(const PartView& p) {
    PrismTrace::Part out;
    out.size = p.size;
    if (p.is_k2) {
        out.type = "K2";
    } else if (p.rform) {
        out.type = p.rform->starred ? "R*" : "R";
        out.l = p.rform->l;
        out.m = p.rform->m;
    } else {
        out.type = "?";
    }
    return out;
}

// D-side (independents) and M-side (matching endpoints) of a part, in
// original labels.  K2 parts are all matching; the K3 reading picks the
// deterministic first decomposition.
inline std::pair<VertexSet, VertexSet> part_split(const PartView& p) {
    VertexSet dbar, mbar;
    if (p.is_k2) {
        mbar = p.vertices;
        return {dbar, mbar};
    }
    if (!p.rform) throw InternalContract("part_split: part lacks an R reading");
    for (int v : p.rform->independents.vertices()) dbar.add(p.to_old[static_cast<std::size_t>(v)]);
    for (int v : p.rform->matching.vertices()) mbar.add(p.to_old[static_cast<std::size_t>(v)]);
    return {dbar, mbar};
}

inline bool is_l2_type(const PartView& p) {
    return p.rform && p.rform->l == 2;  // R(2,m) or R*(2,1)
}

inline bool is_special_type(const PartView& p) {
    return p.rform && (p.rform->starred || p.rform->l == 2);  // R*(1,1), R*(2,1), R(2,m)
}

// Witness construction for the two-vertex S0 case: S1bar collects every
// matching endpoint; S0 takes one D vertex from each of two big parts,
// with the degree-two vertex preferred inside an R*(2,1) part.
inline std::pair<VertexSet, VertexSet> size2_construct(const std::vector<PartView>& parts,
                                                       const std::vector<std::size_t>& big_sorted) {
    VertexSet s0, s1_local;
    for (const auto& p : parts) s1_local = s1_local | part_split(p).second;

    auto d_choice = [&](const PartView& p) -> int {
        VertexSet dbar = part_split(p).first;
        if (dbar.count() == 1) return dbar.smallest();
        if (p.rform->starred) return p.to_old[static_cast<std::size_t>(p.rform->deficient)];
        return dbar.smallest();  // R(2,m): the two independents are symmetric
    };

    std::size_t g1, g2;
    if (big_sorted.size() == 2) {
        g1 = big_sorted[0];
        g2 = big_sorted[1];
        if (is_l2_type(parts[g2])) std::swap(g1, g2);
    } else {  // three big parts: the spare one must read as plain R(1,m)
        std::size_t spare = big_sorted.back();
        for (std::size_t i : big_sorted)
            if (!parts[i].rform->starred && parts[i].rform->l == 1) spare = i;
        std::vector<std::size_t> rest;
        for (std::size_t i : big_sorted)
            if (i != spare) rest.push_back(i);
        g1 = rest[0];
        g2 = rest[1];
    }
    s0.add(d_choice(parts[g1]));
    s0.add(d_choice(parts[g2]));
    return {s0, s1_local};
}

struct PrismCore {
    VertexSet s0;
    VertexSet s1_local;  // complement-side membership by original label (not yet shifted)
    PrismTrace trace;
};

inline std::optional<PrismCore> prism_decide_rec(const Graph& g, std::map<std::string, std::optional<PrismCore>>& memo);

inline std::vector<PartView> complement_parts(const Graph& g) {
    Graph gc = complement(g);
    std::vector<PartView> parts;
    for (const auto& set : components(gc)) {
        PartView p;
        p.vertices = set;
        p.size = set.count();
        auto sub = induced_subgraph(gc, set);
        p.graph = sub.graph;
        p.to_old = sub.to_old;
        if (p.size == 2) p.is_k2 = true;
        if (p.size >= 3) p.rform = recognize_r(p.graph);
        parts.push_back(std::move(p));
    }
    return parts;
}

// Shape test for the two-vertex S0 case: every complement component reads
// as K2, R(l,m) or R*(l,1) with l <= 2, two or three components are big,
// and the l = 2 and starred readings are scarce enough.
inline std::optional<std::vector<std::size_t>> size2_shape(const std::vector<PartView>& parts) {
    int t_big = 0, l2 = 0, special = 0;
    for (const auto& p : parts) {
        if (p.size < 2) return std::nullopt;
        if (p.is_k2) continue;
        if (!p.rform || p.rform->l > 2 || (p.rform->starred && p.rform->m != 1)) return std::nullopt;
        ++t_big;
        if (is_l2_type(p)) ++l2;
        if (is_special_type(p)) ++special;
    }
    if (!(t_big >= 2 && t_big <= 3 && l2 <= 1 && (l2 == 0 || t_big == 2) && special <= 2)) return std::nullopt;
    std::vector<std::size_t> big_sorted;
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i].size >= 3) big_sorted.push_back(i);
    std::sort(big_sorted.begin(), big_sorted.end(), [&](std::size_t a, std::size_t b) {
        if (parts[a].size != parts[b].size) return parts[a].size < parts[b].size;
        std::string ga = graph6_encode(parts[a].graph), gb = graph6_encode(parts[b].graph);
        if (ga != gb) return ga < gb;
        return parts[a].vertices.smallest() < parts[b].vertices.smallest();
    });
    return big_sorted;
}

inline std::optional<PrismCore> prism_branches(const Graph& g,
                                               std::map<std::string, std::optional<PrismCore>>& memo) {
    int n = g.order();
    std::vector<PartView> parts = complement_parts(g);

    int k1_count = 0, k2_count = 0;
    for (const auto& p : parts) {
        if (p.size == 1) ++k1_count;
        if (p.size == 2) ++k2_count;
    }

    // Universal base: a solitary complement vertex is a universal vertex of
    // g; the prism has a set exactly when everything else pairs up.
    if (k1_count > 0) {
        if (k1_count == 1 && k2_count + 1 == static_cast<int>(parts.size())) {
            PrismCore core;
            for (const auto& p : parts)
                if (p.size == 1) core.s0.add(p.vertices.smallest());
            core.s1_local = VertexSet::full(n);
            core.trace.kind = "universal-base";
            core.trace.graph6 = graph6_encode(g);
            core.trace.s = k2_count;
            core.trace.s0 = core.s0.vertices();
            return core;
        }
        return std::nullopt;  // several universal vertices, or a K1 beside a bigger part
    }

    // Two-vertex S0 structure.
    if (auto big_sorted = size2_shape(parts)) {
        auto [s0, s1_local] = size2_construct(parts, *big_sorted);
        PrismCore core;
        core.s0 = s0;
        core.s1_local = s1_local;
        core.trace.kind = "size2-structure";
        core.trace.graph6 = graph6_encode(g);
        for (const auto& p : parts) core.trace.parts.push_back(part_summary(p));
        core.trace.s0 = s0.vertices();
        return core;
    }

    // Peel: one component hosts the recursive subproblem, the rest must be
    // a single R(1,m) or nothing plus K2 padding.
    for (std::size_t h = 0; h < parts.size(); ++h) {
        if (parts[h].size < 2) continue;
        int rest_k2 = 0;
        std::size_t f_part = parts.size();
        bool ok = true;
        for (std::size_t i = 0; i < parts.size() && ok; ++i) {
            if (i == h) continue;
            if (parts[i].is_k2) {
                ++rest_k2;
            } else if (f_part == parts.size() && parts[i].rform && !parts[i].rform->starred &&
                       parts[i].rform->l == 1) {
                f_part = i;
            } else {
                ok = false;
            }
        }
        if (!ok) continue;
        if (f_part == parts.size() && rest_k2 == 0) continue;  // nothing left to absorb

        auto sub = prism_decide_rec(parts[h].graph, memo);
        if (!sub) continue;

        PrismCore core;
        // the sub-solution flips sides: its complement-side vertices land in G
        for (int b : sub->s1_local.vertices()) core.s0.add(parts[h].to_old[static_cast<std::size_t>(b)]);
        for (int b : sub->s0.vertices()) core.s1_local.add(parts[h].to_old[static_cast<std::size_t>(b)]);
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i == h) continue;
            if (parts[i].is_k2) {
                core.s1_local = core.s1_local | parts[i].vertices;
            } else {
                core.s1_local = core.s1_local | part_split(parts[i]).second;  // matching side of R(1,m)
            }
        }
        core.trace.kind = "peel";
        core.trace.graph6 = graph6_encode(g);
        core.trace.h_graph6 = graph6_encode(parts[h].graph);
        if (f_part != parts.size()) {
            core.trace.f_type = "R_1_m";
            core.trace.f_m = parts[f_part].rform->m;
            core.trace.r = rest_k2;
        } else {
            core.trace.f_type = "K2";
            core.trace.r = rest_k2 - 1;
        }
        core.trace.s0 = core.s0.vertices();
        core.trace.inner.push_back(sub->trace);
        return core;
    }
    return std::nullopt;
}

inline std::optional<PrismCore> prism_decide_rec(const Graph& g,
                                                 std::map<std::string, std::optional<PrismCore>>& memo) {
    std::string key = graph6_encode(g);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    auto result = prism_branches(g, memo);
    memo.emplace(std::move(key), result);
    return result;
}

}  // namespace detail

// Direct constructor for the two-vertex S0 case: applicable exactly when
// the complement components satisfy the structural conditions of
// detail::size2_shape.  The returned witness is verified before return.
inline PrismWitness prism_size2_witness(const Graph& g) {
    require_nonempty(g, "prism_size2_witness");
    if (g.order() > 32) throw CapacityExceeded("prism_size2_witness: order exceeds 32");
    if (!is_connected(g)) throw ClassMismatch("prism_size2_witness: input is not connected");
    if (!is_cograph(g)) throw ClassMismatch("prism_size2_witness: input is not a cograph");
    auto parts = detail::complement_parts(g);
    auto big_sorted = detail::size2_shape(parts);
    if (!big_sorted) throw ClassMismatch("prism_size2_witness: complement components do not fit the structure");

    auto [s0, s1_local] = detail::size2_construct(parts, *big_sorted);
    int n = g.order();
    PrismWitness w;
    w.s0 = s0;
    w.s1bar = VertexSet(s1_local.bits << n);
    w.derivation.kind = "size2-structure";
    w.derivation.graph6 = graph6_encode(g);
    for (const auto& p : parts) w.derivation.parts.push_back(detail::part_summary(p));
    w.derivation.s0 = s0.vertices();

    Verdict check = verify_oldoind(complementary_prism(g), w.full());
    if (!check.valid)
        throw InternalContract("prism_size2_witness: built set failed verification: " + check.describe());
    return w;
}

// Decides whether the complementary prism of a connected cograph has an
// OLD_oind set and, when it does, returns a verified witness together with
// the recursion trace.
inline std::optional<PrismWitness> prism_cograph_oldoind(const Graph& g) {
    require_nonempty(g, "prism_cograph_oldoind");
    if (g.order() > 32) throw CapacityExceeded("prism_cograph_oldoind: order exceeds 32");
    if (!is_connected(g)) throw ClassMismatch("prism_cograph_oldoind: input is not connected");
    if (!is_cograph(g)) throw ClassMismatch("prism_cograph_oldoind: input is not a cograph");

    std::map<std::string, std::optional<detail::PrismCore>> memo;
    auto core = detail::prism_decide_rec(g, memo);
    if (!core) return std::nullopt;

    int n = g.order();
    PrismWitness w;
    w.s0 = core->s0;
    w.s1bar = VertexSet(core->s1_local.bits << n);
    w.derivation = core->trace;

    Graph prism = complementary_prism(g);
    Verdict check = verify_oldoind(prism, w.full());
    if (!check.valid)
        throw InternalContract("prism witness failed verification: " + check.describe());
    int matched_pairs = 0;
    for (int v = 0; v < n; ++v)
        if (w.s0.contains(v) && core->s1_local.contains(v)) ++matched_pairs;
    if (matched_pairs > 1)
        throw InternalContract("prism witness uses more than one matching edge");
    return w;
}

// ---------------------------------------------------------------------------
// Structural audit of a prism witness against the component-wise laws that
// every such set obeys when all complement components have >= 2 vertices.

struct PrismAuditClause {
    std::string clause;
    bool passed = false;
    std::string detail;
};

struct PrismAudit {
    bool hypotheses_met = false;
    std::vector<PrismAuditClause> clauses;

    bool all_passed() const {
        for (const auto& c : clauses)
            if (!c.passed) return false;
        return true;
    }
};

inline PrismAudit audit_prism_set(const Graph& g, const PrismWitness& w) {
    require_nonempty(g, "audit_prism_set");
    int n = g.order();
    Graph prism = complementary_prism(g);
    if (!verify_oldoind(prism, w.full()).valid)
        throw InvalidInput("audit_prism_set: witness is not an OLD_oind set of the prism");

    PrismAudit audit;
    auto parts = anticomponents(g);
    for (const auto& p : parts)
        if (p.count() < 2) return audit;  // a universal vertex of g: the component laws need bigger parts
    if (parts.size() < 2) return audit;
    audit.hypotheses_met = true;

    VertexSet s0 = w.s0;
    VertexSet s1_local(w.s1bar.bits >> n);
    auto record = [&](const std::string& name, bool ok, const std::string& detail) {
        audit.clauses.push_back({name, ok, detail});
    };

    record("i-both-halves-nonempty", !s0.empty() && !s1_local.empty(),
           "|S0|=" + std::to_string(s0.count()) + " |S1|=" + std::to_string(s1_local.count()));

    bool all_meet = true;
    for (const auto& p : parts) all_meet &= !(p & s1_local).empty();
    record("ii-every-part-meets-S1", all_meet, "");

    bool dbar_ok = true;
    std::string dbar_detail;
    for (const auto& p : parts) {
        if (p.count() < 3 || (p & s0).count() > 1) continue;
        VertexSet dbar = p - s1_local;
        int sz = dbar.count();
        bool independent_in_complement = true;
        auto vs = dbar.vertices();
        for (std::size_t a = 0; a < vs.size(); ++a)
            for (std::size_t b = a + 1; b < vs.size(); ++b)
                if (!g.adjacent(vs[a], vs[b])) independent_in_complement = false;
        if (sz < 1 || sz > 2 || !independent_in_complement) {
            dbar_ok = false;
            dbar_detail = "part at vertex " + std::to_string(p.smallest());
        }
    }
    record("iii-residue-independent-small", dbar_ok, dbar_detail);

    if (s0.count() == 2) {
        int touched_big = 0;
        bool sizes_ok = true;
        for (const auto& p : parts)
            if (!(p & s0).empty()) {
                ++touched_big;
                sizes_ok &= p.count() >= 3;
            }
        VertexSet dbar_all;
        for (const auto& p : parts) dbar_all = dbar_all | (p - s1_local);
        int d = dbar_all.count();
        record("iv-size2-structure", touched_big == 2 && sizes_ok && d >= 2 && d <= 3,
               "parts touched=" + std::to_string(touched_big) + " |D|=" + std::to_string(d));
    } else {
        record("iv-size2-structure", true, "not applicable: |S0|=" + std::to_string(s0.count()));
    }

    int missed_big = 0;
    for (const auto& p : parts)
        if (p.count() >= 3 && (p & s0).empty()) ++missed_big;
    record("v-at-most-one-big-part-misses-S0", missed_big <= 1, "missed=" + std::to_string(missed_big));

    int t_big = 0;
    for (const auto& p : parts)
        if (p.count() >= 3) ++t_big;
    record("vi-big-part-count", t_big >= 1 && t_big <= 3, "t'=" + std::to_string(t_big));

    return audit;
}

}  // namespace oldoind
