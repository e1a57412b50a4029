#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oldoind/graph.hpp"

namespace oldoind {

// Code of v with respect to S: the members of S adjacent to v.
inline VertexSet code_of(const Graph& g, VertexSet s, int v) {
    g.check_vertex(v);
    check_subset(g, s, "code_of");
    return g.neighbors(v) & s;
}

struct Verdict {
    enum class Violation {
        none,
        not_open_dominated,    // some vertex has no neighbor in S (or too few, for the necessary form)
        not_open_independent,  // some member of S has two or more neighbors in S
        not_distinguished,     // two vertices share the same code
        over_dominated_in_set, // some member of S is open-dominated more than once (necessary form)
    };

    bool valid = false;
    Violation violation = Violation::none;
    int witness_u = -1;
    int witness_v = -1;
    std::vector<VertexSet> codes;  // codes[v] = N(v) & S

    static Verdict ok(std::vector<VertexSet> codes) {
        Verdict r;
        r.valid = true;
        r.codes = std::move(codes);
        return r;
    }
    static Verdict fail(Violation kind, int u, int v, std::vector<VertexSet> codes) {
        Verdict r;
        r.valid = false;
        r.violation = kind;
        r.witness_u = u;
        r.witness_v = v;
        r.codes = std::move(codes);
        return r;
    }

    std::string describe() const {
        switch (violation) {
            case Violation::none: return "valid";
            case Violation::not_open_dominated:
                return "not-open-dominated(" + std::to_string(witness_u) + ")";
            case Violation::not_open_independent:
                return "open-independence(" + std::to_string(witness_u) + ")";
            case Violation::not_distinguished:
                return "not-distinguished(" + std::to_string(witness_u) + "," + std::to_string(witness_v) + ")";
            case Violation::over_dominated_in_set:
                return "over-dominated-in-S(" + std::to_string(witness_u) + ")";
        }
        return "?";
    }
};

namespace detail {
inline std::vector<VertexSet> all_codes(const Graph& g, VertexSet s) {
    std::vector<VertexSet> codes(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) codes[static_cast<std::size_t>(v)] = g.neighbors(v) & s;
    return codes;
}
}  // namespace detail

// Checks, in this order: (a) every vertex is open-dominated, (c) every
// member of S has at most one neighbor in S, (b) all codes are pairwise
// distinct.  The first violated clause is reported with the smallest
// witnesses.
inline Verdict verify_oldoind(const Graph& g, VertexSet s) {
    require_nonempty(g, "verify_oldoind");
    check_subset(g, s, "verify_oldoind");
    auto codes = detail::all_codes(g, s);
    int n = g.order();
    for (int v = 0; v < n; ++v)
        if (codes[static_cast<std::size_t>(v)].empty())
            return Verdict::fail(Verdict::Violation::not_open_dominated, v, -1, std::move(codes));
    for (int v = 0; v < n; ++v)
        if (s.contains(v) && codes[static_cast<std::size_t>(v)].count() > 1)
            return Verdict::fail(Verdict::Violation::not_open_independent, v, -1, std::move(codes));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (codes[static_cast<std::size_t>(u)] == codes[static_cast<std::size_t>(v)])
                return Verdict::fail(Verdict::Violation::not_distinguished, u, v, std::move(codes));
    return Verdict::ok(std::move(codes));
}

// Necessary conditions for any OLD_oind set: members of S are open-dominated
// exactly once, everything else at least twice.  Not sufficient in general.
inline Verdict check_necessary(const Graph& g, VertexSet s) {
    require_nonempty(g, "check_necessary");
    check_subset(g, s, "check_necessary");
    auto codes = detail::all_codes(g, s);
    // report entirely undominated vertices first, then the softer count defects
    for (int v = 0; v < g.order(); ++v)
        if (codes[static_cast<std::size_t>(v)].empty())
            return Verdict::fail(Verdict::Violation::not_open_dominated, v, -1, std::move(codes));
    for (int v = 0; v < g.order(); ++v)
        if (s.contains(v) && codes[static_cast<std::size_t>(v)].count() > 1)
            return Verdict::fail(Verdict::Violation::over_dominated_in_set, v, -1, std::move(codes));
    for (int v = 0; v < g.order(); ++v)
        if (!s.contains(v) && codes[static_cast<std::size_t>(v)].count() < 2)
            return Verdict::fail(Verdict::Violation::not_open_dominated, v, -1, std::move(codes));
    return Verdict::ok(std::move(codes));
}

// On graphs of girth at least five the necessary conditions are also
// sufficient, so the cheap count check decides the full property.
inline Verdict verify_girth5(const Graph& g, VertexSet s) {
    auto gi = girth(g);
    if (gi && *gi < 5)
        throw PreconditionViolated("verify_girth5: girth " + std::to_string(*gi) + " < 5");
    return check_necessary(g, s);
}

// Smallest pair of distinct vertices with identical open neighborhoods.
// Such a pair rules out every OLD set, hence every OLD_oind set.
inline std::optional<std::pair<int, int>> find_open_twins(const Graph& g) {
    require_nonempty(g, "find_open_twins");
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.neighbors(u) == g.neighbors(v)) return std::make_pair(u, v);
    return std::nullopt;
}

}  // namespace oldoind
