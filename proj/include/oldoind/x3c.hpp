#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oldoind/graph.hpp"
#include "oldoind/solver.hpp"
#include "oldoind/verify.hpp"

namespace oldoind {

struct NotExactCover : InvalidInput {
    using InvalidInput::InvalidInput;
};

// Exact-cover-by-3-sets instance: ground set {0..3n-1} plus m triples.
struct X3CInstance {
    int ground = 0;  // 3n
    std::vector<std::array<int, 3>> triples;

    void validate() const {
        if (ground < 3 || ground % 3 != 0) throw InvalidInput("x3c: ground size must be a positive multiple of 3");
        for (const auto& t : triples) {
            if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2]) throw InvalidInput("x3c: triple with repeated element");
            for (int e : t)
                if (e < 0 || e >= ground) throw InvalidInput("x3c: element out of range");
        }
    }

    bool is_exact_cover(const std::vector<int>& chosen) const {
        std::vector<int> hits(static_cast<std::size_t>(ground), 0);
        for (int j : chosen) {
            if (j < 0 || j >= static_cast<int>(triples.size())) return false;
            for (int e : triples[static_cast<std::size_t>(j)]) ++hits[static_cast<std::size_t>(e)];
        }
        for (int h : hits)
            if (h != 1) return false;
        return true;
    }
};

// Instance text: line 1 holds "3n m", then m lines of three 1-based
// element indices.
inline X3CInstance x3c_parse(const std::string& text) {
    std::istringstream in(text);
    long ground, m;
    if (!(in >> ground >> m)) throw InvalidInput("x3c: missing '3n m' header");
    if (m < 0) throw InvalidInput("x3c: negative set count");
    X3CInstance inst;
    inst.ground = static_cast<int>(ground);
    for (long j = 0; j < m; ++j) {
        long a, b, c;
        if (!(in >> a >> b >> c)) throw InvalidInput("x3c: expected " + std::to_string(m) + " triples");
        inst.triples.push_back({static_cast<int>(a - 1), static_cast<int>(b - 1), static_cast<int>(c - 1)});
    }
    inst.validate();
    return inst;
}

inline std::string x3c_format(const X3CInstance& inst) {
    std::ostringstream out;
    out << inst.ground << ' ' << inst.triples.size() << '\n';
    for (const auto& t : inst.triples) out << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << '\n';
    return out.str();
}

// Name <-> index bijection of the reduction graph.  Layout: the 3n element
// vertices first, then one 9-vertex block per triple: its three connector
// vertices (ascending element order), the set vertex, and the ring a..e.
struct GadgetMap {
    int ground = 0;
    int m = 0;
    std::vector<std::string> names;          // vertex id -> name
    std::map<std::string, int> index;        // name -> vertex id

    int element(int i) const { return i; }
    int block(int j) const { return ground + 9 * j; }
    int connector(int j, int slot) const { return block(j) + slot; }  // slot 0..2
    int set_vertex(int j) const { return block(j) + 3; }
    int ring(int j, int slot) const { return block(j) + 4 + slot; }   // slot 0..4 = a..e

    VertexSet ring_cycle(int j) const {
        VertexSet s;
        s.add(set_vertex(j));
        for (int t = 0; t < 5; ++t) s.add(ring(j, t));
        return s;
    }
};

struct Gadget {
    Graph graph;
    GadgetMap map;
};

// Element vertices x_i attach through per-triple connectors y_ij to the set
// vertex S_j, which also closes a six-cycle S_j a_j b_j c_j d_j e_j.
inline Gadget build_gadget(const X3CInstance& inst) {
    inst.validate();
    int m = static_cast<int>(inst.triples.size());
    int total = inst.ground + 9 * m;
    if (total > Graph::max_vertices)
        throw CapacityExceeded("build_gadget: " + std::to_string(total) + " vertices exceed 64");

    Gadget out;
    out.map.ground = inst.ground;
    out.map.m = m;
    out.graph = Graph(total);
    auto& names = out.map.names;
    names.resize(static_cast<std::size_t>(total));
    for (int i = 0; i < inst.ground; ++i) names[static_cast<std::size_t>(i)] = "x" + std::to_string(i + 1);

    static const char* ring_letters = "abcde";
    for (int j = 0; j < m; ++j) {
        std::array<int, 3> t = inst.triples[static_cast<std::size_t>(j)];
        std::sort(t.begin(), t.end());
        int s = out.map.set_vertex(j);
        names[static_cast<std::size_t>(s)] = "S" + std::to_string(j + 1);
        for (int slot = 0; slot < 3; ++slot) {
            int y = out.map.connector(j, slot);
            names[static_cast<std::size_t>(y)] =
                "y" + std::to_string(t[static_cast<std::size_t>(slot)] + 1) + "_" + std::to_string(j + 1);
            out.graph.add_edge(t[static_cast<std::size_t>(slot)], y);
            out.graph.add_edge(y, s);
        }
        for (int slot = 0; slot < 5; ++slot)
            names[static_cast<std::size_t>(out.map.ring(j, slot))] =
                std::string(1, ring_letters[slot]) + std::to_string(j + 1);
        out.graph.add_edge(s, out.map.ring(j, 0));
        for (int slot = 0; slot + 1 < 5; ++slot) out.graph.add_edge(out.map.ring(j, slot), out.map.ring(j, slot + 1));
        out.graph.add_edge(out.map.ring(j, 4), s);
    }
    for (int v = 0; v < total; ++v) out.map.index[names[static_cast<std::size_t>(v)]] = v;

    if (!is_bipartite(out.graph)) throw InternalContract("build_gadget: construction is not bipartite");
    return out;
}

// Translates an exact cover into an OLD_oind set of the gadget: covered
// triples contribute their elements, connectors and the ring four-set
// {a,b,d,e}; uncovered triples keep their set vertex plus {a,c,d}.
inline VertexSet cover_to_set(const X3CInstance& inst, const Gadget& gadget, const std::vector<int>& cover) {
    inst.validate();
    if (!inst.is_exact_cover(cover)) throw NotExactCover("cover_to_set: chosen triples are not an exact cover");
    std::set<int> chosen(cover.begin(), cover.end());
    VertexSet d;
    for (int i = 0; i < inst.ground; ++i) d.add(gadget.map.element(i));
    for (int j = 0; j < gadget.map.m; ++j) {
        if (chosen.count(j)) {
            for (int slot = 0; slot < 3; ++slot) d.add(gadget.map.connector(j, slot));
            d.add(gadget.map.ring(j, 0));  // a
            d.add(gadget.map.ring(j, 1));  // b
            d.add(gadget.map.ring(j, 3));  // d
            d.add(gadget.map.ring(j, 4));  // e
        } else {
            d.add(gadget.map.set_vertex(j));
            d.add(gadget.map.ring(j, 0));  // a
            d.add(gadget.map.ring(j, 2));  // c
            d.add(gadget.map.ring(j, 3));  // d
        }
    }
    Verdict check = verify_oldoind(gadget.graph, d);
    if (!check.valid) throw InternalContract("cover_to_set: built set failed verification: " + check.describe());
    return d;
}

// The reverse direction: the uncovered set vertices of a valid OLD_oind set
// name an exact cover.
inline std::vector<int> set_to_cover(const X3CInstance& inst, const Gadget& gadget, VertexSet d) {
    inst.validate();
    Verdict check = verify_oldoind(gadget.graph, d);
    if (!check.valid) throw InvalidInput("set_to_cover: set is not an OLD_oind set of the gadget");
    std::vector<int> cover;
    for (int j = 0; j < gadget.map.m; ++j)
        if (!d.contains(gadget.map.set_vertex(j))) cover.push_back(j);
    if (!inst.is_exact_cover(cover))
        throw InternalContract("set_to_cover: extracted triples are not an exact cover");
    return cover;
}

constexpr int x3c_bruteforce_max_sets = 24;

// Exhaustive exact-cover search; the first solution in inclusion-order DFS
// is the lexicographically smallest index list.
inline std::optional<std::vector<int>> x3c_bruteforce(const X3CInstance& inst) {
    inst.validate();
    int m = static_cast<int>(inst.triples.size());
    if (m > x3c_bruteforce_max_sets)
        throw CapacityExceeded("x3c_bruteforce: more than " + std::to_string(x3c_bruteforce_max_sets) + " sets");

    std::vector<std::uint64_t> masks(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        std::uint64_t mask = 0;
        for (int e : inst.triples[static_cast<std::size_t>(j)]) mask |= std::uint64_t{1} << e;
        masks[static_cast<std::size_t>(j)] = mask;
    }
    std::vector<std::uint64_t> suffix(static_cast<std::size_t>(m + 1), 0);
    for (int j = m - 1; j >= 0; --j)
        suffix[static_cast<std::size_t>(j)] = suffix[static_cast<std::size_t>(j + 1)] | masks[static_cast<std::size_t>(j)];
    std::uint64_t all = (inst.ground >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << inst.ground) - 1);

    std::vector<int> chosen;
    std::optional<std::vector<int>> found;
    auto rec = [&](auto&& self, int idx, std::uint64_t covered) -> bool {
        if (covered == all) {
            found = chosen;
            return true;
        }
        if (idx == m) return false;
        if ((covered | suffix[static_cast<std::size_t>(idx)]) != all) return false;
        if (!(covered & masks[static_cast<std::size_t>(idx)])) {
            chosen.push_back(idx);
            if (self(self, idx + 1, covered | masks[static_cast<std::size_t>(idx)])) return true;
            chosen.pop_back();
        }
        return self(self, idx + 1, covered);
    };
    rec(rec, 0, 0);
    return found;
}

// Existence oracle specialized to gadgets: any valid set meets each
// six-cycle in one of three fixed patterns, which prunes the matching
// search hard enough for refutations at full gadget size.
inline SolveResult gadget_exists_oldoind(const Gadget& gadget, std::uint64_t node_budget = 400'000'000) {
    std::vector<std::array<std::uint64_t, 3>> patterns;
    std::vector<std::uint64_t> cycles;
    for (int j = 0; j < gadget.map.m; ++j) {
        std::uint64_t s = std::uint64_t{1} << gadget.map.set_vertex(j);
        std::uint64_t a = std::uint64_t{1} << gadget.map.ring(j, 0);
        std::uint64_t b = std::uint64_t{1} << gadget.map.ring(j, 1);
        std::uint64_t c = std::uint64_t{1} << gadget.map.ring(j, 2);
        std::uint64_t d = std::uint64_t{1} << gadget.map.ring(j, 3);
        std::uint64_t e = std::uint64_t{1} << gadget.map.ring(j, 4);
        patterns.push_back({s | a | c | d, s | b | c | e, a | b | d | e});
        cycles.push_back(s | a | b | c | d | e);
    }
    SolverOptions opts;
    opts.node_budget = node_budget;
    opts.extra_prune = [patterns, cycles](VertexSet in_set, VertexSet cannot_join) {
        for (std::size_t j = 0; j < cycles.size(); ++j) {
            std::uint64_t in_j = in_set.bits & cycles[j];
            std::uint64_t out_j = cannot_join.bits & cycles[j];
            bool any = false;
            for (std::uint64_t p : patterns[j])
                if ((in_j & ~p) == 0 && (out_j & p) == 0) {
                    any = true;
                    break;
                }
            if (!any) return false;
        }
        return true;
    };
    return exists_oldoind(gadget.graph, opts);
}

}  // namespace oldoind
