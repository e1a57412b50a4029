#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace oldoind {

// ---------------------------------------------------------------------------
// Errors

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidInput : Error {
    using Error::Error;
};

struct CapacityExceeded : Error {
    using Error::Error;
};

struct PreconditionViolated : Error {
    using Error::Error;
};

struct ClassMismatch : Error {
    using Error::Error;
};

// A construction produced something that fails its own verification step.
struct InternalContract : Error {
    using Error::Error;
};

// ---------------------------------------------------------------------------
// VertexSet: subset of [0, n) for some host graph, bitset semantics.

struct VertexSet {
    std::uint64_t bits = 0;

    VertexSet() = default;
    explicit VertexSet(std::uint64_t b) : bits(b) {}

    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }
    static VertexSet full(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
    }

    bool contains(int v) const { return (bits >> v) & 1u; }
    void add(int v) { bits |= std::uint64_t{1} << v; }
    void remove(int v) { bits &= ~(std::uint64_t{1} << v); }
    int count() const { return __builtin_popcountll(bits); }
    bool empty() const { return bits == 0; }

    int smallest() const { return bits ? __builtin_ctzll(bits) : -1; }

    std::vector<int> vertices() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (std::uint64_t b = bits; b;) {
            int v = __builtin_ctzll(b);
            out.push_back(v);
            b &= b - 1;
        }
        return out;
    }

    friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits & b.bits); }
    friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits | b.bits); }
    friend VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits & ~b.bits); }
    friend bool operator==(VertexSet a, VertexSet b) { return a.bits == b.bits; }
    friend bool operator!=(VertexSet a, VertexSet b) { return a.bits != b.bits; }
};

// Membership-order comparison: the set containing the smallest vertex on
// which the two sets differ is the smaller one.  For equal-size sets this
// matches lexicographic comparison of the sorted vertex lists.
inline bool vertex_set_less(VertexSet a, VertexSet b) {
    std::uint64_t diff = a.bits ^ b.bits;
    if (!diff) return false;
    return (a.bits >> __builtin_ctzll(diff)) & 1u;
}

// ---------------------------------------------------------------------------
// Graph: simple undirected graph on at most 64 vertices, one adjacency
// bitrow per vertex.  Immutable after construction by convention; all
// operations below are pure.

class Graph {
public:
    static constexpr int max_vertices = 64;

    Graph() = default;
    explicit Graph(int n) : n_(n) {
        if (n < 0 || n > max_vertices) throw CapacityExceeded("graph order out of range: " + std::to_string(n));
        rows_.fill(0);
    }

    int order() const { return n_; }

    bool adjacent(int u, int v) const { return (rows_[static_cast<std::size_t>(u)] >> v) & 1u; }

    VertexSet neighbors(int v) const { return VertexSet(rows_[static_cast<std::size_t>(v)]); }

    int degree(int v) const { return __builtin_popcountll(rows_[static_cast<std::size_t>(v)]); }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
        rows_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        rows_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }

    int edge_count() const {
        int twice = 0;
        for (int v = 0; v < n_; ++v) twice += degree(v);
        return twice / 2;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (std::uint64_t b = rows_[static_cast<std::size_t>(u)] >> (u + 1) << (u + 1); b; b &= b - 1)
                out.emplace_back(u, __builtin_ctzll(b));
        return out;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw InvalidInput("vertex out of range: " + std::to_string(v));
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        if (a.n_ != b.n_) return false;
        for (int v = 0; v < a.n_; ++v)
            if (a.rows_[static_cast<std::size_t>(v)] != b.rows_[static_cast<std::size_t>(v)]) return false;
        return true;
    }
    friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

private:
    int n_ = 0;
    std::array<std::uint64_t, max_vertices> rows_{};
};

inline void require_nonempty(const Graph& g, const char* op) {
    if (g.order() == 0) throw InvalidInput(std::string(op) + ": empty graph");
}

inline void check_subset(const Graph& g, VertexSet s, const char* what) {
    if (s.bits & ~VertexSet::full(g.order()).bits)
        throw InvalidInput(std::string(what) + ": vertex set exceeds graph order");
}

// ---------------------------------------------------------------------------
// Constructions

inline Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

inline Graph complement(const Graph& g) {
    int n = g.order();
    Graph h(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) h.add_edge(u, v);
    return h;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    if (a.order() + b.order() > Graph::max_vertices)
        throw CapacityExceeded("disjoint_union: combined order exceeds 64");
    Graph g(a.order() + b.order());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    int off = a.order();
    for (auto [u, v] : b.edges()) g.add_edge(u + off, v + off);
    return g;
}

inline Graph join(const Graph& a, const Graph& b) {
    Graph g = disjoint_union(a, b);
    for (int u = 0; u < a.order(); ++u)
        for (int v = 0; v < b.order(); ++v) g.add_edge(u, a.order() + v);
    return g;
}

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_new;  // size = host order, -1 for dropped vertices
    std::vector<int> to_old;  // size = new order, ascending
};

inline InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
    check_subset(g, s, "induced_subgraph");
    if (s.empty()) throw InvalidInput("induced_subgraph: empty vertex set");
    InducedSubgraph out;
    out.to_old = s.vertices();
    out.to_new.assign(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < out.to_old.size(); ++i)
        out.to_new[static_cast<std::size_t>(out.to_old[i])] = static_cast<int>(i);
    out.graph = Graph(static_cast<int>(out.to_old.size()));
    for (std::size_t i = 0; i < out.to_old.size(); ++i)
        for (std::size_t j = i + 1; j < out.to_old.size(); ++j)
            if (g.adjacent(out.to_old[i], out.to_old[j]))
                out.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

// Vertices 0..n-1 carry the original graph, n..2n-1 its complement; vertex
// v is matched with v+n.
inline Graph complementary_prism(const Graph& g) {
    int n = g.order();
    if (n > 32) throw CapacityExceeded("complementary_prism: order exceeds 32");
    require_nonempty(g, "complementary_prism");
    Graph p(2 * n);
    for (int u = 0; u < n; ++u) {
        p.add_edge(u, u + n);
        for (int v = u + 1; v < n; ++v) {
            if (g.adjacent(u, v))
                p.add_edge(u, v);
            else
                p.add_edge(u + n, v + n);
        }
    }
    return p;
}

// ---------------------------------------------------------------------------
// Connectivity, components, girth

inline VertexSet component_of(const Graph& g, int start, bool in_complement = false) {
    std::uint64_t all = VertexSet::full(g.order()).bits;
    std::uint64_t seen = std::uint64_t{1} << start;
    std::uint64_t frontier = seen;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t b = frontier; b; b &= b - 1) {
            int v = __builtin_ctzll(b);
            std::uint64_t nb = g.neighbors(v).bits;
            if (in_complement) nb = ~nb & all & ~(std::uint64_t{1} << v);
            next |= nb;
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return VertexSet(seen);
}

// Parts sorted by smallest vertex.  With in_complement set this yields the
// vertex sets of the anticomponents.
inline std::vector<VertexSet> components(const Graph& g, bool in_complement = false) {
    std::vector<VertexSet> parts;
    std::uint64_t left = VertexSet::full(g.order()).bits;
    while (left) {
        int v = __builtin_ctzll(left);
        VertexSet part = component_of(g, v, in_complement);
        parts.push_back(part);
        left &= ~part.bits;
    }
    return parts;
}

inline std::vector<VertexSet> anticomponents(const Graph& g) { return components(g, true); }

inline bool is_connected(const Graph& g) {
    if (g.order() == 0) return false;
    return component_of(g, 0).count() == g.order();
}

inline bool is_co_connected(const Graph& g) {
    if (g.order() == 0) return false;
    return component_of(g, 0, true).count() == g.order();
}

// Shortest cycle length via BFS from every vertex; nullopt for forests.
inline std::optional<int> girth(const Graph& g) {
    require_nonempty(g, "girth");
    int n = g.order();
    int best = -1;
    std::array<int, Graph::max_vertices> dist{};
    std::array<int, Graph::max_vertices> parent{};
    std::array<int, Graph::max_vertices> queue{};
    for (int s = 0; s < n; ++s) {
        for (int v = 0; v < n; ++v) dist[static_cast<std::size_t>(v)] = -1;
        int head = 0, tail = 0;
        dist[static_cast<std::size_t>(s)] = 0;
        parent[static_cast<std::size_t>(s)] = -1;
        queue[tail++] = s;
        while (head < tail) {
            int u = queue[head++];
            for (std::uint64_t b = g.neighbors(u).bits; b; b &= b - 1) {
                int w = __builtin_ctzll(b);
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                    parent[static_cast<std::size_t>(w)] = u;
                    queue[tail++] = w;
                } else if (w != parent[static_cast<std::size_t>(u)]) {
                    int len = dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(w)] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

// Universal vertices: adjacent to every other vertex.
inline std::vector<int> universal_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == g.order() - 1) out.push_back(v);
    return out;
}

inline bool is_bipartite(const Graph& g) {
    int n = g.order();
    std::array<int, Graph::max_vertices> color{};
    for (int v = 0; v < n; ++v) color[static_cast<std::size_t>(v)] = -1;
    std::array<int, Graph::max_vertices> queue{};
    for (int s = 0; s < n; ++s) {
        if (color[static_cast<std::size_t>(s)] >= 0) continue;
        color[static_cast<std::size_t>(s)] = 0;
        int head = 0, tail = 0;
        queue[tail++] = s;
        while (head < tail) {
            int u = queue[head++];
            for (std::uint64_t b = g.neighbors(u).bits; b; b &= b - 1) {
                int w = __builtin_ctzll(b);
                if (color[static_cast<std::size_t>(w)] < 0) {
                    color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(u)];
                    queue[tail++] = w;
                } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace oldoind
