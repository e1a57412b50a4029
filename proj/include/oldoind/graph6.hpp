#pragma once

#include <cstddef>
#include <sstream>
#include <string>

#include "oldoind/graph.hpp"

namespace oldoind {

struct ParseError : Error {
    std::size_t offset;
    ParseError(const std::string& msg, std::size_t off)
        : Error(msg + " (byte " + std::to_string(off) + ")"), offset(off) {}
};

// Standard graph6 line: 6-bit chunks offset by 63, upper triangle in
// column-major order, zero padding.  Orders up to 62 use the one-byte
// header, 63 and 64 the '~'-prefixed three-byte form.
inline std::string graph6_encode(const Graph& g) {
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0, nbits = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.adjacent(row, col) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

inline Graph graph6_decode(const std::string& line) {
    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= line.size()) throw ParseError("graph6: truncated input", pos);
        unsigned char c = static_cast<unsigned char>(line[pos]);
        if (c < 63 || c > 126) throw ParseError("graph6: byte out of range", pos);
        ++pos;
        return c - 63;
    };

    if (line.empty()) throw ParseError("graph6: empty line", 0);
    long n;
    if (static_cast<unsigned char>(line[0]) == 126) {
        ++pos;
        if (pos < line.size() && static_cast<unsigned char>(line[pos]) == 126)
            throw ParseError("graph6: order beyond supported range", pos);
        long a = next(), b = next(), c = next();
        n = (a << 12) | (b << 6) | c;
    } else {
        n = next();
    }
    if (n > Graph::max_vertices) throw CapacityExceeded("graph6: order " + std::to_string(n) + " exceeds 64");

    Graph g(static_cast<int>(n));
    int acc = 0, nbits = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            if (nbits == 0) {
                acc = next();
                nbits = 6;
            }
            if (acc & 0x20) g.add_edge(row, col);
            acc = (acc << 1) & 0x3f;
            --nbits;
        }
    }
    if (nbits > 0 && acc != 0) throw ParseError("graph6: nonzero padding bits", pos - 1);
    if (pos != line.size()) throw ParseError("graph6: trailing bytes", pos);
    return g;
}

// Edge-list text: first line "n m", then m lines "u v" with 0-based ids.
inline Graph edge_list_decode(const std::string& text) {
    std::istringstream in(text);
    long n = -1, m = -1;
    if (!(in >> n >> m)) throw InvalidInput("edge list: missing 'n m' header");
    if (n < 0 || n > Graph::max_vertices)
        throw CapacityExceeded("edge list: order " + std::to_string(n) + " out of range");
    if (m < 0) throw InvalidInput("edge list: negative edge count");
    Graph g(static_cast<int>(n));
    for (long i = 0; i < m; ++i) {
        long u, v;
        if (!(in >> u >> v)) throw InvalidInput("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        if (u < 0 || u >= n || v < 0 || v >= n) throw InvalidInput("edge list: endpoint out of range in edge " + std::to_string(i));
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    std::string rest;
    if (in >> rest) throw InvalidInput("edge list: trailing tokens");
    return g;
}

inline std::string edge_list_encode(const Graph& g) {
    std::ostringstream out;
    auto es = g.edges();
    out << g.order() << ' ' << es.size() << '\n';
    for (auto [u, v] : es) out << u << ' ' << v << '\n';
    return out.str();
}

// Auto-detection used by file-based front ends: a leading digit means an
// edge list, anything else is treated as graph6.
inline Graph parse_graph_text(const std::string& text) {
    std::size_t i = 0;
    while (i < text.size() && (text[i] == ' ' || text[i] == '\n' || text[i] == '\r' || text[i] == '\t')) ++i;
    if (i < text.size() && text[i] >= '0' && text[i] <= '9') return edge_list_decode(text.substr(i));
    std::size_t end = text.find_first_of("\r\n", i);
    if (end == std::string::npos) end = text.size();
    return graph6_decode(text.substr(i, end - i));
}

}  // namespace oldoind
