#pragma once

#include <functional>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "edgelab/graph.hpp"

namespace edgelab {

// graph6: upper-triangle adjacency bits in column order
// x(0,1), x(0,2), x(1,2), x(0,3), ..., packed 6 bits per printable byte
// (value + 63). Header-free variant only; ">>graph6<<" is never accepted.

inline std::string g6_encode(const Graph& g) {
    const int n = g.vertex_count();
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
        const VertexSet nbrs = g.neighbors(col);
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (nbrs.contains(row) ? 1 : 0);
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

inline Graph g6_decode(std::string_view s) {
    if (s.empty()) throw ParseError("graph6: empty string");
    for (char c : s)
        if (static_cast<unsigned char>(c) < 63 || static_cast<unsigned char>(c) > 126)
            throw ParseError("graph6: byte outside 63..126");

    std::size_t pos = 0;
    long long n;
    if (s[0] == 126) {
        if (s.size() < 4) throw ParseError("graph6: truncated order field");
        n = (static_cast<long long>(s[1] - 63) << 12) | ((s[2] - 63) << 6) | (s[3] - 63);
        if (n <= 62) throw ParseError("graph6: overlong order encoding");
        pos = 4;
    } else {
        n = s[0] - 63;
        pos = 1;
    }
    if (n > kMaxVertices) throw ParseError("graph6: more than 64 vertices");

    const long long bits = n * (n - 1) / 2;
    const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
    if (s.size() != pos + body) throw ParseError("graph6: wrong length");

    Graph g(static_cast<int>(n));
    long long idx = 0;
    int col = 1, row = 0;
    for (std::size_t i = pos; i < s.size(); ++i) {
        int group = s[i] - 63;
        for (int b = 5; b >= 0; --b, ++idx) {
            const int bit = (group >> b) & 1;
            if (idx >= bits) {
                if (bit) throw ParseError("graph6: nonzero padding");
                continue;
            }
            if (bit) g = g.with_edge(row, col);
            if (++row == col) {
                ++col;
                row = 0;
            }
        }
    }
    return g;
}

/// Calls `fn` for each nonempty line of a newline-delimited graph6 stream.
/// Returns the number of graphs read.
inline std::size_t g6_read_stream(std::istream& in, const std::function<void(const Graph&)>& fn) {
    std::size_t count = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        fn(g6_decode(line));
        ++count;
    }
    return count;
}

inline void g6_write_line(std::ostream& out, const Graph& g) { out << g6_encode(g) << '\n'; }

} // namespace edgelab
