#pragma once

#include <string>
#include <string_view>

#include "distspec/graph.hpp"

namespace distspec {

// graph6 text format, short form (n <= 62): one byte n+63, then the upper
// triangle bits in column order x(0,1), x(0,2), x(1,2), x(0,3), ... packed
// big-endian into 6-bit groups, each +63, zero-padded.

inline constexpr std::string_view kGraph6Header = ">>graph6<<";

inline Graph parse_graph6(std::string_view line) {
    std::size_t base = 0;
    if (line.substr(0, kGraph6Header.size()) == kGraph6Header) {
        line.remove_prefix(kGraph6Header.size());
        base = kGraph6Header.size();
    }
    if (line.empty()) throw parse_error("empty graph6 line", base);
    const unsigned char first = static_cast<unsigned char>(line[0]);
    if (first == 126) throw unsupported_error("graph6 long form (n > 62) not supported");
    if (first < 63 || first > 125) throw parse_error("invalid order byte", base);
    const int n = first - 63;
    if (n == 0) throw parse_error("graph6 order 0 not representable", base);

    Graph g(n);
    const long nbits = long(n) * (n - 1) / 2;
    const std::size_t want = std::size_t((nbits + 5) / 6);
    if (line.size() - 1 < want) throw parse_error("truncated graph6 payload", base + line.size());
    if (line.size() - 1 > want) throw parse_error("trailing bytes after graph6 payload", base + 1 + want);

    long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            const std::size_t byte_idx = 1 + std::size_t(bit / 6);
            const unsigned char c = static_cast<unsigned char>(line[byte_idx]);
            if (c < 63 || c > 126) throw parse_error("non-printable graph6 byte", base + byte_idx);
            const int group = c - 63;
            if ((group >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    }
    // padding bits must be zero
    if (nbits % 6 != 0 && want > 0) {
        const unsigned char c = static_cast<unsigned char>(line[want]);
        const int group = c - 63;
        const int pad = int(6 - nbits % 6);
        if (group & ((1 << pad) - 1)) throw parse_error("nonzero graph6 padding bits", base + want);
    }
    return g;
}

inline std::string to_graph6(const Graph& g) {
    if (g.n > 62) throw unsupported_error("graph6 short form requires n <= 62");
    std::string out;
    out.push_back(char(g.n + 63));
    int group = 0, filled = 0;
    for (int j = 1; j < g.n; ++j) {
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(char(group + 63));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(char((group << (6 - filled)) + 63));
    return out;
}

}  // namespace distspec
