#pragma once

#include <string>

#include "graph.hpp"

namespace cyclebp {

// graph6 text format: 6-bit groups offset by 63, upper triangle scanned
// column by column, big-endian within each group.

inline std::string graph6_encode(const Graph& g) {
    long long n = g.vertex_count();
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw std::invalid_argument("graph6_encode: graph too large");
    }
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

inline Graph graph6_decode(const std::string& text) {
    size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= text.size()) throw std::invalid_argument("graph6_decode: truncated input");
        int c = static_cast<unsigned char>(text[pos++]);
        if (c < 63 || c > 126) throw std::invalid_argument("graph6_decode: character out of range");
        return c - 63;
    };
    if (text.empty()) throw std::invalid_argument("graph6_decode: empty input");
    if (text[0] == '>') throw std::invalid_argument("graph6_decode: headers not supported");
    long long n;
    if (text[0] != '~') {
        n = next();
    } else {
        ++pos;
        if (pos < text.size() && text[pos] == '~')
            throw std::invalid_argument("graph6_decode: >258047 vertices not supported");
        n = next();
        n = (n << 6) | next();
        n = (n << 6) | next();
    }
    Graph g(static_cast<int>(n));
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            if (nbits == 0) {
                acc = next();
                nbits = 6;
            }
            if ((acc >> (nbits - 1)) & 1) g.add_edge(u, v);
            --nbits;
        }
    if (pos != text.size()) throw std::invalid_argument("graph6_decode: trailing characters");
    return g;
}

}  // namespace cyclebp
