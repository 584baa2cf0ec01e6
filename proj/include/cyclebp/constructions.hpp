#pragma once

#include <map>
#include <sstream>
#include <string>

#include "graph.hpp"
#include "numtheory.hpp"

namespace cyclebp {

/// A generated graph together with a name -> vertex map for the vertices
/// the construction singles out.
struct NamedGraph {
    Graph graph;
    std::map<std::string, int> labels;
};

inline NamedGraph path(int n) {
    if (n < 1) throw std::invalid_argument("path: need n >= 1");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return {std::move(g), {{"first", 0}, {"last", n - 1}}};
}

inline NamedGraph cycle(int k) {
    if (k < 3) throw std::invalid_argument("cycle: need k >= 3");
    Graph g(k);
    for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
    return {std::move(g), {}};
}

inline NamedGraph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete: need n >= 1");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return {std::move(g), {}};
}

/// K_{a,b} with the a-side on vertices 0..a-1.
inline NamedGraph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite: need positive sides");
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.add_edge(u, v);
    return {std::move(g), {}};
}

/// The triangle-capped path: triangle {v_0, w_0, x_1}, path x_1 ... x_{l-1},
/// and two leaves v_l, w_l sharing the neighbour x_{l-1}. Vertex layout:
/// v_0 = 0, w_0 = 1, x_j = j + 1, v_l = l + 1, w_l = l + 2.
inline NamedGraph path_triangle(int l) {
    if (l < 3) throw std::invalid_argument("path_triangle: need l >= 3");
    Graph g(l + 3);
    int v0 = 0, w0 = 1;
    auto x = [](int j) { return j + 1; };
    g.add_edge(v0, w0);
    g.add_edge(v0, x(1));
    g.add_edge(w0, x(1));
    for (int j = 1; j + 1 <= l - 1; ++j) g.add_edge(x(j), x(j + 1));
    int vl = l + 1, wl = l + 2;
    g.add_edge(x(l - 1), vl);
    g.add_edge(x(l - 1), wl);
    return {std::move(g), {{"v0", v0}, {"w0", w0}, {"v_ell", vl}, {"w_ell", wl}}};
}

/// K_{floor(k/2), ceil(k/2)} plus one edge zz' inside the larger partite
/// set. The larger side occupies vertices 0..ceil(k/2)-1; z = 0, z' = 1.
inline NamedGraph complete_bipartite_plus_edge(int k) {
    if (k < 3) throw std::invalid_argument("complete_bipartite_plus_edge: need k >= 3");
    int big = (k + 1) / 2, small = k / 2;
    NamedGraph named = complete_bipartite(big, small);
    named.graph.add_edge(0, 1);
    named.labels = {{"z", 0}, {"z_prime", 1}};
    return named;
}

/// C_k plus the chord {0, offset}.
inline NamedGraph cycle_with_chord(int k, int offset) {
    if (k < 4) throw std::invalid_argument("cycle_with_chord: need k >= 4");
    if (offset < 2 || offset > k / 2) throw std::invalid_argument("cycle_with_chord: invalid offset");
    NamedGraph named = cycle(k);
    named.graph.add_edge(0, offset);
    return named;
}

/// The starting graph and the last-born pair witnessing a running time of
/// exactly r: the path P_n with n = (k-1)^{r-1} - F(k-2,k) + 1 and pair
/// (0, n-1) for odd k, the triangle-capped path with its far pair for even k.
inline std::pair<NamedGraph, VertexPair> lower_bound_witness(int k, int r) {
    if (k < 3 || r < 1) throw std::invalid_argument("lower_bound_witness: bad parameters");
    if (k % 2 == 1) {
        long long n = ipow(k - 1, r - 1) - F_cycle(k) + 1;
        if (n < 3) throw std::invalid_argument("lower_bound_witness: degenerate parameters");
        NamedGraph g = path(static_cast<int>(n));
        return {std::move(g), VertexPair(0, static_cast<int>(n) - 1)};
    }
    long long l = predict_ell(k, r);
    if (l < 3) throw std::invalid_argument("lower_bound_witness: degenerate parameters");
    NamedGraph g = path_triangle(static_cast<int>(l));
    VertexPair e(g.labels.at("v_ell"), g.labels.at("w_ell"));
    return {std::move(g), e};
}

/// C_{k_2} u ... u C_{k_s} u P_{n - (k_2+...+k_s)}: the disjoint-cycles
/// lower-bound construction. Cycles come first in the vertex numbering.
inline NamedGraph cycle_union_witness(const std::vector<int>& ks, int n) {
    if (ks.size() < 2) throw std::invalid_argument("cycle_union_witness: need at least two lengths");
    std::vector<int> sorted = ks;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    int cycles_total = 0;
    for (size_t j = 1; j < sorted.size(); ++j) cycles_total += sorted[j];
    if (n < cycles_total + sorted[0])
        throw std::invalid_argument("cycle_union_witness: n too small");
    Graph g(n);
    int off = 0;
    for (size_t j = 1; j < sorted.size(); ++j) {
        int kj = sorted[j];
        for (int i = 0; i < kj; ++i) g.add_edge(off + i, off + (i + 1) % kj);
        off += kj;
    }
    for (int i = off; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return {std::move(g), {{"path_first", off}, {"path_last", n - 1}}};
}

/// Parses construction specs of the form name:params, e.g. "path:58",
/// "pdelta:13", "kbip:2,3", "chord:6,2", "unionwit:4,3,50".
inline NamedGraph construct_from_spec(const std::string& spec) {
    auto colon = spec.find(':');
    std::string name = colon == std::string::npos ? spec : spec.substr(0, colon);
    std::vector<int> args;
    if (colon != std::string::npos) {
        std::istringstream in(spec.substr(colon + 1));
        std::string item;
        while (std::getline(in, item, ',')) args.push_back(std::stoi(item));
    }
    auto want = [&](size_t c) {
        if (args.size() != c)
            throw std::invalid_argument("construction '" + name + "': wrong number of parameters");
    };
    if (name == "path") return want(1), path(args[0]);
    if (name == "cycle") return want(1), cycle(args[0]);
    if (name == "complete") return want(1), complete(args[0]);
    if (name == "kbip") return want(2), complete_bipartite(args[0], args[1]);
    if (name == "kbip_plus") return want(1), complete_bipartite_plus_edge(args[0]);
    if (name == "pdelta") return want(1), path_triangle(args[0]);
    if (name == "chord") return want(2), cycle_with_chord(args[0], args[1]);
    if (name == "unionwit") {
        if (args.size() < 3) throw std::invalid_argument("unionwit: need lengths and n");
        int n = args.back();
        args.pop_back();
        return cycle_union_witness(args, n);
    }
    throw std::invalid_argument("unknown construction '" + name + "'");
}

}  // namespace cyclebp
