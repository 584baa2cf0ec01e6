#pragma once

#include <random>

#include "graph.hpp"

namespace cyclebp {

inline Graph gnp(int n, double p, std::mt19937_64& rng) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

/// Joins the components of g with uniformly chosen inter-component edges
/// until it is connected.
inline void make_connected(Graph& g, std::mt19937_64& rng) {
    while (true) {
        auto comps = components(g);
        if (comps.size() <= 1) return;
        std::uniform_int_distribution<size_t> pick_comp(1, comps.size() - 1);
        const auto& a = comps[0];
        const auto& b = comps[pick_comp(rng)];
        int u = a[std::uniform_int_distribution<size_t>(0, a.size() - 1)(rng)];
        int v = b[std::uniform_int_distribution<size_t>(0, b.size() - 1)(rng)];
        g.add_edge(u, v);
    }
}

inline Graph connected_gnp(int n, double p, std::mt19937_64& rng) {
    Graph g = gnp(n, p, rng);
    make_connected(g, rng);
    return g;
}

/// Connected bipartite sample: balanced sides, cross edges with probability
/// p, components joined by cross edges only.
inline Graph connected_bipartite_gnp(int n, double p, std::mt19937_64& rng) {
    Graph g(n);
    int a = n / 2;
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    while (true) {
        auto comps = components(g);
        if (comps.size() <= 1) return g;
        // Pick one vertex per side from two different components.
        std::uniform_int_distribution<size_t> pick_comp(1, comps.size() - 1);
        const auto& ca = comps[0];
        const auto& cb = comps[pick_comp(rng)];
        std::vector<int> left, right;
        for (int v : ca)
            (v < a ? left : right).push_back(v);
        std::vector<int> oleft, oright;
        for (int v : cb)
            (v < a ? oleft : oright).push_back(v);
        if (!left.empty() && !oright.empty()) {
            int u = left[std::uniform_int_distribution<size_t>(0, left.size() - 1)(rng)];
            int v = oright[std::uniform_int_distribution<size_t>(0, oright.size() - 1)(rng)];
            g.add_edge(u, v);
        } else if (!right.empty() && !oleft.empty()) {
            int u = oleft[std::uniform_int_distribution<size_t>(0, oleft.size() - 1)(rng)];
            int v = right[std::uniform_int_distribution<size_t>(0, right.size() - 1)(rng)];
            g.add_edge(u, v);
        }
        // Singleton-side corner cases resolve on a later draw.
    }
}

}  // namespace cyclebp
