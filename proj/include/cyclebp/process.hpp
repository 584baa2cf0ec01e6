#pragma once

#include <map>

#include "json.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "pattern.hpp"

namespace cyclebp {

/// Full history of one bootstrap run. Only per-round deltas are stored;
/// intermediate graphs are reconstructed on demand.
struct ProcessTrace {
    Graph initial;
    Pattern rule;
    std::vector<std::vector<VertexPair>> rounds;  // rounds[i-1] = E(G_i) \ E(G_{i-1})
    int tau = 0;
    Graph final_graph;

    /// Round at which e first appears: 0 for initial edges, nullopt if e is
    /// not in the final graph.
    std::optional<int> birth_time(const VertexPair& e) const {
        initial.check_vertex(e.u);
        initial.check_vertex(e.v);
        if (initial.has_edge(e.u, e.v)) return 0;
        for (size_t i = 0; i < rounds.size(); ++i)
            for (const auto& f : rounds[i])
                if (f == e) return static_cast<int>(i) + 1;
        return std::nullopt;
    }

    /// The graph G_i.
    Graph at(int i) const {
        Graph g = initial;
        for (int t = 0; t < i && t < static_cast<int>(rounds.size()); ++t)
            for (const auto& e : rounds[t]) g.add_edge(e.u, e.v);
        return g;
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["n"] = initial.vertex_count();
        j["rule"] = rule.to_string();
        j["tau"] = tau;
        nlohmann::ordered_json rs = nlohmann::ordered_json::array();
        for (const auto& round : rounds) {
            nlohmann::ordered_json r = nlohmann::ordered_json::array();
            for (const auto& e : round) r.push_back({e.u, e.v});
            rs.push_back(std::move(r));
        }
        j["rounds"] = std::move(rs);
        j["initial"] = graph6_encode(initial);
        j["final"] = graph6_encode(final_graph);
        return j;
    }
};

namespace detail {

/// Stability shortcut for even cycle rules on bipartite starting graphs:
/// once every within-component cross pair is present, no odd path exists
/// between any remaining non-adjacent pair.
inline bool bipartite_cross_complete(const Graph& g, const std::vector<int>& side) {
    for (const auto& comp : components(g)) {
        long long x = 0, y = 0, edges = 0;
        for (int v : comp) (side[v] == 0 ? x : y)++;
        for (int v : comp) edges += g.degree(v);
        if (edges / 2 != x * y) return false;
    }
    return true;
}

}  // namespace detail

/// Runs the bootstrap process to stabilisation. All closing edges of
/// G_{i-1} are added simultaneously; the empty probe round is not stored.
inline ProcessTrace run(const Graph& g, const Pattern& h, long long max_rounds = -1) {
    long long n = g.vertex_count();
    if (max_rounds < 0) max_rounds = std::max<long long>(n * n, 1);
    if (max_rounds < 1) throw std::invalid_argument("run: max_rounds must be >= 1");

    bool even_cycle = h.kind == Pattern::Kind::Cycle && h.lengths[0] % 2 == 0;
    Bipartition bip = even_cycle ? bipartition(g) : Bipartition{false, {}};
    bool track_bipartite = even_cycle && bip.bipartite;

    ProcessTrace trace{g, h, {}, 0, g};
    long long max_edges = n * (n - 1) / 2;
    while (true) {
        if (trace.final_graph.edge_count() == max_edges) break;
        if (track_bipartite && detail::bipartite_cross_complete(trace.final_graph, bip.side)) break;
        auto added = closing_edges(trace.final_graph, h);
        if (added.empty()) break;
        if (static_cast<long long>(trace.rounds.size()) >= max_rounds)
            throw std::runtime_error("run: round bound exhausted before stabilisation");
        for (const auto& e : added) trace.final_graph.add_edge(e.u, e.v);
        trace.rounds.push_back(std::move(added));
    }
    trace.tau = static_cast<int>(trace.rounds.size());
    return trace;
}

inline int tau(const Graph& g, const Pattern& h, long long max_rounds = -1) {
    return run(g, h, max_rounds).tau;
}

/// The sets D_i of the cycle process on the path with nprime vertices:
/// differences d such that every vertex pair at difference d is an edge of
/// the round-i graph. Returns D_0 .. D_upto.
inline std::vector<std::vector<int>> path_difference_sets(int nprime, int k, int upto) {
    if (nprime < 2) throw std::invalid_argument("path_difference_sets: need nprime >= 2");
    Graph p(nprime);
    for (int i = 0; i + 1 < nprime; ++i) p.add_edge(i, i + 1);
    ProcessTrace trace = run(p, Pattern::cycle(k));
    std::vector<std::vector<int>> result;
    Graph g = trace.initial;
    int round = 0;
    for (int i = 0; i <= upto; ++i) {
        while (round < i && round < static_cast<int>(trace.rounds.size())) {
            for (const auto& e : trace.rounds[round]) g.add_edge(e.u, e.v);
            ++round;
        }
        std::vector<int> di;
        for (int d = 1; d < nprime; ++d) {
            bool all = true;
            for (int x = 0; x + d < nprime && all; ++x)
                if (!g.has_edge(x, x + d)) all = false;
            if (all) di.push_back(d);
        }
        result.push_back(std::move(di));
    }
    return result;
}

}  // namespace cyclebp
