#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace cyclebp {

/// Unordered pair of vertices, normalised so that u < v.
struct VertexPair {
    int u;
    int v;

    VertexPair(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {
        if (a == b) throw std::invalid_argument("VertexPair: self-loop");
    }

    friend bool operator==(const VertexPair& a, const VertexPair& b) {
        return a.u == b.u && a.v == b.v;
    }
    friend bool operator!=(const VertexPair& a, const VertexPair& b) { return !(a == b); }
    friend bool operator<(const VertexPair& a, const VertexPair& b) {
        return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    }
};

/// Undirected graph on vertices 0..n-1 with a packed symmetric adjacency
/// bitmatrix. Rows are word-aligned so edge queries and neighbourhood
/// scans work on whole 64-bit words.
class Graph {
public:
    Graph() : n_(0), words_(0) {}

    explicit Graph(int n) : n_(n), words_((n + 63) / 64), bits_(static_cast<size_t>(n) * words_, 0) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    }

    static Graph from_edges(int n, const std::vector<VertexPair>& edges) {
        Graph g(n);
        for (const auto& e : edges) g.add_edge(e.u, e.v);
        return g;
    }

    int vertex_count() const { return n_; }
    int words_per_row() const { return words_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return false;
        return (bits_[row_offset(u) + v / 64] >> (v % 64)) & 1u;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Graph: self-loop");
        bits_[row_offset(u) + v / 64] |= uint64_t{1} << (v % 64);
        bits_[row_offset(v) + u / 64] |= uint64_t{1} << (u % 64);
    }

    void remove_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return;
        bits_[row_offset(u) + v / 64] &= ~(uint64_t{1} << (v % 64));
        bits_[row_offset(v) + u / 64] &= ~(uint64_t{1} << (u % 64));
    }

    const uint64_t* row(int u) const { return bits_.data() + row_offset(u); }

    int degree(int u) const {
        const uint64_t* r = row(u);
        int d = 0;
        for (int w = 0; w < words_; ++w) d += __builtin_popcountll(r[w]);
        return d;
    }

    int edge_count() const {
        long long total = 0;
        for (int u = 0; u < n_; ++u) total += degree(u);
        return static_cast<int>(total / 2);
    }

    template <class F>
    void for_each_neighbor(int u, F&& f) const {
        const uint64_t* r = row(u);
        for (int w = 0; w < words_; ++w) {
            uint64_t bits = r[w];
            while (bits) {
                int b = __builtin_ctzll(bits);
                bits &= bits - 1;
                f(w * 64 + b);
            }
        }
    }

    std::vector<VertexPair> edges() const {
        std::vector<VertexPair> out;
        for (int u = 0; u < n_; ++u)
            for_each_neighbor(u, [&](int v) {
                if (u < v) out.emplace_back(u, v);
            });
        return out;
    }

    std::vector<VertexPair> non_edges() const {
        std::vector<VertexPair> out;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (!has_edge(u, v)) out.emplace_back(u, v);
        return out;
    }

    bool is_complete() const { return edge_count() == n_ * (n_ - 1) / 2; }

    /// True when g is a subgraph of *this on the same vertex set.
    bool contains(const Graph& g) const {
        if (g.n_ != n_) return false;
        for (size_t i = 0; i < bits_.size(); ++i)
            if (g.bits_[i] & ~bits_[i]) return false;
        return true;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }
    friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex out of range");
    }

private:
    size_t row_offset(int u) const { return static_cast<size_t>(u) * words_; }

    int n_;
    int words_;
    std::vector<uint64_t> bits_;
};

/// BFS distances from src; -1 marks unreachable vertices.
inline std::vector<int> bfs_distances(const Graph& g, int src) {
    g.check_vertex(src);
    std::vector<int> dist(g.vertex_count(), -1);
    dist[src] = 0;
    std::vector<int> frontier{src}, next;
    int d = 0;
    while (!frontier.empty()) {
        ++d;
        next.clear();
        for (int u : frontier)
            g.for_each_neighbor(u, [&](int v) {
                if (dist[v] < 0) {
                    dist[v] = d;
                    next.push_back(v);
                }
            });
        frontier.swap(next);
    }
    return dist;
}

inline std::optional<int> distance(const Graph& g, int x, int y) {
    g.check_vertex(x);
    g.check_vertex(y);
    int d = bfs_distances(g, x)[y];
    if (d < 0) return std::nullopt;
    return d;
}

/// Shortest-walk lengths from src split by parity: result[0][v] is the
/// shortest even walk src->v, result[1][v] the shortest odd one (-1 if none).
/// BFS on the parity-doubled state graph (vertex, parity).
inline std::array<std::vector<int>, 2> parity_distances(const Graph& g, int src) {
    g.check_vertex(src);
    std::array<std::vector<int>, 2> dist{std::vector<int>(g.vertex_count(), -1),
                                         std::vector<int>(g.vertex_count(), -1)};
    dist[0][src] = 0;
    // A state (v, p) is first reached at distance d with p == d mod 2, so
    // the frontier only needs vertices.
    std::vector<int> frontier{src}, next;
    int d = 0;
    while (!frontier.empty()) {
        ++d;
        next.clear();
        int p = d % 2;
        for (int u : frontier)
            g.for_each_neighbor(u, [&](int v) {
                if (dist[p][v] < 0) {
                    dist[p][v] = d;
                    next.push_back(v);
                }
            });
        frontier.swap(next);
    }
    return dist;
}

/// Length of a shortest odd walk between x and y, or nullopt when no odd
/// walk exists (same side of a bipartite component, or distinct components).
inline std::optional<int> odd_distance(const Graph& g, int x, int y) {
    g.check_vertex(x);
    g.check_vertex(y);
    int d = parity_distances(g, x)[1][y];
    if (d < 0) return std::nullopt;
    return d;
}

struct Bipartition {
    bool bipartite;
    std::vector<int> side;  // 0/1 per vertex; consistent within each component
};

inline Bipartition bipartition(const Graph& g) {
    Bipartition result{true, std::vector<int>(g.vertex_count(), -1)};
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (result.side[s] >= 0) continue;
        result.side[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            g.for_each_neighbor(u, [&](int v) {
                if (result.side[v] < 0) {
                    result.side[v] = 1 - result.side[u];
                    q.push(v);
                } else if (result.side[v] == result.side[u]) {
                    result.bipartite = false;
                }
            });
            if (!result.bipartite) return result;
        }
    }
    return result;
}

/// Connected components in ascending order of least vertex.
inline std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(g.vertex_count(), false);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp{s};
        seen[s] = true;
        for (size_t i = 0; i < comp.size(); ++i)
            g.for_each_neighbor(comp[i], [&](int v) {
                if (!seen[v]) {
                    seen[v] = true;
                    comp.push_back(v);
                }
            });
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline bool is_connected(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    auto dist = bfs_distances(g, 0);
    return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

/// Induced subgraph on the given vertices (in the given order).
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    Graph h(static_cast<int>(vertices.size()));
    for (size_t i = 0; i < vertices.size(); ++i)
        for (size_t j = i + 1; j < vertices.size(); ++j)
            if (g.has_edge(vertices[i], vertices[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

/// External disjoint union; vertices of b are shifted past those of a.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.vertex_count() + b.vertex_count());
    for (const auto& e : a.edges()) g.add_edge(e.u, e.v);
    int off = a.vertex_count();
    for (const auto& e : b.edges()) g.add_edge(e.u + off, e.v + off);
    return g;
}

}  // namespace cyclebp
