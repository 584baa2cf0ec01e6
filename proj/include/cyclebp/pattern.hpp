#pragma once

#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "graph.hpp"
#include "graph6.hpp"

namespace cyclebp {

namespace detail {

inline bool mask_get(const std::vector<uint64_t>& m, int i) { return (m[i / 64] >> (i % 64)) & 1u; }
inline void mask_set(std::vector<uint64_t>& m, int i) { m[i / 64] |= uint64_t{1} << (i % 64); }
inline void mask_clear(std::vector<uint64_t>& m, int i) { m[i / 64] &= ~(uint64_t{1} << (i % 64)); }

}  // namespace detail

/// The rule H of the bootstrap process: a single cycle, a disjoint union of
/// cycles (lengths sorted descending), or a generic small graph.
struct Pattern {
    enum class Kind { Cycle, CycleUnion, Generic };

    Kind kind;
    std::vector<int> lengths;  // Cycle: {k}; CycleUnion: k_1 >= ... >= k_s
    Graph graph;               // Generic only

    static constexpr int kGenericVertexBound = 12;

    static Pattern cycle(int k) {
        if (k < 3) throw std::invalid_argument("Pattern: cycle length must be >= 3");
        return Pattern{Kind::Cycle, {k}, Graph()};
    }

    static Pattern cycle_union(std::vector<int> ks) {
        if (ks.empty()) throw std::invalid_argument("Pattern: empty cycle union");
        for (int k : ks)
            if (k < 3) throw std::invalid_argument("Pattern: cycle length must be >= 3");
        std::sort(ks.begin(), ks.end(), std::greater<int>());
        if (ks.size() == 1) return cycle(ks[0]);
        return Pattern{Kind::CycleUnion, std::move(ks), Graph()};
    }

    static Pattern generic(Graph h, int vertex_bound = kGenericVertexBound) {
        if (h.vertex_count() > vertex_bound)
            throw std::invalid_argument("Pattern: generic graph exceeds vertex bound");
        for (int v = 0; v < h.vertex_count(); ++v)
            if (h.degree(v) == 0)
                throw std::invalid_argument("Pattern: generic graph has an isolated vertex");
        return Pattern{Kind::Generic, {}, std::move(h)};
    }

    /// The rule as a concrete graph.
    Graph as_graph() const {
        if (kind == Kind::Generic) return graph;
        int total = std::accumulate(lengths.begin(), lengths.end(), 0);
        Graph g(total);
        int off = 0;
        for (int k : lengths) {
            for (int i = 0; i < k; ++i) g.add_edge(off + i, off + (i + 1) % k);
            off += k;
        }
        return g;
    }

    std::string to_string() const {
        std::ostringstream out;
        switch (kind) {
            case Kind::Cycle:
                out << "cycle:" << lengths[0];
                break;
            case Kind::CycleUnion:
                out << "union:";
                for (size_t i = 0; i < lengths.size(); ++i) out << (i ? "," : "") << lengths[i];
                break;
            case Kind::Generic:
                out << "generic:" << graph6_encode(graph);
                break;
        }
        return out.str();
    }

    /// Parses "cycle:5", "union:5,3" or "generic:<graph6>".
    static Pattern parse(const std::string& spec) {
        auto colon = spec.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("Pattern: missing ':' in spec");
        std::string name = spec.substr(0, colon), rest = spec.substr(colon + 1);
        if (name == "cycle") return cycle(std::stoi(rest));
        if (name == "union") {
            std::vector<int> ks;
            std::istringstream in(rest);
            std::string item;
            while (std::getline(in, item, ',')) ks.push_back(std::stoi(item));
            return cycle_union(std::move(ks));
        }
        if (name == "generic") return generic(graph6_decode(rest));
        throw std::invalid_argument("Pattern: unknown rule kind '" + name + "'");
    }
};

namespace detail {

/// Parity-layered BFS tables from a fixed target; used to prune the
/// exact-length path search. A walk of length L from x to the target exists
/// iff dist[L mod 2][x] <= L, which is necessary for a simple path.
struct PathPruner {
    std::array<std::vector<int>, 2> dist;

    explicit PathPruner(const Graph& g, int target) : dist(parity_distances(g, target)) {}

    bool feasible(int from, int remaining) const {
        int d = dist[remaining % 2][from];
        return d >= 0 && d <= remaining;
    }
};

inline bool exact_path_dfs(const Graph& g, int cur, int target, int remaining,
                           std::vector<uint64_t>& visited, const PathPruner& pruner) {
    bool found = false;
    g.for_each_neighbor(cur, [&](int w) {
        if (found) return;
        if (w == target) {
            if (remaining == 1) found = true;
            return;
        }
        if (remaining == 1 || mask_get(visited, w)) return;
        if (!pruner.feasible(w, remaining - 1)) return;
        mask_set(visited, w);
        if (exact_path_dfs(g, w, target, remaining - 1, visited, pruner)) found = true;
        mask_clear(visited, w);
    });
    return found;
}

}  // namespace detail

/// True iff a simple path with exactly length edges joins u and v in g.
inline bool exists_path_of_exact_length(const Graph& g, int u, int v, int length) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw std::invalid_argument("exists_path_of_exact_length: u == v");
    if (length < 1 || length > Pattern::kGenericVertexBound)
        throw std::invalid_argument("exists_path_of_exact_length: length out of supported range");
    detail::PathPruner pruner(g, v);
    if (!pruner.feasible(u, length)) return false;
    std::vector<uint64_t> visited(g.words_per_row(), 0);
    detail::mask_set(visited, u);
    return detail::exact_path_dfs(g, u, v, length, visited, pruner);
}

namespace detail {

/// Enumerates simple u-v paths of exactly `remaining` further edges,
/// invoking sink on the visited mask (which includes both endpoints) for
/// each; stops as soon as sink returns true.
template <class Sink>
inline bool enumerate_exact_paths(const Graph& g, int cur, int target, int remaining,
                                  std::vector<uint64_t>& visited, const PathPruner& pruner,
                                  Sink&& sink) {
    bool done = false;
    g.for_each_neighbor(cur, [&](int w) {
        if (done) return;
        if (w == target) {
            if (remaining == 1) {
                mask_set(visited, w);
                done = sink(visited);
                mask_clear(visited, w);
            }
            return;
        }
        if (remaining == 1 || mask_get(visited, w)) return;
        if (!pruner.feasible(w, remaining - 1)) return;
        mask_set(visited, w);
        if (enumerate_exact_paths(g, w, target, remaining - 1, visited, pruner, sink)) done = true;
        mask_clear(visited, w);
    });
    return done;
}

/// Finds a simple cycle of length `len` in g avoiding `forbidden`, with all
/// cycle vertices >= start and start on the cycle; extends `forbidden` with
/// the cycle and recurses into `rest`. Lengths are searched largest-first.
inline bool find_disjoint_cycles(const Graph& g, const std::vector<int>& lens, size_t idx,
                                 std::vector<uint64_t>& forbidden);

inline bool cycle_dfs(const Graph& g, int start, int cur, int remaining, std::vector<uint64_t>& used,
                      const std::vector<int>& lens, size_t idx, std::vector<uint64_t>& forbidden) {
    bool done = false;
    g.for_each_neighbor(cur, [&](int w) {
        if (done) return;
        if (w == start) {
            if (remaining == 1) {
                // `used` currently holds this cycle's vertices; merge into
                // forbidden for the remaining lengths.
                std::vector<int> added;
                for (int v = 0; v < g.vertex_count(); ++v)
                    if (mask_get(used, v) && !mask_get(forbidden, v)) {
                        mask_set(forbidden, v);
                        added.push_back(v);
                    }
                if (find_disjoint_cycles(g, lens, idx + 1, forbidden)) done = true;
                for (int v : added) mask_clear(forbidden, v);
            }
            return;
        }
        if (remaining == 1 || w < start || mask_get(used, w) || mask_get(forbidden, w)) return;
        mask_set(used, w);
        if (cycle_dfs(g, start, w, remaining - 1, used, lens, idx, forbidden)) done = true;
        mask_clear(used, w);
    });
    return done;
}

inline bool find_disjoint_cycles(const Graph& g, const std::vector<int>& lens, size_t idx,
                                 std::vector<uint64_t>& forbidden) {
    if (idx == lens.size()) return true;
    int len = lens[idx];
    std::vector<uint64_t> used(g.words_per_row(), 0);
    for (int start = 0; start < g.vertex_count(); ++start) {
        if (mask_get(forbidden, start)) continue;
        mask_set(used, start);
        bool found = cycle_dfs(g, start, start, len, used, lens, idx, forbidden);
        mask_clear(used, start);
        if (found) return true;
    }
    return false;
}

/// Backtracking search for an injective homomorphism of `pat` into g that
/// respects the pinned assignments. `order` lists pattern vertices, pinned
/// ones first. Invokes sink() per embedding; stops when sink returns true.
template <class Sink>
inline bool embed_dfs(const Graph& pat, const Graph& g, const std::vector<int>& order, size_t pos,
                      std::vector<int>& image, std::vector<uint64_t>& used, Sink&& sink) {
    if (pos == order.size()) return sink(image);
    int p = order[pos];
    // Candidates: neighbours of a mapped pattern-neighbour when one exists,
    // otherwise all unused host vertices.
    int anchor = -1;
    pat.for_each_neighbor(p, [&](int q) {
        if (anchor < 0 && image[q] >= 0) anchor = q;
    });
    bool done = false;
    auto try_host = [&](int h) {
        if (done || mask_get(used, h)) return;
        bool ok = true;
        pat.for_each_neighbor(p, [&](int q) {
            if (ok && image[q] >= 0 && !g.has_edge(h, image[q])) ok = false;
        });
        if (!ok) return;
        image[p] = h;
        mask_set(used, h);
        if (embed_dfs(pat, g, order, pos + 1, image, used, sink)) done = true;
        mask_clear(used, h);
        image[p] = -1;
    };
    if (anchor >= 0) {
        g.for_each_neighbor(image[anchor], try_host);
    } else {
        for (int h = 0; h < g.vertex_count() && !done; ++h) try_host(h);
    }
    return done;
}

/// Pattern-vertex order for embedding: pinned vertices first, then greedily
/// a vertex adjacent to the ordered prefix whenever one exists.
inline std::vector<int> embedding_order(const Graph& pat, std::vector<int> pinned) {
    int n = pat.vertex_count();
    std::vector<bool> placed(n, false);
    std::vector<int> order = pinned;
    for (int v : pinned) placed[v] = true;
    while (static_cast<int>(order.size()) < n) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (placed[v]) continue;
            bool attached = false;
            pat.for_each_neighbor(v, [&](int w) {
                if (placed[w]) attached = true;
            });
            if (attached) {
                best = v;
                break;
            }
            if (best < 0) best = v;
        }
        placed[best] = true;
        order.push_back(best);
    }
    return order;
}

}  // namespace detail

/// Number of embeddings (injective homomorphisms) of pat into g.
inline long long count_embeddings(const Graph& pat, const Graph& g) {
    if (pat.vertex_count() == 0) return 1;
    if (pat.vertex_count() > g.vertex_count()) return 0;
    auto order = detail::embedding_order(pat, {});
    std::vector<int> image(pat.vertex_count(), -1);
    std::vector<uint64_t> used(g.words_per_row(), 0);
    long long count = 0;
    detail::embed_dfs(pat, g, order, 0, image, used, [&](const std::vector<int>&) {
        ++count;
        return false;
    });
    return count;
}

/// Number of unlabeled copies of H in g: embeddings divided by |Aut(H)|.
inline long long count_copies(const Graph& g, const Pattern& h, int max_host_vertices = 16) {
    if (g.vertex_count() > max_host_vertices)
        throw std::invalid_argument("count_copies: host exceeds size guard");
    Graph pat = h.as_graph();
    long long aut = count_embeddings(pat, pat);
    return count_embeddings(pat, g) / aut;
}

namespace detail {

/// True iff adding the non-edge uv creates a new copy of the rule using uv.
inline bool pair_closes(const Graph& g, const Pattern& h, int u, int v,
                        const std::vector<PathPruner>& pruners) {
    switch (h.kind) {
        case Pattern::Kind::Cycle: {
            int len = h.lengths[0] - 1;
            if (!pruners[v].feasible(u, len)) return false;
            std::vector<uint64_t> visited(g.words_per_row(), 0);
            mask_set(visited, u);
            return exact_path_dfs(g, u, v, len, visited, pruners[v]);
        }
        case Pattern::Kind::CycleUnion: {
            int prev = -1;
            for (size_t j = 0; j < h.lengths.size(); ++j) {
                int kj = h.lengths[j];
                if (kj == prev) continue;  // same length, same outcome
                prev = kj;
                if (!pruners[v].feasible(u, kj - 1)) continue;
                std::vector<int> rest;
                for (size_t t = 0; t < h.lengths.size(); ++t)
                    if (t != j) rest.push_back(h.lengths[t]);
                std::vector<uint64_t> visited(g.words_per_row(), 0);
                mask_set(visited, u);
                bool found = enumerate_exact_paths(
                    g, u, v, kj - 1, visited, pruners[v], [&](std::vector<uint64_t>& pathmask) {
                        return find_disjoint_cycles(g, rest, 0, pathmask);
                    });
                if (found) return true;
            }
            return false;
        }
        case Pattern::Kind::Generic: {
            const Graph& pat = h.graph;
            // Host adjacency must include uv itself while the copy is probed.
            Graph gp = g;
            gp.add_edge(u, v);
            std::vector<int> image(pat.vertex_count(), -1);
            std::vector<uint64_t> used(gp.words_per_row(), 0);
            for (const auto& pe : pat.edges()) {
                for (int flip = 0; flip < 2; ++flip) {
                    int a = flip ? pe.v : pe.u, b = flip ? pe.u : pe.v;
                    auto order = embedding_order(pat, {a, b});
                    image.assign(pat.vertex_count(), -1);
                    image[a] = u;
                    image[b] = v;
                    std::fill(used.begin(), used.end(), 0);
                    mask_set(used, u);
                    mask_set(used, v);
                    bool ok = true;
                    pat.for_each_neighbor(a, [&](int q) {
                        if (ok && image[q] >= 0 && !gp.has_edge(u, image[q])) ok = false;
                    });
                    pat.for_each_neighbor(b, [&](int q) {
                        if (ok && image[q] >= 0 && !gp.has_edge(v, image[q])) ok = false;
                    });
                    if (!ok) continue;
                    if (embed_dfs(pat, gp, order, 2, image, used,
                                  [](const std::vector<int>&) { return true; }))
                        return true;
                }
            }
            return false;
        }
    }
    return false;
}

}  // namespace detail

/// All non-edges whose addition creates a new copy of the rule, in ascending
/// lexicographic order.
inline std::vector<VertexPair> closing_edges(const Graph& g, const Pattern& h) {
    std::vector<VertexPair> out;
    int n = g.vertex_count();
    if (h.kind == Pattern::Kind::Cycle && h.lengths[0] == 3) {
        // Triangle rule: uv closes iff u and v share a neighbour.
        int words = g.words_per_row();
        for (int u = 0; u < n; ++u) {
            const uint64_t* ru = g.row(u);
            for (int v = u + 1; v < n; ++v) {
                if (g.has_edge(u, v)) continue;
                const uint64_t* rv = g.row(v);
                for (int w = 0; w < words; ++w)
                    if (ru[w] & rv[w]) {
                        out.emplace_back(u, v);
                        break;
                    }
            }
        }
        return out;
    }
    std::vector<detail::PathPruner> pruners;
    pruners.reserve(n);
    for (int v = 0; v < n; ++v) pruners.emplace_back(g, v);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v) && detail::pair_closes(g, h, u, v, pruners)) out.emplace_back(u, v);
    return out;
}

}  // namespace cyclebp
