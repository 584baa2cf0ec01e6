#pragma once

#include <cmath>
#include <fstream>
#include <mutex>
#include <thread>

#include "json.hpp"
#include "constructions.hpp"
#include "graph6.hpp"
#include "pattern.hpp"
#include "process.hpp"
#include "random_graphs.hpp"

namespace cyclebp {

struct SearchResult {
    int n = 0;
    std::string rule;
    int max_tau = -1;  // -1 flags "nothing enumerated"
    std::vector<std::string> argmax;
    long long enumerated = 0;
    std::string dedup_mode = "labeled";  // labeled | iso-reduced
    bool connected_only = false;

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["rule"] = rule;
        j["n"] = n;
        j["max_tau"] = max_tau;
        j["argmax"] = argmax;
        j["enumerated"] = enumerated;
        j["dedup_mode"] = dedup_mode;
        j["connected_only"] = connected_only;
        return j;
    }
};

namespace detail {

constexpr int kMaxArgmax = 16;

inline int pair_bit(int n, int u, int v) {  // u < v
    return u * n - u * (u + 1) / 2 + (v - u - 1);
}

inline Graph graph_from_mask(int n, uint64_t mask) {
    Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1) g.add_edge(u, v);
    return g;
}

inline uint64_t mask_from_graph(const Graph& g) {
    uint64_t mask = 0;
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.has_edge(u, v)) mask |= uint64_t{1} << pair_bit(n, u, v);
    return mask;
}

/// Minimum adjacency bitstring over all vertex permutations; exact
/// canonical form by brute force, intended for n <= 8.
inline uint64_t canonical_mask(int n, uint64_t mask) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    uint64_t best = mask;
    do {
        uint64_t m = 0;
        int bit = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++bit) {
                int pu = perm[u], pv = perm[v];
                if (pu > pv) std::swap(pu, pv);
                if ((mask >> pair_bit(n, pu, pv)) & 1) m |= uint64_t{1} << bit;
            }
        best = std::min(best, m);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

struct PartialMax {
    int max_tau = -1;
    std::vector<uint64_t> argmax;
    long long enumerated = 0;

    void offer(int t, uint64_t mask) {
        ++enumerated;
        if (t > max_tau) {
            max_tau = t;
            argmax.assign(1, mask);
        } else if (t == max_tau && static_cast<int>(argmax.size()) < kMaxArgmax) {
            argmax.push_back(mask);
        }
    }

    void merge(const PartialMax& other) {
        enumerated += other.enumerated;
        if (other.max_tau > max_tau) {
            max_tau = other.max_tau;
            argmax = other.argmax;
        } else if (other.max_tau == max_tau) {
            argmax.insert(argmax.end(), other.argmax.begin(), other.argmax.end());
            std::sort(argmax.begin(), argmax.end());
            if (static_cast<int>(argmax.size()) > kMaxArgmax) argmax.resize(kMaxArgmax);
        }
    }
};

inline PartialMax scan_masks(int n, const Pattern& rule, uint64_t begin, uint64_t end,
                             bool connected_only, bool dedup) {
    PartialMax acc;
    for (uint64_t mask = begin; mask < end; ++mask) {
        Graph g = graph_from_mask(n, mask);
        if (connected_only && !is_connected(g)) continue;
        if (dedup && canonical_mask(n, mask) != mask) continue;
        acc.offer(run(g, rule).tau, mask);
    }
    return acc;
}

}  // namespace detail

/// Exact maximum running time over every n-vertex starting graph by
/// exhaustive enumeration of labeled adjacency codes. With connected_only,
/// the maximum is taken over connected graphs on up to n vertices instead,
/// which is exact for cycle rules. With dedup, only canonical
/// representatives (minimum code over all relabelings) are processed.
inline SearchResult max_tau_exhaustive(int n, const Pattern& rule, bool connected_only = false,
                                       bool dedup = false, int workers = 0) {
    if (n < 1 || n > 8) throw std::invalid_argument("max_tau_exhaustive: size guard exceeded (n <= 8)");
    if (workers <= 0) workers = std::max(1u, std::thread::hardware_concurrency());

    auto scan_size = [&](int m) {
        uint64_t total = uint64_t{1} << (m * (m - 1) / 2);
        // Partition by the top bits of the code; deterministic merge.
        int parts = 1;
        while (parts < workers && static_cast<uint64_t>(parts) * 2 <= total) parts *= 2;
        uint64_t chunk = total / parts;
        std::vector<detail::PartialMax> results(parts);
        std::vector<std::thread> threads;
        for (int p = 0; p < parts; ++p)
            threads.emplace_back([&, p] {
                uint64_t b = p * chunk, e = p + 1 == parts ? total : b + chunk;
                results[p] = detail::scan_masks(m, rule, b, e, connected_only, dedup);
            });
        for (auto& t : threads) t.join();
        detail::PartialMax acc;
        for (auto& r : results) acc.merge(r);
        return acc;
    };

    detail::PartialMax acc;
    std::vector<std::pair<int, uint64_t>> best_masks;  // (m, mask) achieving max
    auto record = [&](int m, const detail::PartialMax& part) {
        acc.enumerated += part.enumerated;
        if (part.max_tau > acc.max_tau) {
            acc.max_tau = part.max_tau;
            best_masks.clear();
        }
        if (part.max_tau == acc.max_tau)
            for (uint64_t mask : part.argmax) best_masks.emplace_back(m, mask);
        if (static_cast<int>(best_masks.size()) > detail::kMaxArgmax)
            best_masks.resize(detail::kMaxArgmax);
    };
    if (connected_only) {
        for (int m = 1; m <= n; ++m) record(m, scan_size(m));
    } else {
        record(n, scan_size(n));
    }

    SearchResult result;
    result.n = n;
    result.rule = rule.to_string();
    result.max_tau = acc.max_tau;
    result.enumerated = acc.enumerated;
    result.dedup_mode = dedup ? "iso-reduced" : "labeled";
    result.connected_only = connected_only;
    for (auto [m, mask] : best_masks)
        result.argmax.push_back(graph6_encode(detail::graph_from_mask(m, mask)));
    return result;
}

/// Maximum running time over uniformly sampled starting graphs: G(n,p) at
/// sparse, near-critical and dense p. Reproducible for a fixed seed.
inline SearchResult max_tau_sampled(int n, const Pattern& rule, long long samples, uint64_t seed) {
    if (samples < 0) throw std::invalid_argument("max_tau_sampled: negative sample count");
    SearchResult result;
    result.n = n;
    result.rule = rule.to_string();
    result.dedup_mode = "labeled";
    std::mt19937_64 rng(seed);
    std::vector<double> ps{1.5 / n, 2.0 * std::log(std::max(n, 2)) / n, 0.5};
    for (auto& p : ps) p = std::min(p, 1.0);
    for (long long s = 0; s < samples; ++s) {
        Graph g = gnp(n, ps[s % ps.size()], rng);
        int t = run(g, rule).tau;
        ++result.enumerated;
        if (t > result.max_tau) {
            result.max_tau = t;
            result.argmax.assign(1, graph6_encode(g));
        } else if (t == result.max_tau && static_cast<int>(result.argmax.size()) < detail::kMaxArgmax) {
            result.argmax.push_back(graph6_encode(g));
        }
    }
    return result;
}

/// Running time of the k-cycle plus a chord at every valid offset.
inline std::vector<std::pair<int, int>> chord_sweep(int k) {
    if (k < 4) throw std::invalid_argument("chord_sweep: need k >= 4");
    std::vector<std::pair<int, int>> table;
    for (int offset = 2; offset <= k / 2; ++offset)
        table.emplace_back(offset, run(cycle_with_chord(k, offset).graph, Pattern::cycle(k)).tau);
    return table;
}

// ---- append-only JSON-lines result cache ----

inline std::optional<SearchResult> cache_lookup(const std::string& path, const std::string& rule,
                                                int n, const std::string& dedup_mode,
                                                bool connected_only) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::string line;
    std::optional<SearchResult> found;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded()) continue;
        if (j.value("rule", "") != rule || j.value("n", -1) != n) continue;
        if (j.value("dedup_mode", "") != dedup_mode) continue;
        if (j.value("connected_only", false) != connected_only) continue;
        SearchResult r;
        r.rule = rule;
        r.n = n;
        r.dedup_mode = dedup_mode;
        r.connected_only = connected_only;
        r.max_tau = j.value("max_tau", -1);
        r.enumerated = j.value("enumerated", 0LL);
        r.argmax = j.value("argmax", std::vector<std::string>{});
        found = std::move(r);  // last entry wins
    }
    return found;
}

inline void cache_append(const std::string& path, const SearchResult& result) {
    static std::mutex mu;  // single writer
    std::lock_guard<std::mutex> lock(mu);
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::runtime_error("cache_append: cannot open " + path);
    out << result.to_json().dump() << "\n";
}

/// Cache-aware exhaustive search.
inline SearchResult max_tau_exhaustive_cached(const std::string& cache_path, int n,
                                              const Pattern& rule, bool connected_only = false,
                                              bool dedup = false, int workers = 0) {
    std::string mode = dedup ? "iso-reduced" : "labeled";
    if (!cache_path.empty())
        if (auto hit = cache_lookup(cache_path, rule.to_string(), n, mode, connected_only)) return *hit;
    SearchResult result = max_tau_exhaustive(n, rule, connected_only, dedup, workers);
    if (!cache_path.empty()) cache_append(cache_path, result);
    return result;
}

}  // namespace cyclebp
