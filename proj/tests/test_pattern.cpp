#include "doctest.h"

#include <random>
#include <set>

#include "cyclebp/constructions.hpp"
#include "cyclebp/pattern.hpp"
#include "cyclebp/random_graphs.hpp"

using namespace cyclebp;

namespace {

Graph graph_from_mask(int n, uint64_t mask) {
    Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("pattern construction and invariants") {
    CHECK(Pattern::cycle(5).to_string() == "cycle:5");
    CHECK(Pattern::cycle_union({3, 5}).to_string() == "union:5,3");
    CHECK(Pattern::cycle_union({4}).kind == Pattern::Kind::Cycle);
    CHECK_THROWS_AS(Pattern::cycle(2), std::invalid_argument);
    CHECK_THROWS_AS(Pattern::cycle_union({}), std::invalid_argument);
    CHECK_THROWS_AS(Pattern::generic(Graph(2)), std::invalid_argument);  // isolated vertices
    CHECK_THROWS_AS(Pattern::generic(path(13).graph), std::invalid_argument);

    Pattern round = Pattern::parse("union:5,3");
    CHECK(Pattern::parse(round.to_string()).lengths == std::vector<int>{5, 3});
    CHECK(Pattern::parse("generic:Bw").graph == complete(3).graph);
    CHECK_THROWS_AS(Pattern::parse("cycles"), std::invalid_argument);
    CHECK_THROWS_AS(Pattern::parse("nope:4"), std::invalid_argument);

    CHECK(Pattern::cycle_union({4, 3}).as_graph().edge_count() == 7);
}

TEST_CASE("exists_path_of_exact_length") {
    CHECK(exists_path_of_exact_length(path(4).graph, 0, 3, 3));
    CHECK_FALSE(exists_path_of_exact_length(cycle(5).graph, 0, 2, 4));
    CHECK(exists_path_of_exact_length(complete(4).graph, 0, 1, 3));
    CHECK_FALSE(exists_path_of_exact_length(path(4).graph, 0, 3, 2));
    CHECK_THROWS_AS(exists_path_of_exact_length(path(4).graph, 1, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(exists_path_of_exact_length(path(4).graph, 0, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(exists_path_of_exact_length(path(4).graph, 0, 3, 13), std::invalid_argument);
}

TEST_CASE("closing_edges per variant") {
    auto ce = closing_edges(path(4).graph, Pattern::cycle(4));
    CHECK(ce == std::vector<VertexPair>{{0, 3}});

    CHECK(closing_edges(cycle(5).graph, Pattern::cycle(5)).empty());

    CHECK(closing_edges(path(5).graph, Pattern::cycle(3)) ==
          std::vector<VertexPair>{{0, 2}, {1, 3}, {2, 4}});

    Graph host = disjoint_union(cycle(3).graph, path(4).graph);
    CHECK(closing_edges(host, Pattern::cycle_union({4, 3})) == std::vector<VertexPair>{{3, 6}});
}

TEST_CASE("components smaller than k close nothing") {
    for (int k = 4; k <= 6; ++k)
        CHECK(closing_edges(path(k - 1).graph, Pattern::cycle(k)).empty());
    CHECK(closing_edges(path(3).graph, Pattern::cycle(4)).empty());
}

TEST_CASE("count_copies") {
    CHECK(count_copies(complete(4).graph, Pattern::cycle(3)) == 4);
    CHECK(count_copies(cycle(5).graph, Pattern::cycle(5)) == 1);
    CHECK(count_copies(complete(4).graph, Pattern::cycle(4)) == 3);
    CHECK(count_copies(complete(5).graph, Pattern::cycle(3)) == 10);
    CHECK(count_copies(path(6).graph, Pattern::cycle(3)) == 0);
    CHECK_THROWS_AS(count_copies(Graph(20), Pattern::cycle(3)), std::invalid_argument);
}

TEST_CASE("closing edge definition agrees with the copy-count delta, small hosts") {
    std::vector<Pattern> rules{Pattern::cycle(3), Pattern::cycle(4),
                               Pattern::generic(cycle(4).graph)};
    for (int n = 2; n <= 5; ++n) {
        int bits = n * (n - 1) / 2;
        for (uint64_t mask = 0; mask < (uint64_t{1} << bits); ++mask) {
            Graph g = graph_from_mask(n, mask);
            for (const auto& rule : rules) {
                auto closed = closing_edges(g, rule);
                std::set<VertexPair> closed_set(closed.begin(), closed.end());
                long long before = count_copies(g, rule);
                for (const auto& e : g.non_edges()) {
                    Graph plus = g;
                    plus.add_edge(e.u, e.v);
                    bool delta = count_copies(plus, rule) > before;
                    CHECK(delta == (closed_set.count(e) > 0));
                }
            }
        }
    }
}

TEST_CASE("union rule matches the copy-count delta on random hosts") {
    std::mt19937_64 rng(17);
    Pattern rule = Pattern::cycle_union({4, 3});
    Pattern as_generic = Pattern::generic(rule.as_graph());
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = gnp(9, 0.3, rng);
        long long before = count_copies(g, as_generic);
        auto closed = closing_edges(g, rule);
        std::set<VertexPair> closed_set(closed.begin(), closed.end());
        for (const auto& e : g.non_edges()) {
            Graph plus = g;
            plus.add_edge(e.u, e.v);
            bool delta = count_copies(plus, as_generic) > before;
            CHECK(delta == (closed_set.count(e) > 0));
        }
    }
}

TEST_CASE("closing edges persist in supergraphs") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = gnp(10, 0.25, rng);
        Graph super = g;
        for (const auto& e : g.non_edges())
            if (rng() % 3 == 0) super.add_edge(e.u, e.v);
        for (int k = 3; k <= 5; ++k) {
            auto closed = closing_edges(g, Pattern::cycle(k));
            auto closed_super = closing_edges(super, Pattern::cycle(k));
            std::set<VertexPair> super_set(closed_super.begin(), closed_super.end());
            for (const auto& e : closed)
                if (!super.has_edge(e.u, e.v)) CHECK(super_set.count(e) == 1);
        }
    }
}

TEST_CASE("closing edges on paths are flip symmetric") {
    for (int n : {6, 9, 12})
        for (int k = 3; k <= 5; ++k) {
            auto closed = closing_edges(path(n).graph, Pattern::cycle(k));
            std::set<VertexPair> set(closed.begin(), closed.end());
            for (const auto& e : closed) CHECK(set.count({n - 1 - e.u, n - 1 - e.v}) == 1);
        }
}
