#include "doctest.h"

#include <random>

#include "cyclebp/constructions.hpp"
#include "cyclebp/process.hpp"
#include "cyclebp/random_graphs.hpp"

using namespace cyclebp;

TEST_CASE("triangle rule on P_4") {
    ProcessTrace t = run(path(4).graph, Pattern::cycle(3));
    CHECK(t.tau == 2);
    CHECK(t.final_graph.is_complete());
    REQUIRE(t.rounds.size() == 2);
    CHECK(t.rounds[0] == std::vector<VertexPair>{{0, 2}, {1, 3}});
    CHECK(t.rounds[1] == std::vector<VertexPair>{{0, 3}});
}

TEST_CASE("stable graphs stay put") {
    ProcessTrace t = run(cycle(5).graph, Pattern::cycle(5));
    CHECK(t.tau == 0);
    CHECK(t.final_graph == cycle(5).graph);
    CHECK(tau(Graph(0), Pattern::cycle(3)) == 0);
    CHECK(tau(path(2).graph, Pattern::cycle(3)) == 0);
}

TEST_CASE("C_4 rule on P_6 reaches the parity biclique") {
    ProcessTrace t = run(path(6).graph, Pattern::cycle(4));
    CHECK(t.tau == 2);
    CHECK(t.final_graph.edge_count() == 9);
    for (int x = 0; x < 6; ++x)
        for (int y = x + 1; y < 6; ++y) CHECK(t.final_graph.has_edge(x, y) == ((y - x) % 2 == 1));
}

TEST_CASE("named taus") {
    ProcessTrace t35 = run(complete_bipartite_plus_edge(5).graph, Pattern::cycle(5));
    CHECK(t35.tau <= 2);
    CHECK(t35.final_graph.is_complete());
    CHECK(tau(path(58).graph, Pattern::cycle(5)) == 4);
}

TEST_CASE("birth times") {
    ProcessTrace t = run(path(58).graph, Pattern::cycle(5));
    CHECK(t.birth_time({0, 57}) == 4);
    ProcessTrace t4 = run(path(4).graph, Pattern::cycle(3));
    CHECK(t4.birth_time({0, 1}) == 0);
    ProcessTrace t6 = run(path(6).graph, Pattern::cycle(4));
    CHECK_FALSE(t6.birth_time({0, 2}).has_value());
    CHECK_THROWS_AS(t6.birth_time({0, 99}), std::out_of_range);
}

TEST_CASE("final graph is stable and rounds are non-empty") {
    std::mt19937_64 rng(2);
    std::vector<std::pair<Graph, Pattern>> cases{
        {path(12).graph, Pattern::cycle(3)},
        {path(20).graph, Pattern::cycle(4)},
        {gnp(14, 0.2, rng), Pattern::cycle(5)},
        {disjoint_union(cycle(3).graph, path(9).graph), Pattern::cycle_union({4, 3})},
    };
    for (const auto& [g, rule] : cases) {
        ProcessTrace t = run(g, rule);
        CHECK(closing_edges(t.final_graph, rule).empty());
        for (const auto& round : t.rounds) CHECK_FALSE(round.empty());
        CHECK(t.final_graph.contains(g));
        CHECK(t.at(t.tau) == t.final_graph);
        CHECK(t.at(0) == g);
    }
}

TEST_CASE("exhausted round budget throws") {
    CHECK_THROWS_AS(run(path(10).graph, Pattern::cycle(3), 1), std::runtime_error);
    CHECK_THROWS_AS(run(path(10).graph, Pattern::cycle(3), 0), std::invalid_argument);
    CHECK_NOTHROW(run(path(10).graph, Pattern::cycle(3), 100));
}

TEST_CASE("trace JSON layout") {
    auto j = run(path(4).graph, Pattern::cycle(3)).to_json();
    CHECK(j["n"] == 4);
    CHECK(j["rule"] == "cycle:3");
    CHECK(j["tau"] == 2);
    CHECK(j["rounds"].size() == 2);
    CHECK(j["rounds"][0][0] == nlohmann::json({0, 2}));
    CHECK(j["initial"] == "Ch");
    CHECK(j["final"] == "C~");
}

TEST_CASE("path difference sets") {
    auto d30 = path_difference_sets(30, 4, 1);
    REQUIRE(d30.size() == 2);
    CHECK(d30[0] == std::vector<int>{1});
    CHECK(d30[1] == std::vector<int>{1, 3});

    auto d5 = path_difference_sets(30, 5, 2);
    for (int l : {1, 3, 5})
        CHECK(std::binary_search(d5[2].begin(), d5[2].end(), l));

    auto d3 = path_difference_sets(20, 3, 1);
    CHECK(d3[1] == std::vector<int>{1, 2});

    // D_i is increasing in i.
    auto ds = path_difference_sets(40, 5, 4);
    for (size_t i = 0; i + 1 < ds.size(); ++i)
        for (int d : ds[i]) CHECK(std::binary_search(ds[i + 1].begin(), ds[i + 1].end(), d));
}

TEST_CASE("process is monotone in the starting graph") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 8; ++trial) {
        Graph g = gnp(18, 0.12, rng);
        Graph super = g;
        for (const auto& e : g.non_edges())
            if (rng() % 5 == 0) super.add_edge(e.u, e.v);
        for (int k : {3, 4, 5}) {
            ProcessTrace ta = run(g, Pattern::cycle(k));
            ProcessTrace tb = run(super, Pattern::cycle(k));
            int horizon = std::max(ta.tau, tb.tau);
            for (int i = 0; i <= horizon; ++i) CHECK(tb.at(i).contains(ta.at(i)));
        }
    }
}

TEST_CASE("union rule on the disjoint-cycles witness") {
    // C_3 u P_47; the path end pair closes C_4 once a 3-path plus the far
    // triangle are available.
    NamedGraph w = cycle_union_witness({4, 3}, 50);
    ProcessTrace t = run(w.graph, Pattern::cycle_union({4, 3}));
    CHECK(t.tau >= 4);
    CHECK(t.birth_time({w.labels.at("path_first"), w.labels.at("path_last")}).has_value());
}
