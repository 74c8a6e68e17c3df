#include "graph.hpp"

#include "oracles.hpp"

#include "doctest.h"

#include <random>

using namespace cfree;
using cfree::testing::random_graph;

TEST_CASE("clique sizes") {
    CHECK(clique(1).vertex_count() == 1);
    CHECK(clique(1).edge_count() == 0);
    CHECK(clique(4).vertex_count() == 4);
    CHECK(clique(4).edge_count() == 6);
    CHECK(clique(6).edge_count() == 15);
    CHECK_THROWS_AS(clique(0), std::invalid_argument);
}

TEST_CASE("cycles") {
    CHECK(cycle(3) == clique(3));
    Graph c4 = cycle(4);
    CHECK(c4.vertex_count() == 4);
    CHECK(c4.edge_count() == 4);
    for (int v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);
    CHECK(cycle(5).edge_count() == 5);
    CHECK_THROWS_AS(cycle(2), std::invalid_argument);
}

TEST_CASE("graph construction rejects bad edges") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument); // duplicate after normalizing
}

TEST_CASE("delete_edge") {
    CHECK(delete_edge(clique(4), 0, 1).edge_count() == 5);
    Graph p = delete_edge(cycle(4), 0, 1);
    CHECK(p.edge_count() == 3);
    int leaves = 0;
    for (int v = 0; v < 4; ++v)
        if (p.degree(v) == 1) ++leaves;
    CHECK(leaves == 2); // a path on 4 vertices
    CHECK(delete_edge(clique(3), 1, 2).edge_count() == 2);
    CHECK_THROWS_AS(delete_edge(cycle(4), 0, 2), std::invalid_argument);
}

TEST_CASE("attach_at basics") {
    Graph one(1, {});
    CHECK(attach_at(one, 0, {one, 0}) == one);

    Graph whisker = attach_at(clique(3), 0, {clique(2), 1});
    CHECK(whisker.vertex_count() == 4);
    CHECK(whisker.edge_count() == 4);
    CHECK(whisker.degree(3) == 1);

    // Frozen from the count rule: 4+3-1 vertices, 4+3 edges.
    Graph g = attach_at(cycle(4), 2, {clique(3), 0});
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() == 7);
    CHECK_THROWS_AS(attach_at(cycle(4), 7, {clique(3), 0}), std::invalid_argument);
}

TEST_CASE("attach_at count invariant on random inputs") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 60; ++t) {
        Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 6), 0.5);
        Graph s = random_graph(rng, 1 + static_cast<int>(rng() % 5), 0.5);
        int at = static_cast<int>(rng() % g.vertex_count());
        int bp = static_cast<int>(rng() % s.vertex_count());
        Graph out = attach_at(g, at, {s, bp});
        CHECK(out.vertex_count() == g.vertex_count() + s.vertex_count() - 1);
        CHECK(out.edge_count() == g.edge_count() + s.edge_count());
    }
}

TEST_CASE("disjoint_union") {
    CHECK(disjoint_union({}).vertex_count() == 0);
    Graph two = disjoint_union({clique(3), clique(3)});
    CHECK(two.vertex_count() == 6);
    CHECK(two.edge_count() == 6);
    CHECK(connected_components(two).size() == 2);
    Graph mixed = disjoint_union({cycle(4), clique(2)});
    CHECK(mixed.vertex_count() == 6);
    CHECK(mixed.edge_count() == 5);
}

TEST_CASE("parse basics") {
    ParsedGraph single = parse_graph("n 2\ne 0 1\n");
    CHECK(single.graph == clique(2));
    CHECK(!single.basepoint);

    ParsedGraph tri = parse_graph("# triangle\nn 3\ne 0 1\ne 1 2\ne 2 0\n");
    CHECK(tri.graph == clique(3));

    ParsedGraph pointed = parse_graph("n 3\np 1\ne 0 1\n");
    CHECK(pointed.basepoint == 1);

    CHECK(parse_graph(serialize_graph(clique(3))).graph == clique(3));
}

TEST_CASE("parse errors carry line numbers") {
    auto message_of = [](const std::string& text) {
        try {
            parse_graph(text);
        } catch (const std::runtime_error& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(message_of("n 2\ne 0 2\n").find("line 2") != std::string::npos);
    CHECK(message_of("n 2\nz 0 1\n").find("line 2") != std::string::npos);
    CHECK(message_of("n 2\ne 0 1\ne 1 0\n").find("duplicate") != std::string::npos);
    CHECK(message_of("e 0 1\n").find("before 'n'") != std::string::npos);
    CHECK(message_of("# only a comment\n").find("missing 'n'") != std::string::npos);
    CHECK(message_of("n 2\ne 1 1\n").find("self-loop") != std::string::npos);
    CHECK(message_of("n 2\np 5\n").find("out of range") != std::string::npos);
}

TEST_CASE("serialize/parse round trip on random graphs") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 80; ++t) {
        Graph g = random_graph(rng, static_cast<int>(rng() % 9), 0.4);
        ParsedGraph back = parse_graph(serialize_graph(g));
        CHECK(back.graph == g);
        if (g.vertex_count() > 0) {
            int bp = static_cast<int>(rng() % g.vertex_count());
            ParsedGraph pointed = parse_graph(serialize_graph(g, bp));
            CHECK(pointed.graph == g);
            CHECK(pointed.basepoint == bp);
        }
    }
}
