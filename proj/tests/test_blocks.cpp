#include "blocks.hpp"

#include "oracles.hpp"

#include "doctest.h"

#include <random>

using namespace cfree;
namespace oracle = cfree::testing;

TEST_CASE("decompose on the small fixtures") {
    BlockDecomposition p3 = decompose(oracle::path_graph(3));
    CHECK(p3.blocks == std::vector<std::vector<int>>{{0, 1}, {1, 2}});
    CHECK(p3.cut_vertices == std::vector<int>{1});

    BlockDecomposition k4 = decompose(clique(4));
    CHECK(k4.blocks == std::vector<std::vector<int>>{{0, 1, 2, 3}});
    CHECK(k4.cut_vertices.empty());

    // Frozen from the maximal-2-connected-subset oracle.
    BlockDecomposition bt = decompose(oracle::bowtie());
    CHECK(bt.blocks == oracle::naive_blocks(oracle::bowtie()));
    CHECK(bt.blocks == std::vector<std::vector<int>>{{0, 1, 2}, {0, 3, 4}});
    CHECK(bt.cut_vertices == std::vector<int>{0});
}

TEST_CASE("decompose matches the naive oracle on random graphs") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 150; ++t) {
        Graph g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 8), 0.35);
        BlockDecomposition d = decompose(g);
        CHECK(d.blocks == oracle::naive_blocks(g));
        CHECK(d.cut_vertices == oracle::naive_cut_vertices(g));
    }
}

TEST_CASE("decomposition invariants") {
    std::mt19937_64 rng(22);
    for (int t = 0; t < 100; ++t) {
        Graph g = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 7), 0.4);
        BlockDecomposition d = decompose(g);
        // Every edge lies in exactly one block.
        for (const auto& [u, v] : g.edges()) {
            int holders = 0;
            for (const auto& b : d.blocks)
                if (std::binary_search(b.begin(), b.end(), u) &&
                    std::binary_search(b.begin(), b.end(), v))
                    ++holders;
            CHECK(holders == 1);
        }
        // Two blocks share at most one vertex, and shared vertices are cut vertices.
        for (std::size_t i = 0; i < d.blocks.size(); ++i)
            for (std::size_t j = i + 1; j < d.blocks.size(); ++j) {
                std::vector<int> shared;
                std::set_intersection(d.blocks[i].begin(), d.blocks[i].end(), d.blocks[j].begin(),
                                      d.blocks[j].end(), std::back_inserter(shared));
                CHECK(shared.size() <= 1);
                for (int v : shared)
                    CHECK(std::binary_search(d.cut_vertices.begin(), d.cut_vertices.end(), v));
            }
    }
}

TEST_CASE("block tree incidence is a tree on connected input") {
    std::mt19937_64 rng(23);
    int done = 0;
    while (done < 60) {
        Graph g = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 7), 0.45);
        if (!is_connected(g)) continue;
        ++done;
        BlockDecomposition d = decompose(g);
        std::size_t nodes = d.blocks.size() + d.cut_vertices.size();
        std::size_t incidences = 0;
        for (const auto& at : d.blocks_at_cut) incidences += at.size();
        CHECK(incidences == nodes - 1); // connected + acyclic bipartite incidence
    }
}

TEST_CASE("as_block_path recognizes paths of blocks") {
    auto bowtie_path = as_block_path(oracle::bowtie());
    REQUIRE(bowtie_path);
    CHECK(bowtie_path->length() == 2);

    CHECK(!as_block_path(oracle::star(3)));

    auto single = as_block_path(clique(5));
    REQUIRE(single);
    CHECK(single->length() == 1);
    CHECK(single->cut_vertices.empty());

    CHECK_THROWS_AS(as_block_path(disjoint_union({clique(2), clique(2)})), std::invalid_argument);

    auto three = as_block_path(oracle::c4_k3_k4());
    REQUIRE(three);
    CHECK(three->length() == 3);
    CHECK(three->cut_vertices == std::vector<int>{0, 5});
    CHECK(three->blocks[0] == std::vector<int>{0, 1, 2, 3});
    CHECK(three->blocks[2] == std::vector<int>{5, 6, 7, 8});
}

TEST_CASE("corners fixtures") {
    CHECK(corners(clique(4)).empty());

    auto bt = corners(oracle::bowtie());
    REQUIRE(bt.size() == 2);
    for (const auto& c : bt) {
        CHECK(c.root == 0);
        CHECK(c.pointed.graph == clique(3));
        CHECK(c.pointed.basepoint == 0);
        CHECK(c.root_block == c.vertex_set);
    }

    // Frozen from enumerating components of the path minus each cut vertex.
    auto p4 = corners(oracle::path_graph(4));
    REQUIRE(p4.size() == 4);
    CHECK(p4[0].vertex_set == std::vector<int>{0, 1});
    CHECK(p4[1].vertex_set == std::vector<int>{1, 2, 3});
    CHECK(p4[2].vertex_set == std::vector<int>{0, 1, 2});
    CHECK(p4[3].vertex_set == std::vector<int>{2, 3});
}

TEST_CASE("corners at one root cover the graph and meet at the root") {
    std::mt19937_64 rng(31);
    int done = 0;
    while (done < 50) {
        Graph g = oracle::random_graph(rng, 3 + static_cast<int>(rng() % 6), 0.35);
        if (!is_connected(g)) continue;
        ++done;
        auto cs = corners(g);
        BlockDecomposition d = decompose(g);
        for (int root : d.cut_vertices) {
            std::vector<int> covered;
            std::vector<const Corner*> at_root;
            for (const auto& c : cs)
                if (c.root == root) at_root.push_back(&c);
            CHECK(at_root.size() >= 2);
            for (std::size_t i = 0; i < at_root.size(); ++i) {
                covered.insert(covered.end(), at_root[i]->vertex_set.begin(),
                               at_root[i]->vertex_set.end());
                for (std::size_t j = i + 1; j < at_root.size(); ++j) {
                    std::vector<int> shared;
                    std::set_intersection(at_root[i]->vertex_set.begin(),
                                          at_root[i]->vertex_set.end(),
                                          at_root[j]->vertex_set.begin(),
                                          at_root[j]->vertex_set.end(), std::back_inserter(shared));
                    CHECK(shared == std::vector<int>{root});
                }
            }
            std::sort(covered.begin(), covered.end());
            covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
            CHECK(static_cast<int>(covered.size()) == g.vertex_count());
        }
    }
}

TEST_CASE("terminal segments") {
    Graph g = oracle::c4_k3_k4();
    auto bp = as_block_path(g);
    REQUIRE(bp);

    PointedGraph right3 = terminal_segment(g, *bp, 3, Side::Right);
    CHECK(right3.graph == clique(4));
    CHECK(right3.basepoint == 0); // vertex 5 is least in {5,6,7,8}

    PointedGraph left2 = terminal_segment(g, *bp, 2, Side::Left);
    CHECK(left2.graph.vertex_count() == 6);
    CHECK(left2.graph.edge_count() == 7);
    CHECK(left2.basepoint == 5);

    auto bowtie_bp = as_block_path(oracle::bowtie());
    PointedGraph second = terminal_segment(oracle::bowtie(), *bowtie_bp, 2, Side::Right);
    CHECK(second.graph == clique(3));
    CHECK(second.basepoint == 0);

    CHECK_THROWS_AS(terminal_segment(g, *bp, 1, Side::Right), std::invalid_argument);
    CHECK_THROWS_AS(terminal_segment(g, *bp, 3, Side::Left), std::invalid_argument);
}

TEST_CASE("is_pathlike") {
    auto plain = is_pathlike(oracle::path_graph(5));
    REQUIRE(plain);
    CHECK(plain->whiskers.empty());

    Graph bowtie_whisker = attach_at(oracle::bowtie(), 0, {clique(2), 0});
    auto bw = is_pathlike(bowtie_whisker);
    REQUIRE(bw);
    CHECK(bw->whiskers.size() == 1);
    CHECK(bw->whiskers[0].attach == 0);
    CHECK(bw->attaches_at_core_cut_vertex);

    auto spider = is_pathlike(oracle::spider_three_legs_two());
    REQUIRE(spider);
    CHECK(spider->core.length() == 4); // a path of four edge-blocks
    CHECK(spider->whiskers.size() == 1);
    CHECK(spider->whiskers[0].path.size() == 2);
    CHECK(spider->whiskers[0].attach == 0);

    auto claw = is_pathlike(oracle::star(3));
    REQUIRE(claw);
    CHECK(claw->whiskers.size() == 1);

    // Four legs of length two: any core path uses two legs, leaving two
    // whiskers at the center.
    Graph four_legs(9, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}, {0, 7}, {7, 8}});
    CHECK(!is_pathlike(four_legs));

    Graph double_whisker = attach_at(bowtie_whisker, 0, {clique(2), 0});
    CHECK(!is_pathlike(double_whisker));
}

TEST_CASE("block decomposition serializes to JSON") {
    nlohmann::json j = to_json(decompose(oracle::bowtie()));
    CHECK(j["blocks"].size() == 2);
    CHECK(j["cut_vertices"] == nlohmann::json::array({0}));
    auto bp = as_block_path(oracle::bowtie());
    nlohmann::json pj = to_json(*bp);
    CHECK(pj["blocks"].size() == 2);
}
