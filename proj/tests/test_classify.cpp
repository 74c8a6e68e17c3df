#include "classify.hpp"

#include "oracles.hpp"

#include "doctest.h"

#include <algorithm>
#include <random>

using namespace cfree;
namespace oracle = cfree::testing;

namespace {

Graph permuted(const Graph& g, std::mt19937_64& rng) {
    std::vector<int> perm(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) perm[v] = v;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges()) edges.push_back(make_edge(perm[u], perm[v]));
    return Graph(g.vertex_count(), std::move(edges));
}

int embedding_steps(const Verdict& v) {
    int count = 0;
    for (const auto& step : v.trace.at("steps"))
        if (step.contains("check") && step.at("check") == "embedding") ++count;
    return count;
}

} // namespace

TEST_CASE("verdict table") {
    CHECK(classify(clique(4)).outcome == Outcome::Exists);
    CHECK(classify(clique(4)).rule == "complete-constraint");
    CHECK(classify(clique(1)).outcome == Outcome::Exists);
    CHECK(classify(clique(2)).outcome == Outcome::Exists);

    Verdict c4 = classify(cycle(4));
    CHECK(c4.outcome == Outcome::NotExists);
    CHECK(c4.rule == "fk-2-connected");

    Verdict two = classify(oracle::c4_k4());
    CHECK(two.outcome == Outcome::NotExists);
    CHECK(two.rule == "block-path-solidity");

    Verdict three = classify(oracle::c4_k3_k4());
    CHECK(three.outcome == Outcome::NotExists);
    CHECK(three.rule == "block-path-solidity");
    CHECK(embedding_steps(three) == 2); // weak symmetry plus detachability

    Verdict bow = classify(oracle::bowtie());
    CHECK(bow.outcome == Outcome::Open);
    CHECK(bow.rule == "all-blocks-complete");

    Verdict p5 = classify(oracle::path_graph(5));
    CHECK(p5.outcome == Outcome::Open);
    CHECK(p5.rule == "tree-constraint");
    CHECK(p5.note.find("path") != std::string::npos);

    Verdict claw = classify(oracle::star(3));
    CHECK(claw.outcome == Outcome::Open);
    CHECK(claw.note.find("near path") != std::string::npos);

    Verdict spider = classify(oracle::spider_three_legs_two());
    CHECK(spider.outcome == Outcome::NotExists);
    CHECK(spider.rule == "tree-constraint");
}

TEST_CASE("conjectural layer for non-path block trees") {
    // Three triangles at one vertex: not a block path, not a tree.
    Graph three_triangles = attach_at(oracle::bowtie(), 0, {clique(3), 0});
    Verdict v = classify(three_triangles);
    CHECK(v.outcome == Outcome::Open);
    CHECK(v.rule == "beyond-block-paths");
    REQUIRE(v.trace.contains("conjectural"));
    CHECK(v.trace["conjectural"]["status"] == "conjectural");
    CHECK(v.trace["conjectural"]["pathlike"] == false);

    // A bowtie with one whisker is still a block path, hence plain Open.
    Verdict sv = classify(attach_at(oracle::bowtie(), 1, {oracle::path_graph(2), 0}));
    CHECK(sv.outcome == Outcome::Open);
}

TEST_CASE("errors on malformed input") {
    CHECK_THROWS_AS(classify(Graph(0, {})), std::invalid_argument);
    CHECK_THROWS_AS(classify(disjoint_union({clique(2), clique(2)})), std::invalid_argument);
}

TEST_CASE("relabeling never changes the outcome") {
    std::mt19937_64 rng(91);
    std::vector<Graph> fixtures{clique(4),
                                cycle(5),
                                oracle::c4_k4(),
                                oracle::c4_k3_k4(),
                                oracle::bowtie(),
                                oracle::path_graph(6),
                                oracle::star(3),
                                oracle::spider_three_legs_two()};
    for (const auto& g : fixtures) {
        Outcome base = classify(g).outcome;
        for (int t = 0; t < 4; ++t) CHECK(classify(permuted(g, rng)).outcome == base);
    }
}

TEST_CASE("traces replay") {
    for (const Graph& g : {clique(4), cycle(4), oracle::c4_k4(), oracle::c4_k3_k4(),
                           oracle::bowtie(), oracle::path_graph(5), oracle::star(3),
                           oracle::spider_three_legs_two()}) {
        Verdict v = classify(g);
        CHECK(replay_trace(v.trace));
    }
}

TEST_CASE("tampered traces fail replay") {
    Verdict v = classify(oracle::c4_k3_k4());
    nlohmann::json bad = v.trace;
    for (auto& step : bad["steps"])
        if (step.contains("check") && step["check"] == "block_decomposition")
            step["blocks"][0] = nlohmann::json::array({0, 1});
    CHECK(!replay_trace(bad));

    nlohmann::json bad_map = v.trace;
    for (auto& step : bad_map["steps"])
        if (step.contains("check") && step["check"] == "embedding" && !step["map"].is_null())
            step["map"][0] = 1 + step["map"][0].get<int>();
    CHECK(!replay_trace(bad_map));

    CHECK(!replay_trace(nlohmann::json{{"no", "constraint"}}));
}

TEST_CASE("reduction demo on the three-block fixture") {
    nlohmann::json report = reduction_demo(oracle::c4_k3_k4(), {});
    CHECK(report["applicable"] == true);
    for (const auto& cond : report["shape_conditions"]) CHECK(cond["holds"] == true);
    CHECK(report.contains("weak_symmetry_witness"));
    CHECK(report["detachability"]["hypothesis"] == true);
    CHECK(report["corner_prune"]["pruned_roots"].size() == 1);
    // The residual two-block constraint reduces through corner pruning to a
    // 2-connected incomplete constraint.
    CHECK(report["residual"]["route"] == "corner-prune");
    CHECK(report["residual"]["pruned_two_connected_incomplete"] == true);

    DemoOptions stress;
    stress.stress_trials = 10;
    nlohmann::json with_stress = reduction_demo(oracle::c4_k3_k4(), stress);
    CHECK(with_stress["detachability"]["stress"]["violations"] == 0);
}

TEST_CASE("reduction demo routing") {
    CHECK(reduction_demo(oracle::bowtie(), {})["applicable"] == false);
    CHECK(reduction_demo(oracle::star(3), {})["applicable"] == false);

    nlohmann::json base = reduction_demo(oracle::c4_k4(), {});
    CHECK(base["applicable"] == true);
    CHECK(base["route"] == "base-case");
    CHECK(base["two_block_stage"]["route"] == "split-family");
    CHECK(base["two_block_stage"]["family"]["k"] == 5);

    // A wide middle block leaves a residual where the split family applies.
    Graph wide(11, {{0, 1}, {1, 2},  {2, 3},  {0, 3},                       // 4-cycle
                    {0, 4}, {0, 5},  {0, 6},  {0, 7}, {4, 5}, {4, 6}, {4, 7},
                    {5, 6}, {5, 7},  {6, 7},                                 // K5 on {0,4,5,6,7}
                    {7, 8}, {7, 9},  {7, 10}, {8, 9}, {8, 10}, {9, 10}});    // K4 on {7,8,9,10}
    nlohmann::json chain = reduction_demo(wide, {});
    CHECK(chain["applicable"] == true);
    CHECK(chain["residual"]["route"] == "split-family");
    CHECK(chain["residual"]["family"]["k"] == 5);
}
