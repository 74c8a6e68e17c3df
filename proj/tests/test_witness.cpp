#include "witness.hpp"

#include "oracles.hpp"

#include "doctest.h"

#include <random>
#include <set>

using namespace cfree;
namespace oracle = cfree::testing;

namespace {

// Two blocks glued at a shared vertex; a at its vertex av, b at bv.
Graph glue_blocks(const Graph& a, int av, const Graph& b, int bv) {
    return attach_at(a, av, {b, bv});
}

EdgeLabeling all_bits(int m, std::uint8_t value) { return EdgeLabeling(m, value); }

} // namespace

TEST_CASE("make_family parameters for the 4-cycle / K4 constraint") {
    WitnessFamily fam = make_family(oracle::c4_k4(), 10);
    CHECK(fam.constraint.n1 == 4);
    CHECK(fam.constraint.n2 == 4);
    CHECK(fam.k == 5);
    CHECK(fam.girth == 5);
    CHECK(fam.clique_order == 5);
    for (const auto& part : fam.e1) CHECK(part.size() == 3);
    for (std::size_t j = 0; j < fam.e1.size(); ++j) {
        CHECK(fam.e2[j][0] < fam.e2[j][1]);
        int top = static_cast<int>(fam.hg.initial_size) + static_cast<int>(j);
        CHECK(fam.e1[j].back() == top);
    }
    CHECK(fam.constraint.deleted_edge.first == 0); // least edge of the cycle block at the cut
    // Carrier size: every hypergraph vertex carries one fresh order-5 clique.
    CHECK(fam.g1.vertex_count() == static_cast<int>(fam.hg.vertex_count) * 5);
}

TEST_CASE("make_family on a larger second block") {
    Graph c = glue_blocks(cycle(4), 0, clique(5), 0);
    WitnessFamily fam = make_family(c, 6);
    CHECK(fam.constraint.n1 == 4);
    CHECK(fam.constraint.n2 == 5);
    CHECK(fam.k == 5);
    CHECK(fam.girth == 6);
    CHECK(fam.clique_order == 6);
}

TEST_CASE("make_family rejects inapplicable constraints") {
    CHECK_THROWS_AS(make_family(oracle::bowtie(), 5), std::invalid_argument); // both complete
    CHECK_THROWS_AS(make_family(clique(4), 5), std::invalid_argument);        // single block
    CHECK_THROWS_AS(make_family(oracle::c4_k3_k4(), 5), std::invalid_argument); // three blocks
    // Smaller block complete, larger incomplete: inapplicable in this order.
    Graph pendant_c5 = glue_blocks(cycle(5), 0, clique(2), 0);
    CHECK_THROWS_AS(make_family(pendant_c5, 5), std::invalid_argument);
    // Equal sizes with one incomplete block: the incomplete one leads.
    Graph c4_v_k4 = glue_blocks(clique(4), 0, cycle(4), 0);
    WitnessFamily fam = make_family(c4_v_k4, 5);
    CHECK(fam.constraint.n1 == 4);
    CHECK(!is_complete(fam.constraint.b1_minus));
}

TEST_CASE("carrier shape audit") {
    WitnessFamily fam = make_family(oracle::c4_k4(), 8);
    // Every split clique part induces a clique and nothing else exists:
    // girth keeps the parts pairwise near-disjoint, so counts add up.
    int expected = 0;
    for (const auto& part : fam.e1) {
        expected += static_cast<int>(part.size() * (part.size() - 1) / 2);
        for (std::size_t a = 0; a < part.size(); ++a)
            for (std::size_t b = a + 1; b < part.size(); ++b)
                CHECK(fam.g0.has_edge(part[a], part[b]));
    }
    CHECK(fam.g0.edge_count() == expected);
    // Attached cliques meet the carrier in exactly their attachment vertex.
    for (int v = 0; v < static_cast<int>(fam.hg.vertex_count); ++v) {
        for (int w : fam.clique_tail(v)) {
            for (int u : fam.g1.neighbors(w)) {
                bool in_same_clique =
                    u == v || (u >= fam.kv_base && (u - fam.kv_base) / (fam.clique_order - 1) == v);
                CHECK(in_same_clique);
            }
        }
    }
}

TEST_CASE("instantiate counts") {
    WitnessFamily fam = make_family(oracle::c4_k4(), 6);
    int m = fam.edge_count();

    Graph ones = instantiate(fam, all_bits(m, 1));
    CHECK(ones.vertex_count() == fam.g1.vertex_count());
    CHECK(ones.edge_count() == fam.g1.edge_count() + m);

    Graph zeros = instantiate(fam, all_bits(m, 0));
    // Each broken-block copy brings n1-2 fresh vertices and its own edges.
    CHECK(zeros.vertex_count() == fam.g1.vertex_count() + m * (fam.constraint.n1 - 2));
    CHECK(zeros.edge_count() ==
          fam.g1.edge_count() + m * fam.constraint.b1_minus.edge_count());

    std::mt19937_64 rng(17);
    EdgeLabeling mixed(m);
    for (auto& b : mixed) b = static_cast<std::uint8_t>(rng() & 1);
    int zero_count = 0;
    for (auto b : mixed)
        if (!b) ++zero_count;
    Graph g = instantiate(fam, mixed);
    CHECK(g.vertex_count() == fam.g1.vertex_count() + zero_count * (fam.constraint.n1 - 2));

    CHECK_THROWS_AS(instantiate(fam, EdgeLabeling(m + 1, 0)), std::invalid_argument);
}

TEST_CASE("labelings differ exactly at their hyperedge attachments") {
    WitnessFamily fam = make_family(oracle::c4_k4(), 4);
    int m = fam.edge_count();
    Graph ones = instantiate(fam, all_bits(m, 1));
    for (int j = 0; j < m; ++j) {
        CHECK(ones.has_edge(fam.e2[j][0], fam.e2[j][1]));
        CHECK(!fam.g1.has_edge(fam.e2[j][0], fam.e2[j][1]));
    }
    Graph zeros = instantiate(fam, all_bits(m, 0));
    for (int j = 0; j < m; ++j) CHECK(!zeros.has_edge(fam.e2[j][0], fam.e2[j][1]));
}

TEST_CASE("instantiated graphs avoid the constraint") {
    WitnessFamily fam = make_family(oracle::c4_k4(), 8);
    int m = fam.edge_count();
    CHECK(check_cfree(fam, all_bits(m, 1)));
    CHECK(check_cfree(fam, all_bits(m, 0)));
    std::mt19937_64 rng(23);
    for (int t = 0; t < 5; ++t) {
        EdgeLabeling bits(m);
        for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1);
        CHECK(check_cfree(fam, bits));
    }
}

TEST_CASE("restoring a pair edge creates a constraint copy") {
    WitnessFamily fam = make_family(oracle::c4_k4(), 6);
    int m = fam.edge_count();
    EdgeLabeling zeros = all_bits(m, 0);
    for (int j = 0; j < m; ++j) CHECK(check_distinguisher(fam, zeros, j));
    EdgeLabeling ones = all_bits(m, 1);
    CHECK_THROWS_AS(check_distinguisher(fam, ones, 0), std::invalid_argument);
    CHECK_THROWS_AS(check_distinguisher(fam, zeros, m), std::invalid_argument);
}

TEST_CASE("rigidity of the prefix on a tiny family") {
    WitnessFamily fam = make_family(oracle::c4_k4(), 2);
    EdgeLabeling bits = all_bits(fam.edge_count(), 1);

    RigidityReport empty = check_rigidity(fam, bits, 0, 1);
    CHECK(empty.pairs_checked == 0);
    CHECK(empty.violations.empty());

    SearchLimits limits{20'000'000};
    RigidityReport report = check_rigidity(fam, bits, 2, 12345, limits);
    CHECK(report.violations.empty());
    CHECK(!report.constraint_copy);
    CHECK(report.pairs_checked + report.sample_failures >= 2);
    CHECK(report.pairs_checked >= 2); // identity sample always applies
}

TEST_CASE("rigidity flags a doctored host and exhibits the constraint copy") {
    WitnessFamily fam = make_family(oracle::c4_k4(), 2);
    EdgeLabeling bits = all_bits(fam.edge_count(), 1);
    Graph host = instantiate(fam, bits);

    // Clone the top vertex of the last hyperedge: join a fresh vertex to the
    // other clique-part members and hang a fresh order-5 clique on it.
    int j = fam.edge_count() - 1;
    int top = static_cast<int>(fam.hg.initial_size) + j;
    std::vector<Edge> edges = host.edges();
    int clone = host.vertex_count();
    for (int u : fam.e1[j])
        if (u != top) edges.push_back(make_edge(u, clone));
    std::vector<int> fresh;
    for (int i = 0; i < fam.clique_order - 1; ++i) fresh.push_back(clone + 1 + i);
    std::vector<int> members{clone};
    members.insert(members.end(), fresh.begin(), fresh.end());
    for (std::size_t a = 0; a < members.size(); ++a)
        for (std::size_t b = a + 1; b < members.size(); ++b)
            edges.push_back(make_edge(members[a], members[b]));
    Graph doctored(host.vertex_count() + fam.clique_order, std::move(edges));

    SearchLimits limits{20'000'000};
    RigidityReport report = check_rigidity(fam, bits, 1, 7, limits, &doctored);
    CHECK(!report.violations.empty());
    bool saw_clone = false;
    for (const auto& v : report.violations)
        if (v.hyperedge == j && v.got == clone) saw_clone = true;
    CHECK(saw_clone);
    REQUIRE(report.constraint_copy);
    // The exhibited copy really is an embedding of the constraint.
    const VertexMap& copy = *report.constraint_copy;
    const Graph& c = fam.constraint.c;
    for (const auto& [u, v] : c.edges()) CHECK(doctored.has_edge(copy[u], copy[v]));
    std::set<int> image(copy.begin(), copy.end());
    CHECK(image.size() == copy.size());
}
