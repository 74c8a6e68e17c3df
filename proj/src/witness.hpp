#pragma once

#include "blocks.hpp"
#include "embed.hpp"
#include "graph.hpp"
#include "hypergraph.hpp"

#include "json.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace cfree {

// A two-block constraint prepared for the split construction: the first
// block is incomplete and no larger than the second, and one of its edges at
// the cut vertex is marked for deletion.
struct TwoBlockConstraint {
    Graph c;
    std::vector<int> block_small; // B1, sorted original labels
    std::vector<int> block_large; // B2
    int n1 = 0, n2 = 0;
    int cut_vertex = 0;
    Edge deleted_edge;  // original labels, contains cut_vertex
    Graph b1_minus;     // B1 minus the deleted edge, on local indices
    int b1_cut_pos = 0; // local index of the cut vertex
    int b1_other_pos = 0; // local index of the deleted edge's other end
};

struct WitnessFamily {
    TwoBlockConstraint constraint;
    int k = 0;     // n1 + 1
    int girth = 0; // strictly above the largest block order
    Hypergraph hg;
    std::vector<std::vector<int>> e1;      // clique part of each hyperedge, holds its max
    std::vector<std::array<int, 2>> e2;    // attachment pair, ascending
    Graph g0; // cliques on the e1 parts, nothing else
    Graph g1; // g0 with one fresh clique of order n2+1 glued at every vertex
    int clique_order = 0; // n2 + 1
    int kv_base = 0;      // first index of the glued clique vertices (= N + M)

    int edge_count() const { return static_cast<int>(hg.edges.size()); }
    // The fresh vertices of the clique glued at hypergraph vertex v.
    std::vector<int> clique_tail(int v) const;
};

// 0/1 per hyperedge: 1 attaches an edge across the pair, 0 a copy of the
// broken block.
using EdgeLabeling = std::vector<std::uint8_t>;

// Builds the family at truncation edge_count. The constraint must be a
// block path of length exactly 2 admitting an ordering with the smaller
// block incomplete; otherwise the construction is inapplicable.
WitnessFamily make_family(const Graph& c, int edge_count, int girth_margin = 1);

// The graph for one labeling: label 1 adds the pair edge, label 0 glues a
// fresh broken-block copy with the smaller pair vertex playing the cut
// vertex.
Graph instantiate(const WitnessFamily& fam, const EdgeLabeling& labeling);

// True iff the instantiated graph contains no copy of the constraint.
bool check_cfree(const WitnessFamily& fam, const EdgeLabeling& labeling, SearchLimits limits = {});

// Restores the pair edge of a 0-labeled hyperedge and reports whether a
// constraint copy appears.
bool check_distinguisher(const WitnessFamily& fam, const EdgeLabeling& labeling, int edge_index,
                         SearchLimits limits = {});

struct RigidityViolation {
    int hyperedge = 0;
    int trial = 0;
    int expected = 0; // image of the top vertex under the sampled embedding
    int got = 0;      // a different extension found for the same prefix values
};

struct RigidityReport {
    int trials = 0;
    int pairs_checked = 0;
    std::uint64_t candidate_checks = 0;
    int sample_failures = 0;
    std::vector<RigidityViolation> violations;
    std::optional<VertexMap> constraint_copy; // exhibited when violations occur
    nlohmann::json to_json() const;
};

struct PrefixPattern {
    Graph graph;                  // induced prefix of g1: vertices 0..top plus their cliques
    std::vector<int> to_original; // pattern index -> g1 vertex index
    int top = 0;                  // pattern index of the hyperedge's max vertex
};

PrefixPattern rigidity_prefix(const WitnessFamily& fam, int hyperedge);

// For each hyperedge with top vertex u and each sampled embedding of the
// prefix, anchors the images of all earlier hypergraph vertices and searches
// for a second extension sending u elsewhere. A hit is a violation and
// comes with a constraint copy in the host.
RigidityReport check_rigidity(const WitnessFamily& fam, const EdgeLabeling& labeling, int trials,
                              std::uint64_t seed, SearchLimits limits = {},
                              const Graph* host_override = nullptr);

} // namespace cfree
