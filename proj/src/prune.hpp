#pragma once

#include "blocks.hpp"
#include "embed.hpp"
#include "graph.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace cfree {

struct PruningSpec {
    std::vector<PointedGraph> members;
};

struct PruneResult {
    Graph graph;                    // induced graph on the surviving vertices
    std::vector<int> kept;          // surviving original vertex indices, ascending
    std::vector<int> pruned_roots;  // roots of the corners that were pruned
};

// Deletes, from every corner pointedly embeddable into some member of the
// spec, all vertices except the corner's root. Corners are tested against
// the original graph and the deletions applied at once; re-pruning is a
// caller policy.
PruneResult prune(const Graph& c, const PruningSpec& spec);

// Attaches `copies` disjoint copies of every spec member at every vertex of
// g. Copy-major numbering, so the result for m copies is an index-identical
// subgraph of the result for m+1.
Graph adjoin_copies(const Graph& g, const PruningSpec& spec, int copies);

struct TransferCheck {
    Graph pruned;
    bool precondition_ok = false; // g contains no copy of the pruned constraint
    bool transfer_holds = false;  // meaningful only when precondition_ok
};

// Checks that decorating a pruned-constraint-free graph with spec copies
// keeps it free of the original constraint.
TransferCheck pruning_transfer_check(const Graph& c, const PruningSpec& spec, const Graph& g,
                                     int copies, SearchLimits limits = {});

struct SuspensionSpec {
    Graph constraint;
    int corner_root = 0;
    PointedGraph attached_part; // union of the other corners at the root
    Graph residue;              // the chosen corner minus its root
};

// Builds the spec for detaching everything at `root` outside the corner
// holding `corner_member_vertex`.
SuspensionSpec make_suspension_spec(const Graph& c, int root, int corner_member_vertex);

// Lemma-style spec for a block path: block_index is 1-based with two cut
// vertices (1 < i < length); detaches the right tail past block i.
SuspensionSpec suspension_spec_for_block(const Graph& c, const BlockPath& bp, int block_index);

// Disjoint union of h and the attached part, plus edges from the attachment
// basepoint to every vertex of h. h occupies indices 0..|h|-1.
Graph suspend(const Graph& h, const SuspensionSpec& spec);

// True iff the left corner at v_i minus v_i embeds into the right corner at
// v_{i-1} minus v_{i-1} (subgraph mode). Fills the witness when requested.
bool detachability_hypothesis(const Graph& c, const BlockPath& bp, int block_index,
                              VertexMap* witness = nullptr, SearchLimits limits = {});

struct StressOptions {
    int trials = 100;
    int max_vertices = 8;
    std::uint64_t seed = 1;
    int retry_cap = 500;
    SearchLimits limits;
};

struct StressReport {
    int trials = 0;
    int samples = 0;  // trials that produced a residue-free H
    int skipped = 0;  // trials whose rejection sampling hit the retry cap
    int violations = 0;
    std::optional<std::string> witness; // lexicographically least violating H, serialized
    std::vector<std::uint64_t> trial_seeds;
    std::vector<int> violating_trials;
    nlohmann::json to_json() const;
};

// Random refutation search for detachability: samples residue-free graphs,
// suspends each, and checks freeness of the original constraint. A
// violation refutes detachability; zero violations is evidence only.
StressReport detachability_stress(const SuspensionSpec& spec, const StressOptions& options);

// One induced slice per embedding of the attached part into gamma: the
// vertices outside the image that are adjacent to the image of the
// basepoint. Slices are ordered by the embedding maps.
std::vector<Graph> neighborhood_slices(const Graph& gamma, const PointedGraph& attached,
                                       EmbedMode mode);

} // namespace cfree
