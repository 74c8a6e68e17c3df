#pragma once

#include "graph.hpp"

#include "json.hpp"

#include <optional>
#include <vector>

namespace cfree {

// Blocks are maximal 2-connected subgraphs; a single edge is a block and an
// isolated vertex is its own degenerate block.
struct BlockDecomposition {
    std::vector<std::vector<int>> blocks; // sorted vertex sets, sorted among themselves
    std::vector<int> cut_vertices;        // sorted
    // Bipartite incidence of the block tree: blocks_at_cut[i] lists indices
    // into `blocks` of the blocks containing cut_vertices[i].
    std::vector<std::vector<int>> blocks_at_cut;
};

// Works on disconnected input too (forest of block trees).
BlockDecomposition decompose(const Graph& g);

struct BlockPath {
    std::vector<std::vector<int>> blocks; // ordered B_1..B_len
    std::vector<int> cut_vertices;        // v_1..v_{len-1}, v_i shared by B_i and B_{i+1}
    int length() const { return static_cast<int>(blocks.size()); }
};

// nullopt when the block tree is not a path. The two orientations are
// normalized: block-size sequence first, then the block vertex arrays,
// lexicographically least wins. Throws on disconnected input.
std::optional<BlockPath> as_block_path(const Graph& g);

struct Corner {
    int root = 0;                  // a cut vertex of the ambient graph
    std::vector<int> root_block;   // the unique block at root inside the corner
    std::vector<int> vertex_set;   // {root} plus one component of g minus root
    PointedGraph pointed;          // induced subgraph, based at root
    std::vector<int> to_original;  // pointed vertex i corresponds to to_original[i]
};

// One corner per (cut vertex, component of g minus that vertex). Throws on
// disconnected input.
std::vector<Corner> corners(const Graph& g);

Corner make_corner(const Graph& g, int root, const std::vector<int>& component);

enum class Side { Left, Right };

// R_j = (B_j,...,B_len) based at v_{j-1} for 2 <= j <= len;
// L_j = (B_j,...,B_1) based at v_j for 1 <= j <= len-1. j is 1-based.
PointedGraph terminal_segment(const Graph& g, const BlockPath& bp, int j, Side side);

struct Whisker {
    int attach = 0;          // core vertex the path hangs from
    std::vector<int> path;   // whisker vertices, attachment end first
};

struct PathlikeWitness {
    std::vector<int> core_vertices;
    BlockPath core;
    std::vector<Whisker> whiskers;
    bool attaches_at_core_cut_vertex = false;
};

// True iff removing a set of pendant paths, at most one per surviving
// vertex, leaves a block path. Exhaustive search; desk scale only.
std::optional<PathlikeWitness> is_pathlike(const Graph& g);

nlohmann::json to_json(const BlockDecomposition& d);
nlohmann::json to_json(const BlockPath& bp);

} // namespace cfree
