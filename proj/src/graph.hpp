#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cfree {

// Vertices are dense indices 0..n-1. Edges are stored normalized (u < v),
// sorted, without duplicates. Graphs are immutable after construction; all
// operations return new graphs.
using Edge = std::pair<int, int>;

Edge make_edge(int u, int v);

class Graph {
public:
    Graph() = default;
    Graph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool has_edge(int u, int v) const;
    bool has_vertex(int v) const { return v >= 0 && v < n_; }

    // Labeled equality: same vertex count, same edge set. No canonical form.
    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    // Bit adjacency matrix, kept for hosts small enough that O(1) edge tests
    // pay off in the embedding search; empty above the size threshold.
    std::vector<std::uint64_t> bits_;
    int stride_ = 0;
};

struct PointedGraph {
    Graph graph;
    int basepoint = 0;
};

// Total maps are vectors indexed by source vertex; partial maps (anchors)
// are (source, target) pair lists.
using VertexMap = std::vector<int>;
using AnchorList = std::vector<std::pair<int, int>>;

Graph clique(int n);
Graph cycle(int n);
Graph delete_edge(const Graph& g, int u, int v);

// Glues a disjoint copy of s.graph onto g, identifying s.basepoint with v.
// Attached vertices take the next free indices in basepoint-last order, so
// the output is reproducible byte for byte.
Graph attach_at(const Graph& g, int v, const PointedGraph& s);

Graph disjoint_union(const std::vector<Graph>& gs);

// Induced subgraph on `vertices` (sorted ascending, deduplicated by caller);
// vertex i of the result is vertices[i].
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

bool is_connected(const Graph& g);
std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_complete(const Graph& g);

struct ParsedGraph {
    Graph graph;
    std::optional<int> basepoint;
};

// Line-oriented text format: `# comment`, `n <vertex_count>`, `e <u> <v>`,
// optional `p <basepoint>`. Errors carry the offending line number.
ParsedGraph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g, std::optional<int> basepoint = std::nullopt);

} // namespace cfree
