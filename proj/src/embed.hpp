#pragma once

#include "graph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>

namespace cfree {

enum class EmbedMode { Subgraph, Induced };

struct SearchLimits {
    std::uint64_t node_budget = 0; // 0 = unlimited
};

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(std::uint64_t budget)
        : std::runtime_error("embedding search exceeded node budget " + std::to_string(budget)) {}
};

// All searches are complete: "not found" means no embedding exists. Anchors
// force pattern->host assignments and must be injective.
bool embedding_exists(const Graph& pattern, const Graph& host, EmbedMode mode,
                      const AnchorList& anchors = {}, SearchLimits limits = {});

// Returns the lexicographically least embedding by pattern vertex order, or
// nullopt. Maps pattern edges to host edges; in induced mode also pattern
// non-edges to host non-edges.
std::optional<VertexMap> find_embedding(const Graph& pattern, const Graph& host, EmbedMode mode,
                                        const AnchorList& anchors = {}, SearchLimits limits = {});

std::uint64_t count_embeddings(const Graph& pattern, const Graph& host, EmbedMode mode,
                               const AnchorList& anchors = {}, SearchLimits limits = {});

// Visits every embedding; the callback returns false to stop early. The
// visit order is deterministic but not sorted.
void for_each_embedding(const Graph& pattern, const Graph& host, EmbedMode mode,
                        const AnchorList& anchors, SearchLimits limits,
                        const std::function<bool(const VertexMap&)>& visit);

// Complete search with seeded random candidate order; used to sample one
// embedding without biasing toward low indices.
std::optional<VertexMap> find_embedding_sampled(const Graph& pattern, const Graph& host,
                                                EmbedMode mode, const AnchorList& anchors,
                                                SearchLimits limits, std::mt19937_64& rng);

// Exhaustive enumeration over all injections, validated whole at each leaf.
// Guard rails: pattern <= 8 vertices, host <= 12.
std::uint64_t naive_count_embeddings(const Graph& pattern, const Graph& host, EmbedMode mode,
                                     const AnchorList& anchors = {});

// True iff host contains no subgraph copy of c. c must be connected and
// nonempty.
bool is_free(const Graph& host, const Graph& c, SearchLimits limits = {});

// True iff corner embeds into `by` as a pointed subgraph (basepoint to
// basepoint, subgraph mode).
bool prunes(const PointedGraph& corner, const PointedGraph& by, SearchLimits limits = {});

} // namespace cfree
