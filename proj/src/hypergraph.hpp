#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cfree {

// Raised when a construction would outgrow the allocation guard or exhaust
// its retry budget.
class SizeLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Hypergraph {
    std::int64_t vertex_count = 0; // vertices are 0..vertex_count-1
    int k = 0;                     // uniformity
    std::int64_t initial_size = 0; // N: edge i contains N+i-1 and N+i and stays within [0, N+i]
    std::vector<std::vector<int>> edges; // sorted vertex lists, in construction order
};

// Shortest cycle length under the alternating vertex/edge definition
// (distinct vertices, distinct edges, length >= 2); nullopt when acyclic.
std::optional<int> berge_girth(const Hypergraph& h);

enum class BuildMode { Formula, Adaptive };

// (k-1) * sum_{j=0}^{g} (k(k-1))^j + 1: a radius-g ball bound in the
// conflict graph, enough for every greedy step to succeed. Throws
// std::overflow_error when the value does not fit.
std::uint64_t formula_initial_size(int k, int g);

// Greedy construction: at step i pick X of size k-1 among unsaturated
// vertices, containing N+i-1, pairwise further than g apart in the conflict
// graph, and set edge i = X + {N+i}. Adaptive mode starts at N = k*g and
// doubles on failure; formula mode uses formula_initial_size. The result is
// certified before being returned.
Hypergraph build_high_girth(int k, int g, int edge_count, BuildMode mode);

struct HypergraphCheck {
    bool uniform = false;
    bool girth_ok = false;
    bool containment = false;     // N+i-1, N+i in edge i, edge i within [0, N+i]
    bool degree_cap = false;      // no vertex in more than k edges
    bool max_member = false;      // max of edge i is N+i
    bool pair_intersections = false; // girth > 2 forces pairwise meets <= 1
    std::optional<int> girth;

    bool all() const {
        return uniform && girth_ok && containment && degree_cap && max_member && pair_intersections;
    }
};

// Independent post-hoc certification; does not reuse builder state.
HypergraphCheck certify(const Hypergraph& h, int k, int g);

// `N <n> k <k>` line, then one line of sorted vertex indices per hyperedge.
std::string format_hypergraph(const Hypergraph& h);

} // namespace cfree
