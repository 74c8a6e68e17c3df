#include "hypergraph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace cfree {

namespace {

constexpr std::int64_t kVertexLimit = 50'000'000;

// Girth of a simple graph by BFS from every node: per root the candidate
// dist[u]+dist[w]+1 over non-tree edges may overshoot, but the minimum over
// all roots is exact.
std::optional<int> simple_graph_girth(const std::vector<std::vector<int>>& adj) {
    int n = static_cast<int>(adj.size());
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(n), parent(n);
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::deque<int> queue{root};
        dist[root] = 0;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            if (2 * dist[u] >= best) break;
            for (int w : adj[u]) {
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (w != parent[u]) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

} // namespace

std::optional<int> berge_girth(const Hypergraph& h) {
    // Alternating cycles correspond exactly to cycles of the bipartite
    // incidence graph at twice the length.
    std::unordered_map<std::int64_t, int> vertex_node;
    std::vector<std::vector<int>> adj;
    auto node_for = [&](std::int64_t v) {
        auto it = vertex_node.find(v);
        if (it != vertex_node.end()) return it->second;
        int id = static_cast<int>(adj.size());
        adj.emplace_back();
        vertex_node.emplace(v, id);
        return id;
    };
    // Vertices first (only those that appear), then one node per hyperedge.
    for (const auto& e : h.edges)
        for (int v : e) node_for(v);
    for (const auto& e : h.edges) {
        int en = static_cast<int>(adj.size());
        adj.emplace_back();
        for (int v : e) {
            int vn = vertex_node.at(v);
            adj[en].push_back(vn);
            adj[vn].push_back(en);
        }
    }
    auto g = simple_graph_girth(adj);
    if (!g) return std::nullopt;
    return *g / 2;
}

std::uint64_t formula_initial_size(int k, int g) {
    if (k < 2 || g < 2) throw std::invalid_argument("formula_initial_size: need k >= 2, g >= 2");
    const std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t degree = static_cast<std::uint64_t>(k) * (k - 1);
    std::uint64_t ball = 0, power = 1;
    for (int j = 0; j <= g; ++j) {
        if (cap - ball < power) throw std::overflow_error("formula_initial_size: ball bound overflow");
        ball += power;
        if (j < g) {
            if (degree != 0 && power > cap / degree)
                throw std::overflow_error("formula_initial_size: ball bound overflow");
            power *= degree;
        }
    }
    if (ball > (cap - 1) / (k - 1)) throw std::overflow_error("formula_initial_size: result overflow");
    return static_cast<std::uint64_t>(k - 1) * ball + 1;
}

namespace {

struct GreedyState {
    std::unordered_map<int, int> memberships;
    std::unordered_map<int, std::vector<int>> conflict;

    int member_count(int v) const {
        auto it = memberships.find(v);
        return it == memberships.end() ? 0 : it->second;
    }

    // Marks everything within distance `limit` of u in the conflict graph
    // built from earlier hyperedges. A vertex is eligible for X exactly when
    // it is unmarked, so pairwise distances stay above the limit.
    void mark_ball(int u, int limit, std::unordered_set<int>& marked) const {
        std::unordered_map<int, int> dist;
        std::deque<int> queue{u};
        dist[u] = 0;
        marked.insert(u);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            int d = dist[v];
            if (d == limit) continue;
            auto it = conflict.find(v);
            if (it == conflict.end()) continue;
            for (int w : it->second) {
                if (dist.count(w)) continue;
                dist[w] = d + 1;
                marked.insert(w);
                queue.push_back(w);
            }
        }
    }

    void add_edge(const std::vector<int>& e) {
        for (int v : e) ++memberships[v];
        for (std::size_t a = 0; a < e.size(); ++a)
            for (std::size_t b = a + 1; b < e.size(); ++b) {
                conflict[e[a]].push_back(e[b]);
                conflict[e[b]].push_back(e[a]);
            }
    }
};

bool attempt_build(int k, int g, int edge_count, std::int64_t n0, Hypergraph& out) {
    GreedyState state;
    out.edges.clear();
    out.k = k;
    out.initial_size = n0;
    out.vertex_count = n0 + edge_count;
    for (int i = 0; i < edge_count; ++i) {
        int fresh = static_cast<int>(n0) + i;
        int required = fresh - 1;
        std::vector<int> x{required};
        // Smallest eligible indices first; distances measured in the conflict
        // graph as it stands before this edge is added.
        std::unordered_set<int> blocked;
        state.mark_ball(required, g, blocked);
        for (int u = 0; u < fresh && static_cast<int>(x.size()) < k - 1; ++u) {
            if (state.member_count(u) >= k) continue;
            if (blocked.count(u)) continue;
            x.push_back(u);
            state.mark_ball(u, g, blocked);
        }
        if (static_cast<int>(x.size()) < k - 1) return false;
        x.push_back(fresh);
        std::sort(x.begin(), x.end());
        state.add_edge(x);
        out.edges.push_back(std::move(x));
    }
    return true;
}

} // namespace

Hypergraph build_high_girth(int k, int g, int edge_count, BuildMode mode) {
    if (k < 2) throw std::invalid_argument("build_high_girth: k must be >= 2");
    if (g < 2) throw std::invalid_argument("build_high_girth: girth target must be >= 2");
    if (edge_count < 1) throw std::invalid_argument("build_high_girth: need at least one hyperedge");

    Hypergraph h;
    if (mode == BuildMode::Formula) {
        std::uint64_t n0 = formula_initial_size(k, g);
        if (n0 > static_cast<std::uint64_t>(kVertexLimit) - edge_count)
            throw SizeLimitError("build_high_girth: formula-mode size too large to allocate (N = " +
                                     std::to_string(n0) + ")");
        if (!attempt_build(k, g, edge_count, static_cast<std::int64_t>(n0), h))
            throw std::runtime_error("build_high_girth: greedy step failed at formula size N = " +
                                     std::to_string(n0));
    } else {
        std::int64_t n0 = static_cast<std::int64_t>(k) * g;
        const int retry_cap = 24;
        int attempt = 0;
        for (;; n0 *= 2, ++attempt) {
            if (attempt >= retry_cap || n0 > kVertexLimit - edge_count)
                throw SizeLimitError("build_high_girth: adaptive mode failed after " +
                                         std::to_string(attempt) + " attempts (k=" + std::to_string(k) +
                                         ", g=" + std::to_string(g) + ", edges=" +
                                         std::to_string(edge_count) + ", last N=" + std::to_string(n0 / 2) +
                                         ")");
            if (attempt_build(k, g, edge_count, n0, h)) break;
        }
    }

    HypergraphCheck check = certify(h, k, g);
    if (!check.all()) throw std::runtime_error("build_high_girth: certification failed on construction");
    return h;
}

HypergraphCheck certify(const Hypergraph& h, int k, int g) {
    HypergraphCheck c;
    c.uniform = true;
    for (const auto& e : h.edges)
        if (static_cast<int>(e.size()) != k) c.uniform = false;

    c.girth = berge_girth(h);
    c.girth_ok = !c.girth || *c.girth >= g;

    c.containment = true;
    c.max_member = true;
    std::int64_t n0 = h.initial_size;
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
        const auto& e = h.edges[i];
        std::int64_t lo = n0 + static_cast<std::int64_t>(i) - 1;
        std::int64_t hi = n0 + static_cast<std::int64_t>(i);
        bool has_lo = false, has_hi = false;
        for (int v : e) {
            if (v == lo) has_lo = true;
            if (v == hi) has_hi = true;
            if (v < 0 || v > hi) c.containment = false;
        }
        if (!has_lo || !has_hi) c.containment = false;
        if (e.empty() || *std::max_element(e.begin(), e.end()) != hi) c.max_member = false;
    }

    std::unordered_map<int, int> memberships;
    for (const auto& e : h.edges)
        for (int v : e) ++memberships[v];
    c.degree_cap = true;
    for (const auto& [v, m] : memberships)
        if (m > k) c.degree_cap = false;

    c.pair_intersections = true;
    if (!c.girth || *c.girth > 2) {
        for (std::size_t i = 0; i < h.edges.size(); ++i) {
            std::unordered_set<int> s(h.edges[i].begin(), h.edges[i].end());
            for (std::size_t j = i + 1; j < h.edges.size(); ++j) {
                int shared = 0;
                for (int v : h.edges[j])
                    if (s.count(v)) ++shared;
                if (shared > 1) c.pair_intersections = false;
            }
        }
    }
    return c;
}

std::string format_hypergraph(const Hypergraph& h) {
    std::ostringstream out;
    out << "N " << h.initial_size << " k " << h.k << "\n";
    for (const auto& e : h.edges) {
        for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
        out << "\n";
    }
    return out.str();
}

} // namespace cfree
