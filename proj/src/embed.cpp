#include "embed.hpp"

#include <algorithm>

namespace cfree {

namespace {

struct Searcher {
    const Graph& pattern;
    const Graph& host;
    EmbedMode mode;
    SearchLimits limits;
    std::mt19937_64* rng = nullptr;

    std::vector<int> order;                      // search order over pattern vertices
    std::vector<std::vector<int>> back_adjacent; // per position: earlier pattern vertices adjacent
    std::vector<std::vector<int>> back_distant;  // induced mode: earlier, non-adjacent
    std::vector<int> anchor_of;                  // pattern vertex -> forced host vertex or -1
    std::vector<int> map;                        // pattern -> host
    std::vector<char> used;                      // host occupancy
    std::uint64_t nodes = 0;
    bool anchors_consistent = true;

    Searcher(const Graph& p, const Graph& h, EmbedMode m, const AnchorList& anchors,
             SearchLimits lim)
        : pattern(p), host(h), mode(m), limits(lim) {
        int pn = pattern.vertex_count();
        anchor_of.assign(pn, -1);
        std::vector<char> host_taken(host.vertex_count(), 0);
        for (const auto& [a, x] : anchors) {
            if (!pattern.has_vertex(a)) throw std::invalid_argument("anchor pattern vertex out of range");
            if (!host.has_vertex(x)) throw std::invalid_argument("anchor host vertex out of range");
            if (anchor_of[a] != -1 && anchor_of[a] != x)
                throw std::invalid_argument("anchors not injective (pattern vertex anchored twice)");
            if (anchor_of[a] == -1 && host_taken[x])
                throw std::invalid_argument("anchors not injective (host vertex anchored twice)");
            anchor_of[a] = x;
            host_taken[x] = 1;
        }
        // Anchored pairs must already respect the mode; if they cannot, no
        // total map extends them and the search is unsatisfiable.
        for (int a = 0; a < pn && anchors_consistent; ++a) {
            if (anchor_of[a] == -1) continue;
            if (host.degree(anchor_of[a]) < pattern.degree(a)) anchors_consistent = false;
            for (int b = a + 1; b < pn; ++b) {
                if (anchor_of[b] == -1) continue;
                bool pe = pattern.has_edge(a, b);
                bool he = host.has_edge(anchor_of[a], anchor_of[b]);
                if (pe && !he) anchors_consistent = false;
                if (mode == EmbedMode::Induced && !pe && he) anchors_consistent = false;
            }
        }
        build_order();
        map.assign(pn, -1);
        used.assign(host.vertex_count(), 0);
    }

    // Anchored vertices first, then greedily maximize the number of already
    // placed neighbors; ties broken by total degree, then index.
    void build_order() {
        int pn = pattern.vertex_count();
        std::vector<char> chosen(pn, 0);
        std::vector<int> back_degree(pn, 0);
        auto take = [&](int v) {
            order.push_back(v);
            chosen[v] = 1;
            for (int w : pattern.neighbors(v))
                if (!chosen[w]) ++back_degree[w];
        };
        for (int v = 0; v < pn; ++v)
            if (anchor_of[v] != -1) take(v);
        while (static_cast<int>(order.size()) < pn) {
            int best = -1;
            for (int v = 0; v < pn; ++v) {
                if (chosen[v]) continue;
                if (best == -1 || back_degree[v] > back_degree[best] ||
                    (back_degree[v] == back_degree[best] && pattern.degree(v) > pattern.degree(best)))
                    best = v;
            }
            take(best);
        }
        back_adjacent.assign(pn, {});
        back_distant.assign(pn, {});
        for (int i = 0; i < pn; ++i) {
            int v = order[i];
            for (int j = 0; j < i; ++j) {
                int u = order[j];
                if (pattern.has_edge(u, v))
                    back_adjacent[i].push_back(u);
                else if (mode == EmbedMode::Induced)
                    back_distant[i].push_back(u);
            }
        }
    }

    bool feasible(int v, int w) const {
        if (used[w]) return false;
        if (host.degree(w) < pattern.degree(v)) return false;
        return true;
    }

    bool consistent(int pos, int w) const {
        for (int u : back_adjacent[pos])
            if (!host.has_edge(map[u], w)) return false;
        for (int u : back_distant[pos])
            if (host.has_edge(map[u], w)) return false;
        return true;
    }

    // Depth-first over positions; returns false when the visitor stopped.
    bool run(int pos, const std::function<bool(const VertexMap&)>& visit) {
        if (pos == static_cast<int>(order.size())) return visit(map);
        int v = order[pos];
        if (limits.node_budget && nodes >= limits.node_budget) throw BudgetExceeded(limits.node_budget);

        if (anchor_of[v] != -1) {
            int w = anchor_of[v];
            ++nodes;
            if (!feasible(v, w) || !consistent(pos, w)) return true;
            map[v] = w;
            used[w] = 1;
            bool keep = run(pos + 1, visit);
            used[w] = 0;
            map[v] = -1;
            return keep;
        }

        std::vector<int> candidates;
        if (!back_adjacent[pos].empty()) {
            for (int w : host.neighbors(map[back_adjacent[pos][0]]))
                if (feasible(v, w)) candidates.push_back(w);
        } else {
            for (int w = 0; w < host.vertex_count(); ++w)
                if (feasible(v, w)) candidates.push_back(w);
        }
        if (rng) std::shuffle(candidates.begin(), candidates.end(), *rng);
        for (int w : candidates) {
            ++nodes;
            if (limits.node_budget && nodes > limits.node_budget) throw BudgetExceeded(limits.node_budget);
            if (!consistent(pos, w)) continue;
            map[v] = w;
            used[w] = 1;
            bool keep = run(pos + 1, visit);
            used[w] = 0;
            map[v] = -1;
            if (!keep) return false;
        }
        return true;
    }

    void search(const std::function<bool(const VertexMap&)>& visit) {
        if (!anchors_consistent) return;
        if (pattern.vertex_count() > host.vertex_count()) return;
        run(0, visit);
    }
};

} // namespace

void for_each_embedding(const Graph& pattern, const Graph& host, EmbedMode mode,
                        const AnchorList& anchors, SearchLimits limits,
                        const std::function<bool(const VertexMap&)>& visit) {
    Searcher s(pattern, host, mode, anchors, limits);
    s.search(visit);
}

bool embedding_exists(const Graph& pattern, const Graph& host, EmbedMode mode,
                      const AnchorList& anchors, SearchLimits limits) {
    bool found = false;
    for_each_embedding(pattern, host, mode, anchors, limits, [&](const VertexMap&) {
        found = true;
        return false;
    });
    return found;
}

std::optional<VertexMap> find_embedding(const Graph& pattern, const Graph& host, EmbedMode mode,
                                        const AnchorList& anchors, SearchLimits limits) {
    if (!embedding_exists(pattern, host, mode, anchors, limits)) return std::nullopt;
    // Pin pattern vertices one at a time to the least workable host vertex;
    // the result is the lexicographically least embedding by pattern index.
    AnchorList fixed = anchors;
    std::vector<char> pinned(pattern.vertex_count(), 0);
    std::vector<char> taken(host.vertex_count(), 0);
    for (const auto& [a, x] : anchors) {
        pinned[a] = 1;
        taken[x] = 1;
    }
    VertexMap result(pattern.vertex_count(), -1);
    for (const auto& [a, x] : anchors) result[a] = x;
    for (int v = 0; v < pattern.vertex_count(); ++v) {
        if (pinned[v]) continue;
        for (int w = 0; w < host.vertex_count(); ++w) {
            if (taken[w]) continue;
            fixed.push_back({v, w});
            if (embedding_exists(pattern, host, mode, fixed, limits)) {
                result[v] = w;
                taken[w] = 1;
                break;
            }
            fixed.pop_back();
        }
    }
    return result;
}

std::uint64_t count_embeddings(const Graph& pattern, const Graph& host, EmbedMode mode,
                               const AnchorList& anchors, SearchLimits limits) {
    std::uint64_t count = 0;
    for_each_embedding(pattern, host, mode, anchors, limits, [&](const VertexMap&) {
        ++count;
        return true;
    });
    return count;
}

std::optional<VertexMap> find_embedding_sampled(const Graph& pattern, const Graph& host,
                                                EmbedMode mode, const AnchorList& anchors,
                                                SearchLimits limits, std::mt19937_64& rng) {
    Searcher s(pattern, host, mode, anchors, limits);
    s.rng = &rng;
    std::optional<VertexMap> out;
    s.search([&](const VertexMap& m) {
        out = m;
        return false;
    });
    return out;
}

std::uint64_t naive_count_embeddings(const Graph& pattern, const Graph& host, EmbedMode mode,
                                     const AnchorList& anchors) {
    int pn = pattern.vertex_count();
    int hn = host.vertex_count();
    if (pn > 8 || hn > 12) throw std::invalid_argument("naive_count_embeddings: size guard exceeded");

    std::vector<int> map(pn, -1);
    std::vector<char> used(hn, 0);
    std::uint64_t count = 0;

    auto valid = [&]() {
        for (const auto& [a, x] : anchors) {
            if (a < 0 || a >= pn || x < 0 || x >= hn) throw std::invalid_argument("anchor out of range");
            if (map[a] != x) return false;
        }
        for (int u = 0; u < pn; ++u)
            for (int v = u + 1; v < pn; ++v) {
                bool pe = pattern.has_edge(u, v);
                bool he = host.has_edge(map[u], map[v]);
                if (pe && !he) return false;
                if (mode == EmbedMode::Induced && !pe && he) return false;
            }
        return true;
    };

    std::function<void(int)> rec = [&](int v) {
        if (v == pn) {
            if (valid()) ++count;
            return;
        }
        for (int w = 0; w < hn; ++w) {
            if (used[w]) continue;
            map[v] = w;
            used[w] = 1;
            rec(v + 1);
            used[w] = 0;
            map[v] = -1;
        }
    };
    rec(0);
    return count;
}

bool is_free(const Graph& host, const Graph& c, SearchLimits limits) {
    if (c.vertex_count() == 0) throw std::invalid_argument("is_free: empty forbidden graph");
    if (!is_connected(c)) throw std::invalid_argument("is_free: forbidden graph must be connected");
    return !embedding_exists(c, host, EmbedMode::Subgraph, {}, limits);
}

bool prunes(const PointedGraph& corner, const PointedGraph& by, SearchLimits limits) {
    return embedding_exists(corner.graph, by.graph, EmbedMode::Subgraph,
                            {{corner.basepoint, by.basepoint}}, limits);
}

} // namespace cfree
