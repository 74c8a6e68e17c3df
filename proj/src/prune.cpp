#include "prune.hpp"

#include <algorithm>
#include <stdexcept>

namespace cfree {

PruneResult prune(const Graph& c, const PruningSpec& spec) {
    if (!is_connected(c)) throw std::invalid_argument("prune: constraint must be connected");
    std::vector<char> removed(c.vertex_count(), 0);
    PruneResult out;
    for (const Corner& corner : corners(c)) {
        bool hit = false;
        for (const auto& member : spec.members)
            if (prunes(corner.pointed, member)) {
                hit = true;
                break;
            }
        if (!hit) continue;
        out.pruned_roots.push_back(corner.root);
        for (int v : corner.vertex_set)
            if (v != corner.root) removed[v] = 1;
    }
    for (int v = 0; v < c.vertex_count(); ++v)
        if (!removed[v]) out.kept.push_back(v);
    out.graph = induced_subgraph(c, out.kept);
    return out;
}

Graph adjoin_copies(const Graph& g, const PruningSpec& spec, int copies) {
    if (copies < 1) throw std::invalid_argument("adjoin_copies: need at least one copy");
    std::vector<Edge> edges = g.edges();
    int next = g.vertex_count();
    for (int copy = 0; copy < copies; ++copy) {
        for (int v = 0; v < g.vertex_count(); ++v) {
            for (const auto& member : spec.members) {
                const Graph& s = member.graph;
                int base = next;
                auto remap = [&](int w) {
                    if (w == member.basepoint) return v;
                    return base + (w < member.basepoint ? w : w - 1);
                };
                for (const auto& [a, b] : s.edges()) edges.push_back(make_edge(remap(a), remap(b)));
                next += s.vertex_count() - 1;
            }
        }
    }
    return Graph(next, std::move(edges));
}

TransferCheck pruning_transfer_check(const Graph& c, const PruningSpec& spec, const Graph& g,
                                     int copies, SearchLimits limits) {
    TransferCheck out;
    PruneResult pruned = prune(c, spec);
    out.pruned = pruned.graph;
    if (pruned.graph.vertex_count() == 0) {
        // Nothing is free of an empty constraint; only an empty g qualifies.
        out.precondition_ok = g.vertex_count() == 0;
    } else {
        out.precondition_ok = is_free(g, pruned.graph, limits);
    }
    if (!out.precondition_ok) return out;
    Graph decorated = adjoin_copies(g, spec, copies);
    out.transfer_holds = decorated.vertex_count() == 0 || is_free(decorated, c, limits);
    return out;
}

SuspensionSpec make_suspension_spec(const Graph& c, int root, int corner_member_vertex) {
    if (!is_connected(c)) throw std::invalid_argument("suspension: constraint must be connected");
    std::vector<Corner> all = corners(c);
    const Corner* chosen = nullptr;
    for (const Corner& corner : all) {
        if (corner.root != root) continue;
        if (std::binary_search(corner.vertex_set.begin(), corner.vertex_set.end(),
                               corner_member_vertex) &&
            corner_member_vertex != root)
            chosen = &corner;
    }
    if (!chosen) throw std::invalid_argument("suspension: no corner at that root containing the vertex");

    SuspensionSpec spec;
    spec.constraint = c;
    spec.corner_root = root;

    std::vector<int> rest; // {root} plus everything outside the chosen corner
    for (int v = 0; v < c.vertex_count(); ++v)
        if (v == root || !std::binary_search(chosen->vertex_set.begin(), chosen->vertex_set.end(), v))
            rest.push_back(v);
    spec.attached_part.graph = induced_subgraph(c, rest);
    spec.attached_part.basepoint =
        static_cast<int>(std::lower_bound(rest.begin(), rest.end(), root) - rest.begin());

    std::vector<int> residue_verts;
    for (int v : chosen->vertex_set)
        if (v != root) residue_verts.push_back(v);
    spec.residue = induced_subgraph(c, residue_verts);
    return spec;
}

SuspensionSpec suspension_spec_for_block(const Graph& c, const BlockPath& bp, int block_index) {
    int len = bp.length();
    if (block_index <= 1 || block_index >= len)
        throw std::invalid_argument("suspension_spec_for_block: block must have two cut vertices");
    int v = bp.cut_vertices[block_index - 1]; // right cut vertex of the block
    // The chosen corner is the left one at v; pick any of its members.
    int member = -1;
    for (int w : bp.blocks[block_index - 1])
        if (w != v) member = w;
    return make_suspension_spec(c, v, member);
}

Graph suspend(const Graph& h, const SuspensionSpec& spec) {
    int hn = h.vertex_count();
    std::vector<Edge> edges = h.edges();
    for (const auto& [a, b] : spec.attached_part.graph.edges())
        edges.push_back({a + hn, b + hn});
    int apex = spec.attached_part.basepoint + hn;
    for (int v = 0; v < hn; ++v) edges.push_back(make_edge(v, apex));
    return Graph(hn + spec.attached_part.graph.vertex_count(), std::move(edges));
}

bool detachability_hypothesis(const Graph& c, const BlockPath& bp, int block_index,
                              VertexMap* witness, SearchLimits limits) {
    int len = bp.length();
    if (block_index <= 1 || block_index >= len)
        throw std::invalid_argument("detachability_hypothesis: block at an end of the path");
    int u = bp.cut_vertices[block_index - 2];
    int v = bp.cut_vertices[block_index - 1];

    auto collect = [&](int lo, int hi, int drop) {
        std::vector<int> verts;
        for (int b = lo; b <= hi; ++b)
            verts.insert(verts.end(), bp.blocks[b].begin(), bp.blocks[b].end());
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        verts.erase(std::remove(verts.begin(), verts.end(), drop), verts.end());
        return verts;
    };
    Graph left = induced_subgraph(c, collect(0, block_index - 1, v));
    Graph right = induced_subgraph(c, collect(block_index - 1, len - 1, u));
    auto found = find_embedding(left, right, EmbedMode::Subgraph, {}, limits);
    if (found && witness) *witness = *found;
    return found.has_value();
}

nlohmann::json StressReport::to_json() const {
    nlohmann::json j{{"trials", trials},     {"samples", samples},
                     {"skipped", skipped},   {"violations", violations},
                     {"trial_seeds", trial_seeds}, {"violating_trials", violating_trials}};
    j["witness"] = witness ? nlohmann::json(*witness) : nlohmann::json(nullptr);
    return j;
}

StressReport detachability_stress(const SuspensionSpec& spec, const StressOptions& options) {
    StressReport report;
    report.trials = options.trials;
    bool residue_empty = spec.residue.vertex_count() == 0;
    for (int t = 0; t < options.trials; ++t) {
        std::uint64_t trial_seed = options.seed + static_cast<std::uint64_t>(t);
        report.trial_seeds.push_back(trial_seed);
        std::mt19937_64 rng(trial_seed);

        std::optional<Graph> h;
        for (int attempt = 0; attempt < options.retry_cap && !h; ++attempt) {
            int n = static_cast<int>(rng() % (options.max_vertices + 1));
            const double probs[3] = {0.2, 0.5, 0.8};
            double p = probs[rng() % 3];
            std::vector<Edge> edges;
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b) {
                    double roll = static_cast<double>(rng() >> 11) * 0x1.0p-53;
                    if (roll < p) edges.push_back({a, b});
                }
            Graph candidate(n, std::move(edges));
            bool ok = residue_empty ? candidate.vertex_count() == 0
                                    : is_free(candidate, spec.residue, options.limits);
            if (ok) h = std::move(candidate);
        }
        if (!h) {
            ++report.skipped;
            continue;
        }
        ++report.samples;
        Graph suspended = suspend(*h, spec);
        if (!is_free(suspended, spec.constraint, options.limits)) {
            ++report.violations;
            report.violating_trials.push_back(t);
            std::string text = serialize_graph(*h);
            if (!report.witness || text < *report.witness) report.witness = text;
        }
    }
    return report;
}

std::vector<Graph> neighborhood_slices(const Graph& gamma, const PointedGraph& attached,
                                       EmbedMode mode) {
    std::vector<VertexMap> maps;
    for_each_embedding(attached.graph, gamma, mode, {}, {}, [&](const VertexMap& m) {
        maps.push_back(m);
        return true;
    });
    std::sort(maps.begin(), maps.end());
    std::vector<Graph> slices;
    for (const auto& m : maps) {
        std::vector<char> in_image(gamma.vertex_count(), 0);
        for (int w : m) in_image[w] = 1;
        int apex = m[attached.basepoint];
        std::vector<int> verts;
        for (int u = 0; u < gamma.vertex_count(); ++u)
            if (!in_image[u] && gamma.has_edge(u, apex)) verts.push_back(u);
        slices.push_back(induced_subgraph(gamma, verts));
    }
    return slices;
}

} // namespace cfree
