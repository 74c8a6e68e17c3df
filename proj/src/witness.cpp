#include "witness.hpp"

#include <algorithm>
#include <stdexcept>

namespace cfree {

namespace {

bool block_complete(const Graph& c, const std::vector<int>& block) {
    for (std::size_t a = 0; a < block.size(); ++a)
        for (std::size_t b = a + 1; b < block.size(); ++b)
            if (!c.has_edge(block[a], block[b])) return false;
    return true;
}

} // namespace

std::vector<int> WitnessFamily::clique_tail(int v) const {
    std::vector<int> out;
    for (int i = 0; i < clique_order - 1; ++i) out.push_back(kv_base + v * (clique_order - 1) + i);
    return out;
}

WitnessFamily make_family(const Graph& c, int edge_count, int girth_margin) {
    if (edge_count < 1) throw std::invalid_argument("make_family: need at least one hyperedge");
    if (girth_margin < 1) throw std::invalid_argument("make_family: girth margin must be >= 1");
    auto bp = as_block_path(c);
    if (!bp || bp->length() != 2)
        throw std::invalid_argument("make_family: constraint must be a block path of length 2");

    const auto& a = bp->blocks[0];
    const auto& b = bp->blocks[1];
    // Order so that |B1| <= |B2| and B1 is incomplete; otherwise the
    // construction does not apply (that is the conclusion direction).
    const std::vector<int>* small = nullptr;
    const std::vector<int>* large = nullptr;
    if (a.size() <= b.size() && !block_complete(c, a)) {
        small = &a;
        large = &b;
    } else if (b.size() <= a.size() && !block_complete(c, b)) {
        small = &b;
        large = &a;
    }
    if (!small)
        throw std::invalid_argument(
            "make_family: construction inapplicable (no incomplete block of minimal order)");

    WitnessFamily fam;
    fam.constraint.c = c;
    fam.constraint.block_small = *small;
    fam.constraint.block_large = *large;
    fam.constraint.n1 = static_cast<int>(small->size());
    fam.constraint.n2 = static_cast<int>(large->size());
    fam.constraint.cut_vertex = bp->cut_vertices[0];

    int vstar = fam.constraint.cut_vertex;
    std::optional<Edge> chosen;
    for (int w : *small) {
        if (w == vstar || !c.has_edge(vstar, w)) continue;
        Edge e = make_edge(vstar, w);
        if (!chosen || e < *chosen) chosen = e;
    }
    if (!chosen) throw std::invalid_argument("make_family: cut vertex isolated inside its block");
    fam.constraint.deleted_edge = *chosen;

    Graph b1 = induced_subgraph(c, *small);
    auto local = [&](int v) {
        return static_cast<int>(std::lower_bound(small->begin(), small->end(), v) - small->begin());
    };
    fam.constraint.b1_cut_pos = local(vstar);
    int other = chosen->first == vstar ? chosen->second : chosen->first;
    fam.constraint.b1_other_pos = local(other);
    fam.constraint.b1_minus = delete_edge(b1, fam.constraint.b1_cut_pos, fam.constraint.b1_other_pos);

    fam.k = fam.constraint.n1 + 1;
    fam.girth = std::max(fam.constraint.n1, fam.constraint.n2) + girth_margin;
    fam.hg = build_high_girth(fam.k, fam.girth, edge_count, BuildMode::Adaptive);

    for (const auto& e : fam.hg.edges) {
        // Sorted already: the pair is the two smallest members, the clique
        // part is the rest and keeps the maximum.
        fam.e2.push_back({e[0], e[1]});
        fam.e1.emplace_back(e.begin() + 2, e.end());
    }

    int base = static_cast<int>(fam.hg.vertex_count);
    std::vector<Edge> g0_edges;
    for (const auto& part : fam.e1)
        for (std::size_t i = 0; i < part.size(); ++i)
            for (std::size_t j = i + 1; j < part.size(); ++j)
                g0_edges.push_back(make_edge(part[i], part[j]));
    fam.g0 = Graph(base, std::move(g0_edges));

    fam.clique_order = fam.constraint.n2 + 1;
    fam.kv_base = base;
    int tail = fam.clique_order - 1;
    std::vector<Edge> g1_edges = fam.g0.edges();
    for (int v = 0; v < base; ++v) {
        std::vector<int> members{v};
        for (int i = 0; i < tail; ++i) members.push_back(base + v * tail + i);
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                g1_edges.push_back(make_edge(members[i], members[j]));
    }
    fam.g1 = Graph(base * (1 + tail), std::move(g1_edges));
    return fam;
}

Graph instantiate(const WitnessFamily& fam, const EdgeLabeling& labeling) {
    if (static_cast<int>(labeling.size()) != fam.edge_count())
        throw std::invalid_argument("instantiate: labeling must cover every hyperedge");
    std::vector<Edge> edges = fam.g1.edges();
    int next = fam.g1.vertex_count();
    const auto& tc = fam.constraint;
    for (int j = 0; j < fam.edge_count(); ++j) {
        int x = fam.e2[j][0], y = fam.e2[j][1];
        if (labeling[j]) {
            edges.push_back(make_edge(x, y));
            continue;
        }
        // Fresh broken-block copy; the smaller pair vertex plays the cut
        // vertex, remaining vertices take the next indices in local order.
        int fresh = 0;
        std::vector<int> remap(tc.n1, -1);
        for (int w = 0; w < tc.n1; ++w) {
            if (w == tc.b1_cut_pos)
                remap[w] = x;
            else if (w == tc.b1_other_pos)
                remap[w] = y;
            else
                remap[w] = next + fresh++;
        }
        for (const auto& [p, q] : tc.b1_minus.edges()) edges.push_back(make_edge(remap[p], remap[q]));
        next += tc.n1 - 2;
    }
    return Graph(next, std::move(edges));
}

bool check_cfree(const WitnessFamily& fam, const EdgeLabeling& labeling, SearchLimits limits) {
    return is_free(instantiate(fam, labeling), fam.constraint.c, limits);
}

bool check_distinguisher(const WitnessFamily& fam, const EdgeLabeling& labeling, int edge_index,
                         SearchLimits limits) {
    if (edge_index < 0 || edge_index >= fam.edge_count())
        throw std::invalid_argument("check_distinguisher: hyperedge index out of range");
    if (labeling.at(edge_index))
        throw std::invalid_argument("check_distinguisher: hyperedge is 1-labeled, nothing to restore");
    Graph base = instantiate(fam, labeling);
    std::vector<Edge> edges = base.edges();
    edges.push_back(make_edge(fam.e2[edge_index][0], fam.e2[edge_index][1]));
    Graph restored(base.vertex_count(), std::move(edges));
    return !is_free(restored, fam.constraint.c, limits);
}

PrefixPattern rigidity_prefix(const WitnessFamily& fam, int hyperedge) {
    if (hyperedge < 0 || hyperedge >= fam.edge_count())
        throw std::invalid_argument("rigidity_prefix: hyperedge index out of range");
    int top = static_cast<int>(fam.hg.initial_size) + hyperedge; // max of that hyperedge
    PrefixPattern out;
    for (int v = 0; v <= top; ++v) out.to_original.push_back(v);
    for (int v = 0; v <= top; ++v)
        for (int w : fam.clique_tail(v)) out.to_original.push_back(w);
    std::sort(out.to_original.begin(), out.to_original.end());
    out.graph = induced_subgraph(fam.g1, out.to_original);
    out.top = top; // hypergraph vertices keep their indices inside the prefix
    return out;
}

nlohmann::json RigidityReport::to_json() const {
    nlohmann::json vs = nlohmann::json::array();
    for (const auto& v : violations)
        vs.push_back({{"hyperedge", v.hyperedge},
                      {"trial", v.trial},
                      {"expected", v.expected},
                      {"got", v.got}});
    nlohmann::json j{{"trials", trials},
                     {"pairs_checked", pairs_checked},
                     {"candidate_checks", candidate_checks},
                     {"sample_failures", sample_failures},
                     {"violations", vs}};
    j["constraint_copy"] = constraint_copy ? nlohmann::json(*constraint_copy) : nlohmann::json(nullptr);
    return j;
}

namespace {

bool identity_embeds(const Graph& pattern, const std::vector<int>& to_original, const Graph& host) {
    for (const auto& [u, v] : pattern.edges())
        if (!host.has_edge(to_original[u], to_original[v])) return false;
    return true;
}

} // namespace

RigidityReport check_rigidity(const WitnessFamily& fam, const EdgeLabeling& labeling, int trials,
                              std::uint64_t seed, SearchLimits limits, const Graph* host_override) {
    RigidityReport report;
    report.trials = trials;
    if (trials <= 0) return report;

    Graph host = host_override ? *host_override : instantiate(fam, labeling);

    for (int j = 0; j < fam.edge_count(); ++j) {
        PrefixPattern prefix = rigidity_prefix(fam, j);
        for (int t = 0; t < trials; ++t) {
            std::optional<VertexMap> f1;
            if (t == 0 && identity_embeds(prefix.graph, prefix.to_original, host)) {
                f1 = VertexMap(prefix.to_original);
            } else {
                std::mt19937_64 rng(seed + 1000003ull * static_cast<std::uint64_t>(j) +
                                    static_cast<std::uint64_t>(t));
                try {
                    f1 = find_embedding_sampled(prefix.graph, host, EmbedMode::Subgraph, {}, limits, rng);
                } catch (const BudgetExceeded&) {
                    f1 = std::nullopt;
                }
            }
            if (!f1) {
                ++report.sample_failures;
                continue;
            }
            ++report.pairs_checked;

            AnchorList anchors;
            std::vector<char> taken(host.vertex_count(), 0);
            for (int i = 0; i < prefix.top; ++i) {
                anchors.push_back({i, (*f1)[i]});
                taken[(*f1)[i]] = 1;
            }
            int expected = (*f1)[prefix.top];
            for (int w = 0; w < host.vertex_count(); ++w) {
                if (w == expected || taken[w]) continue;
                ++report.candidate_checks;
                anchors.push_back({prefix.top, w});
                bool extends;
                try {
                    extends = embedding_exists(prefix.graph, host, EmbedMode::Subgraph, anchors, limits);
                } catch (const BudgetExceeded&) {
                    extends = false;
                    ++report.sample_failures;
                }
                anchors.pop_back();
                if (extends) report.violations.push_back({j, t, expected, w});
            }
        }
    }
    if (!report.violations.empty())
        report.constraint_copy =
            find_embedding(fam.constraint.c, host, EmbedMode::Subgraph, {}, limits);
    return report;
}

} // namespace cfree
