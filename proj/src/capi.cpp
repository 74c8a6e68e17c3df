#include "cfree.h"

#include "blocks.hpp"
#include "classify.hpp"
#include "embed.hpp"
#include "graph.hpp"
#include "hypergraph.hpp"
#include "prune.hpp"
#include "witness.hpp"

#include <cstring>
#include <new>
#include <string>

using namespace cfree;

struct cf_graph {
    Graph g;
};
struct cf_hypergraph {
    Hypergraph h;
};
struct cf_family {
    WitnessFamily f;
};

namespace {

thread_local std::string t_last_error;

cf_status fail(cf_status code, const std::string& message) {
    t_last_error = message;
    return code;
}

// Maps core exceptions onto status codes; the handler body runs inside the
// catch ladder.
template <typename Fn>
cf_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const BudgetExceeded& e) {
        return fail(CF_ERR_LIMIT, e.what());
    } catch (const std::overflow_error& e) {
        return fail(CF_ERR_LIMIT, e.what());
    } catch (const SizeLimitError& e) {
        return fail(CF_ERR_LIMIT, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(CF_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::runtime_error& e) {
        return fail(CF_ERR_PARSE, e.what());
    } catch (const std::bad_alloc&) {
        return fail(CF_ERR_LIMIT, "out of memory");
    } catch (...) {
        return fail(CF_ERR_INTERNAL, "unexpected internal error");
    }
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

cf_status require(bool ok, const char* what) {
    return ok ? CF_OK : fail(CF_ERR_INVALID_ARGUMENT, what);
}

AnchorList anchors_from(const int* anchors, size_t pairs) {
    AnchorList out;
    for (size_t i = 0; i < pairs; ++i) out.push_back({anchors[2 * i], anchors[2 * i + 1]});
    return out;
}

PruningSpec sigma_from(const cf_graph* const* sigma, const int* basepoints, size_t count) {
    PruningSpec spec;
    for (size_t i = 0; i < count; ++i) {
        if (!sigma[i]) throw std::invalid_argument("null sigma member");
        if (!sigma[i]->g.has_vertex(basepoints[i]))
            throw std::invalid_argument("sigma basepoint out of range");
        spec.members.push_back({sigma[i]->g, basepoints[i]});
    }
    return spec;
}

EdgeLabeling labeling_from(const cf_family* f, const uint8_t* labeling, size_t len) {
    if (static_cast<int>(len) != f->f.edge_count())
        throw std::invalid_argument("labeling length must equal the hyperedge count");
    EdgeLabeling out(labeling, labeling + len);
    for (uint8_t b : out)
        if (b > 1) throw std::invalid_argument("labeling entries must be 0 or 1");
    return out;
}

// Lemma-style block selection shared by the detachability entry points.
BlockPath block_path_or_throw(const Graph& c) {
    auto bp = as_block_path(c);
    if (!bp) throw std::invalid_argument("constraint is not a block path");
    return *bp;
}

} // namespace

extern "C" {

const char* cf_last_error(void) { return t_last_error.c_str(); }

void cf_string_free(char* s) { delete[] s; }

cf_status cf_graph_parse(const char* text, cf_graph** out, int* out_basepoint) {
    if (cf_status s = require(text && out, "null argument")) return s;
    return guarded([&] {
        ParsedGraph p = parse_graph(text);
        *out = new cf_graph{std::move(p.graph)};
        if (out_basepoint) *out_basepoint = p.basepoint.value_or(-1);
        return CF_OK;
    });
}

cf_status cf_graph_serialize(const cf_graph* g, int basepoint, char** out_text) {
    if (cf_status s = require(g && out_text, "null argument")) return s;
    return guarded([&] {
        std::optional<int> bp;
        if (basepoint >= 0) {
            if (!g->g.has_vertex(basepoint))
                throw std::invalid_argument("basepoint out of range");
            bp = basepoint;
        }
        *out_text = copy_string(serialize_graph(g->g, bp));
        return CF_OK;
    });
}

void cf_graph_free(cf_graph* g) { delete g; }

int cf_graph_vertex_count(const cf_graph* g) { return g ? g->g.vertex_count() : -1; }

int cf_graph_edge_count(const cf_graph* g) { return g ? g->g.edge_count() : -1; }

cf_status cf_graph_clique(int n, cf_graph** out) {
    if (cf_status s = require(out != nullptr, "null argument")) return s;
    return guarded([&] {
        *out = new cf_graph{clique(n)};
        return CF_OK;
    });
}

cf_status cf_graph_cycle(int n, cf_graph** out) {
    if (cf_status s = require(out != nullptr, "null argument")) return s;
    return guarded([&] {
        *out = new cf_graph{cycle(n)};
        return CF_OK;
    });
}

cf_status cf_graph_delete_edge(const cf_graph* g, int u, int v, cf_graph** out) {
    if (cf_status s = require(g && out, "null argument")) return s;
    return guarded([&] {
        *out = new cf_graph{delete_edge(g->g, u, v)};
        return CF_OK;
    });
}

cf_status cf_graph_attach_at(const cf_graph* g, int v, const cf_graph* part, int part_basepoint,
                             cf_graph** out) {
    if (cf_status s = require(g && part && out, "null argument")) return s;
    return guarded([&] {
        *out = new cf_graph{attach_at(g->g, v, PointedGraph{part->g, part_basepoint})};
        return CF_OK;
    });
}

cf_status cf_graph_disjoint_union(const cf_graph* const* gs, size_t count, cf_graph** out) {
    if (cf_status s = require(out && (count == 0 || gs), "null argument")) return s;
    return guarded([&] {
        std::vector<Graph> parts;
        for (size_t i = 0; i < count; ++i) {
            if (!gs[i]) throw std::invalid_argument("null graph in union");
            parts.push_back(gs[i]->g);
        }
        *out = new cf_graph{disjoint_union(parts)};
        return CF_OK;
    });
}

cf_status cf_find_embedding(const cf_graph* pattern, const cf_graph* host, int induced,
                            const int* anchors, size_t anchor_pairs, uint64_t node_budget,
                            int* out_map, int* out_found) {
    if (cf_status s = require(pattern && host && out_found && (anchor_pairs == 0 || anchors),
                              "null argument"))
        return s;
    return guarded([&] {
        auto found = find_embedding(pattern->g, host->g,
                                    induced ? EmbedMode::Induced : EmbedMode::Subgraph,
                                    anchors_from(anchors, anchor_pairs), SearchLimits{node_budget});
        *out_found = found ? 1 : 0;
        if (found && out_map)
            std::copy(found->begin(), found->end(), out_map);
        return CF_OK;
    });
}

cf_status cf_count_embeddings(const cf_graph* pattern, const cf_graph* host, int induced,
                              const int* anchors, size_t anchor_pairs, uint64_t node_budget,
                              uint64_t* out_count) {
    if (cf_status s = require(pattern && host && out_count && (anchor_pairs == 0 || anchors),
                              "null argument"))
        return s;
    return guarded([&] {
        *out_count = count_embeddings(pattern->g, host->g,
                                      induced ? EmbedMode::Induced : EmbedMode::Subgraph,
                                      anchors_from(anchors, anchor_pairs), SearchLimits{node_budget});
        return CF_OK;
    });
}

cf_status cf_is_free(const cf_graph* host, const cf_graph* c, uint64_t node_budget, int* out_free) {
    if (cf_status s = require(host && c && out_free, "null argument")) return s;
    return guarded([&] {
        *out_free = is_free(host->g, c->g, SearchLimits{node_budget}) ? 1 : 0;
        return CF_OK;
    });
}

cf_status cf_prune(const cf_graph* c, const cf_graph* const* sigma, const int* sigma_basepoints,
                   size_t sigma_count, cf_graph** out) {
    if (cf_status s = require(c && out && (sigma_count == 0 || (sigma && sigma_basepoints)),
                              "null argument"))
        return s;
    return guarded([&] {
        *out = new cf_graph{prune(c->g, sigma_from(sigma, sigma_basepoints, sigma_count)).graph};
        return CF_OK;
    });
}

cf_status cf_adjoin_copies(const cf_graph* g, const cf_graph* const* sigma,
                           const int* sigma_basepoints, size_t sigma_count, int copies,
                           cf_graph** out) {
    if (cf_status s = require(g && out && (sigma_count == 0 || (sigma && sigma_basepoints)),
                              "null argument"))
        return s;
    return guarded([&] {
        *out = new cf_graph{
            adjoin_copies(g->g, sigma_from(sigma, sigma_basepoints, sigma_count), copies)};
        return CF_OK;
    });
}

cf_status cf_pruning_transfer_check(const cf_graph* c, const cf_graph* const* sigma,
                                    const int* sigma_basepoints, size_t sigma_count,
                                    const cf_graph* g, int copies, uint64_t node_budget,
                                    int* out_holds) {
    if (cf_status s = require(c && g && out_holds && (sigma_count == 0 || (sigma && sigma_basepoints)),
                              "null argument"))
        return s;
    return guarded([&]() -> cf_status {
        TransferCheck check =
            pruning_transfer_check(c->g, sigma_from(sigma, sigma_basepoints, sigma_count), g->g,
                                   copies, SearchLimits{node_budget});
        if (!check.precondition_ok)
            return fail(CF_ERR_PRECONDITION,
                        "g already contains the pruned constraint; the transfer statement does "
                        "not apply");
        *out_holds = check.transfer_holds ? 1 : 0;
        return CF_OK;
    });
}

cf_status cf_detachability_hypothesis(const cf_graph* c, int block_index, uint64_t node_budget,
                                      int* out_holds) {
    if (cf_status s = require(c && out_holds, "null argument")) return s;
    return guarded([&] {
        BlockPath bp = block_path_or_throw(c->g);
        *out_holds =
            detachability_hypothesis(c->g, bp, block_index, nullptr, SearchLimits{node_budget}) ? 1
                                                                                                : 0;
        return CF_OK;
    });
}

cf_status cf_detachability_stress(const cf_graph* c, int block_index, int trials, int max_vertices,
                                  uint64_t seed, uint64_t node_budget, char** out_report_json) {
    if (cf_status s = require(c && out_report_json, "null argument")) return s;
    return guarded([&] {
        BlockPath bp = block_path_or_throw(c->g);
        SuspensionSpec spec = suspension_spec_for_block(c->g, bp, block_index);
        StressOptions opts;
        opts.trials = trials;
        opts.max_vertices = max_vertices;
        opts.seed = seed;
        opts.limits = SearchLimits{node_budget};
        StressReport report = detachability_stress(spec, opts);
        nlohmann::json j = report.to_json();
        j["block"] = block_index;
        j["residue"] = serialize_graph(spec.residue);
        j["hypothesis"] =
            detachability_hypothesis(c->g, bp, block_index, nullptr, SearchLimits{node_budget});
        *out_report_json = copy_string(j.dump(2));
        return CF_OK;
    });
}

cf_status cf_hypergraph_build(int k, int girth, int edge_count, int adaptive, cf_hypergraph** out) {
    if (cf_status s = require(out != nullptr, "null argument")) return s;
    return guarded([&] {
        *out = new cf_hypergraph{
            build_high_girth(k, girth, edge_count, adaptive ? BuildMode::Adaptive : BuildMode::Formula)};
        return CF_OK;
    });
}

cf_status cf_hypergraph_format(const cf_hypergraph* h, char** out_text) {
    if (cf_status s = require(h && out_text, "null argument")) return s;
    return guarded([&] {
        *out_text = copy_string(format_hypergraph(h->h));
        return CF_OK;
    });
}

cf_status cf_hypergraph_girth(const cf_hypergraph* h, int* out_girth) {
    if (cf_status s = require(h && out_girth, "null argument")) return s;
    return guarded([&] {
        auto g = berge_girth(h->h);
        *out_girth = g.value_or(-1);
        return CF_OK;
    });
}

void cf_hypergraph_free(cf_hypergraph* h) { delete h; }

cf_status cf_family_make(const cf_graph* c, int edge_count, int girth_margin, cf_family** out) {
    if (cf_status s = require(c && out, "null argument")) return s;
    return guarded([&] {
        *out = new cf_family{make_family(c->g, edge_count, girth_margin)};
        return CF_OK;
    });
}

int cf_family_edge_count(const cf_family* f) { return f ? f->f.edge_count() : -1; }

void cf_family_free(cf_family* f) { delete f; }

cf_status cf_family_instantiate(const cf_family* f, const uint8_t* labeling, size_t labeling_len,
                                cf_graph** out) {
    if (cf_status s = require(f && labeling && out, "null argument")) return s;
    return guarded([&] {
        *out = new cf_graph{instantiate(f->f, labeling_from(f, labeling, labeling_len))};
        return CF_OK;
    });
}

cf_status cf_family_check_cfree(const cf_family* f, const uint8_t* labeling, size_t labeling_len,
                                uint64_t node_budget, int* out_cfree) {
    if (cf_status s = require(f && labeling && out_cfree, "null argument")) return s;
    return guarded([&] {
        *out_cfree = check_cfree(f->f, labeling_from(f, labeling, labeling_len),
                                 SearchLimits{node_budget})
                         ? 1
                         : 0;
        return CF_OK;
    });
}

cf_status cf_family_check_distinguisher(const cf_family* f, const uint8_t* labeling,
                                        size_t labeling_len, int edge_index, uint64_t node_budget,
                                        int* out_created) {
    if (cf_status s = require(f && labeling && out_created, "null argument")) return s;
    return guarded([&]() -> cf_status {
        EdgeLabeling lab = labeling_from(f, labeling, labeling_len);
        if (edge_index < 0 || edge_index >= f->f.edge_count())
            return fail(CF_ERR_INVALID_ARGUMENT, "hyperedge index out of range");
        if (lab[edge_index])
            return fail(CF_ERR_PRECONDITION, "hyperedge is 1-labeled, nothing to restore");
        *out_created =
            check_distinguisher(f->f, lab, edge_index, SearchLimits{node_budget}) ? 1 : 0;
        return CF_OK;
    });
}

cf_status cf_family_check_rigidity(const cf_family* f, const uint8_t* labeling, size_t labeling_len,
                                   int trials, uint64_t seed, uint64_t node_budget,
                                   char** out_report_json) {
    if (cf_status s = require(f && labeling && out_report_json, "null argument")) return s;
    return guarded([&] {
        RigidityReport report = check_rigidity(f->f, labeling_from(f, labeling, labeling_len),
                                               trials, seed, SearchLimits{node_budget});
        *out_report_json = copy_string(report.to_json().dump(2));
        return CF_OK;
    });
}

cf_status cf_classify(const cf_graph* c, uint64_t node_budget, int* out_outcome,
                      char** out_trace_json) {
    if (cf_status s = require(c && out_outcome, "null argument")) return s;
    return guarded([&] {
        Verdict v = classify(c->g, ClassifyOptions{node_budget});
        switch (v.outcome) {
            case Outcome::Exists: *out_outcome = CF_OUTCOME_EXISTS; break;
            case Outcome::NotExists: *out_outcome = CF_OUTCOME_NOT_EXISTS; break;
            case Outcome::Open: *out_outcome = CF_OUTCOME_OPEN; break;
        }
        if (out_trace_json) *out_trace_json = copy_string(v.trace.dump(2));
        return CF_OK;
    });
}

cf_status cf_replay_trace(const char* trace_json, int* out_ok) {
    if (cf_status s = require(trace_json && out_ok, "null argument")) return s;
    return guarded([&] {
        nlohmann::json trace = nlohmann::json::parse(trace_json, nullptr, false);
        if (trace.is_discarded()) {
            *out_ok = 0;
            return CF_OK;
        }
        *out_ok = replay_trace(trace) ? 1 : 0;
        return CF_OK;
    });
}

cf_status cf_reduction_demo(const cf_graph* c, int family_edges, int stress_trials, uint64_t seed,
                            uint64_t node_budget, char** out_report_json) {
    if (cf_status s = require(c && out_report_json, "null argument")) return s;
    return guarded([&] {
        DemoOptions opts;
        if (family_edges > 0) opts.family_edges = family_edges;
        opts.stress_trials = stress_trials;
        opts.seed = seed;
        opts.node_budget = node_budget;
        *out_report_json = copy_string(reduction_demo(c->g, opts).dump(2));
        return CF_OK;
    });
}

} // extern "C"
