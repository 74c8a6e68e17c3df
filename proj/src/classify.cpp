#include "classify.hpp"

#include "prune.hpp"
#include "witness.hpp"

#include <algorithm>
#include <stdexcept>

namespace cfree {

namespace {

const char* kCiteHenson = "Henson 1971: complete constraints admit a universal graph";
const char* kCiteFK = "Furedi-Komjath 1997: a 2-connected constraint with a weakly universal "
                      "constraint-free graph is complete";
const char* kCiteTrees = "Cherlin-Shelah 2005 / Cherlin-Tallgren 2007: a tree constraint with a "
                         "universal constraint-free graph is a path or a near path";
const char* kCiteSolidity = "block path solidity: a block path constraint with a weakly universal "
                            "constraint-free graph has complete blocks";
const char* kCiteOpenComplete = "block paths of complete blocks are not settled either way";
const char* kCiteConjectures = "solidity and pathlike shape are conjectured necessary in general";

bool vertices_complete(const Graph& g, const std::vector<int>& verts) {
    for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = a + 1; b < verts.size(); ++b)
            if (!g.has_edge(verts[a], verts[b])) return false;
    return true;
}

bool is_tree(const Graph& g) {
    return is_connected(g) && g.edge_count() == g.vertex_count() - 1;
}

bool is_path_graph(const Graph& g) {
    if (!is_tree(g)) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > 2) return false;
    return true;
}

// Near path: deleting some single leaf edge leaves a path (paths count).
bool is_near_path(const Graph& g) {
    if (!is_tree(g)) return false;
    if (is_path_graph(g)) return true;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) != 1) continue;
        std::vector<int> rest;
        for (int w = 0; w < g.vertex_count(); ++w)
            if (w != v) rest.push_back(w);
        if (is_path_graph(induced_subgraph(g, rest))) return true;
    }
    return false;
}

BlockPath reversed(const BlockPath& bp) {
    BlockPath out = bp;
    std::reverse(out.blocks.begin(), out.blocks.end());
    std::reverse(out.cut_vertices.begin(), out.cut_vertices.end());
    return out;
}

// Orientation for the solidity analysis: first block no larger than the
// last, and on equal sizes prefer an incomplete first block.
BlockPath oriented_for_solidity(const Graph& g, const BlockPath& bp) {
    if (bp.length() < 2) return bp;
    std::size_t first = bp.blocks.front().size(), last = bp.blocks.back().size();
    if (first > last) return reversed(bp);
    if (first == last && vertices_complete(g, bp.blocks.front()) &&
        !vertices_complete(g, bp.blocks.back()))
        return reversed(bp);
    return bp;
}

std::vector<int> segment_vertices(const BlockPath& bp, int lo, int hi, int drop) {
    std::vector<int> verts;
    for (int b = lo; b <= hi; ++b)
        verts.insert(verts.end(), bp.blocks[b].begin(), bp.blocks[b].end());
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (drop >= 0) verts.erase(std::remove(verts.begin(), verts.end(), drop), verts.end());
    return verts;
}

nlohmann::json embedding_step(const std::string& rule, const std::string& cite, const Graph& pattern,
                              const Graph& host, SearchLimits limits) {
    auto found = find_embedding(pattern, host, EmbedMode::Subgraph, {}, limits);
    nlohmann::json step{{"rule", rule},
                        {"cite", cite},
                        {"check", "embedding"},
                        {"mode", "subgraph"},
                        {"pattern", serialize_graph(pattern)},
                        {"host", serialize_graph(host)},
                        {"found", found.has_value()}};
    step["map"] = found ? nlohmann::json(*found) : nlohmann::json(nullptr);
    return step;
}

} // namespace

const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Exists: return "Exists";
        case Outcome::NotExists: return "NotExists";
        default: return "Open";
    }
}

Verdict classify(const Graph& c, const ClassifyOptions& options) {
    if (c.vertex_count() == 0) throw std::invalid_argument("classify: empty constraint");
    if (!is_connected(c)) throw std::invalid_argument("classify: constraint must be connected");
    SearchLimits limits{options.node_budget};

    Verdict v;
    nlohmann::json steps = nlohmann::json::array();
    auto finish = [&](Outcome outcome, const std::string& rule, const std::string& note) {
        v.outcome = outcome;
        v.rule = rule;
        v.note = note;
        v.trace = {{"format", "cfree-trace-v1"},
                   {"constraint", serialize_graph(c)},
                   {"outcome", outcome_name(outcome)},
                   {"rule", rule},
                   {"steps", steps}};
        if (!note.empty()) v.trace["note"] = note;
        return v;
    };

    bool complete = is_complete(c);
    steps.push_back({{"rule", "complete-constraint"},
                     {"cite", kCiteHenson},
                     {"check", "complete"},
                     {"value", complete}});
    if (complete) return finish(Outcome::Exists, "complete-constraint", "");

    BlockDecomposition dec = decompose(c);
    steps.push_back({{"rule", "structure"},
                     {"cite", "block decomposition of the constraint"},
                     {"check", "block_decomposition"},
                     {"blocks", dec.blocks},
                     {"cut_vertices", dec.cut_vertices}});

    if (dec.blocks.size() == 1) {
        steps.push_back({{"rule", "fk-2-connected"},
                         {"cite", kCiteFK},
                         {"check", "complete"},
                         {"value", false}});
        return finish(Outcome::NotExists, "fk-2-connected", "");
    }

    bool tree = is_tree(c);
    steps.push_back(
        {{"rule", "tree-constraint"}, {"cite", kCiteTrees}, {"check", "tree"}, {"value", tree}});
    if (tree) {
        bool path = is_path_graph(c);
        steps.push_back(
            {{"rule", "tree-constraint"}, {"cite", kCiteTrees}, {"check", "path"}, {"value", path}});
        if (path)
            return finish(Outcome::Open, "tree-constraint",
                          "path constraint: the cited necessity test passes; existence is not "
                          "decided here");
        bool near = is_near_path(c);
        steps.push_back({{"rule", "tree-constraint"},
                         {"cite", kCiteTrees},
                         {"check", "near_path"},
                         {"value", near}});
        if (near)
            return finish(Outcome::Open, "tree-constraint",
                          "near path constraint: the cited necessity test passes; existence is "
                          "not decided here");
        return finish(Outcome::NotExists, "tree-constraint", "");
    }

    auto bp_raw = as_block_path(c);
    steps.push_back({{"rule", "structure"},
                     {"cite", "tree of blocks"},
                     {"check", "block_path"},
                     {"is_path", bp_raw.has_value()}});
    if (bp_raw) {
        BlockPath bp = oriented_for_solidity(c, *bp_raw);
        int len = bp.length();
        bool any_incomplete = false;
        for (const auto& block : bp.blocks) {
            bool bc = vertices_complete(c, block);
            steps.push_back({{"rule", "block-path-solidity"},
                             {"cite", kCiteSolidity},
                             {"check", "block_complete"},
                             {"block", block},
                             {"complete", bc}});
            if (!bc) any_incomplete = true;
        }
        if (any_incomplete) {
            std::vector<int> sizes;
            for (const auto& b : bp.blocks) sizes.push_back(static_cast<int>(b.size()));
            steps.push_back({{"rule", "block-path-solidity"},
                             {"cite", "orientation with the first block no larger than the last"},
                             {"block_sizes", sizes}});
            if (len >= 3) {
                // The weak symmetry condition: the induced first-plus-trimmed-
                // second segment embeds into the trimmed tail.
                int v1 = bp.cut_vertices[0], v2 = bp.cut_vertices[1];
                Graph pattern = induced_subgraph(c, segment_vertices(bp, 0, 1, v2));
                Graph host = induced_subgraph(c, segment_vertices(bp, 1, len - 1, v1));
                steps.push_back(embedding_step(
                    "block-path-solidity",
                    "weak symmetry: the head segment without the second cut vertex embeds "
                    "into the tail without the first",
                    pattern, host, limits));

                Graph left = induced_subgraph(c, segment_vertices(bp, 0, 1, v2));
                Graph right = induced_subgraph(c, segment_vertices(bp, 1, len - 1, v1));
                nlohmann::json detach = embedding_step(
                    "block-path-solidity",
                    "detachability hypothesis at the second block: left corner minus its root "
                    "embeds into the right corner minus its root, so the tail is detachable",
                    left, right, limits);
                detach["detaches"] = "tail past the second block";
                steps.push_back(detach);
            }
            return finish(Outcome::NotExists, "block-path-solidity", "");
        }
        return finish(Outcome::Open, "all-blocks-complete",
                      std::string(kCiteOpenComplete) +
                          "; block paths of complete blocks are reported open");
    }

    // Block tree is not a path: only conjectural annotations apply.
    nlohmann::json conjectural{{"status", "conjectural"}, {"cite", kCiteConjectures}};
    bool any_incomplete_block = false;
    for (const auto& block : dec.blocks)
        if (!vertices_complete(c, block)) any_incomplete_block = true;
    conjectural["solidity_prediction"] =
        any_incomplete_block ? "NotExists (some block is incomplete)" : "no prediction";
    try {
        auto witness = is_pathlike(c);
        steps.push_back({{"rule", "pathlike-shape"},
                         {"cite", "pathlike: a block path with pendant paths, at most one per "
                                  "vertex"},
                         {"check", "pathlike"},
                         {"value", witness.has_value()}});
        if (witness) {
            conjectural["pathlike"] = true;
            conjectural["pathlike_prediction"] = "no prediction";
            conjectural["whisker_attaches_at_cut_vertex"] = witness->attaches_at_core_cut_vertex;
        } else {
            conjectural["pathlike"] = false;
            conjectural["pathlike_prediction"] = "NotExists (not pathlike)";
        }
    } catch (const std::runtime_error&) {
        conjectural["pathlike"] = "unknown (beyond desk scale)";
    }
    finish(Outcome::Open, "beyond-block-paths", "block tree is not a path; conjectural layer only");
    v.trace["conjectural"] = conjectural;
    return v;
}

namespace {

bool replay_step(const Graph& c, const nlohmann::json& step) {
    std::string kind = step.at("check");
    if (kind == "complete") return is_complete(c) == step.at("value").get<bool>();
    if (kind == "tree") return is_tree(c) == step.at("value").get<bool>();
    if (kind == "path") return is_path_graph(c) == step.at("value").get<bool>();
    if (kind == "near_path") return is_near_path(c) == step.at("value").get<bool>();
    if (kind == "block_decomposition") {
        BlockDecomposition d = decompose(c);
        return nlohmann::json(d.blocks) == step.at("blocks") &&
               nlohmann::json(d.cut_vertices) == step.at("cut_vertices");
    }
    if (kind == "block_path") {
        auto bp = as_block_path(c);
        return bp.has_value() == step.at("is_path").get<bool>();
    }
    if (kind == "block_complete") {
        std::vector<int> block = step.at("block").get<std::vector<int>>();
        for (int v : block)
            if (!c.has_vertex(v)) return false;
        return vertices_complete(c, block) == step.at("complete").get<bool>();
    }
    if (kind == "embedding") {
        Graph pattern = parse_graph(step.at("pattern").get<std::string>()).graph;
        Graph host = parse_graph(step.at("host").get<std::string>()).graph;
        EmbedMode mode =
            step.at("mode").get<std::string>() == "induced" ? EmbedMode::Induced : EmbedMode::Subgraph;
        auto found = find_embedding(pattern, host, mode);
        if (found.has_value() != step.at("found").get<bool>()) return false;
        if (found) return nlohmann::json(*found) == step.at("map");
        return step.at("map").is_null();
    }
    if (kind == "pathlike") {
        return is_pathlike(c).has_value() == step.at("value").get<bool>();
    }
    return false; // unknown checkable step kinds fail the replay
}

} // namespace

bool replay_trace(const nlohmann::json& trace) {
    try {
        Graph c = parse_graph(trace.at("constraint").get<std::string>()).graph;
        for (const auto& step : trace.at("steps")) {
            if (!step.contains("check")) continue;
            if (!replay_step(c, step)) return false;
        }
        return true;
    } catch (...) {
        return false;
    }
}

namespace {

// The two-block follow-up: either the split family applies, or the smaller
// block is complete and corner pruning reduces to the 2-connected case.
nlohmann::json two_block_stage(const Graph& residual, const DemoOptions& options) {
    nlohmann::json out{{"constraint", serialize_graph(residual)}};
    auto bp = as_block_path(residual);
    if (!bp || bp->length() > 2) {
        out["route"] = "unexpected shape";
        return out;
    }
    std::vector<int> sizes;
    for (const auto& b : bp->blocks) sizes.push_back(static_cast<int>(b.size()));
    out["block_sizes"] = sizes;
    if (bp->length() == 1) {
        out["route"] = vertices_complete(residual, bp->blocks[0]) ? "single complete block"
                                                                  : "2-connected incomplete block";
        return out;
    }
    try {
        WitnessFamily fam = make_family(residual, options.family_edges);
        out["route"] = "split-family";
        out["family"] = {{"k", fam.k},
                         {"girth", fam.girth},
                         {"initial_size", fam.hg.initial_size},
                         {"hyperedges", fam.edge_count()},
                         {"clique_order", fam.clique_order},
                         {"carrier_vertices", fam.g1.vertex_count()}};
    } catch (const std::invalid_argument&) {
        // Smaller block complete, larger incomplete: prune the small corner
        // and land on a 2-connected incomplete constraint.
        out["route"] = "corner-prune";
        BlockPath oriented = oriented_for_solidity(residual, *bp);
        int root = oriented.cut_vertices[0];
        std::vector<int> small = oriented.blocks[0];
        std::vector<int> comp;
        for (int v : small)
            if (v != root) comp.push_back(v);
        Corner corner = make_corner(residual, root, comp);
        PruningSpec spec{{corner.pointed}};
        PruneResult pruned = prune(residual, spec);
        out["sigma"] = serialize_graph(corner.pointed.graph, corner.pointed.basepoint);
        out["pruned"] = serialize_graph(pruned.graph);
        out["pruned_two_connected_incomplete"] =
            decompose(pruned.graph).blocks.size() == 1 && !is_complete(pruned.graph);
    }
    return out;
}

} // namespace

nlohmann::json reduction_demo(const Graph& c, const DemoOptions& options) {
    SearchLimits limits{options.node_budget};
    nlohmann::json report{{"constraint", serialize_graph(c)}};
    auto bp_raw = as_block_path(c);
    if (!bp_raw) {
        report["applicable"] = false;
        report["reason"] = "constraint is not a block path";
        return report;
    }
    BlockPath bp = oriented_for_solidity(c, *bp_raw);
    int len = bp.length();
    bool any_incomplete = false;
    for (const auto& block : bp.blocks)
        if (!vertices_complete(c, block)) any_incomplete = true;
    if (!any_incomplete) {
        report["applicable"] = false;
        report["reason"] = "no incomplete block";
        return report;
    }
    report["applicable"] = true;
    std::vector<int> sizes;
    for (const auto& b : bp.blocks) sizes.push_back(static_cast<int>(b.size()));
    report["block_sizes"] = sizes;

    if (len <= 2) {
        report["route"] = "base-case";
        report["two_block_stage"] = two_block_stage(c, options);
        return report;
    }

    // Shape conditions of a minimal counterexample; they are consequences of
    // minimality, so a failure just means c is not of that shape.
    nlohmann::json conditions = nlohmann::json::array();
    bool all_hold = true;
    auto push_condition = [&](const std::string& name, bool holds, const std::string& detail) {
        conditions.push_back({{"condition", name}, {"holds", holds}, {"detail", detail}});
        if (!holds) all_hold = false;
    };
    push_condition("first block incomplete", !vertices_complete(c, bp.blocks.front()),
                   "the head block carries the incompleteness");
    push_condition("length at least 3", len >= 3, "shorter paths are base cases");
    bool middles_complete = true;
    for (int b = 1; b + 1 < len; ++b)
        if (!vertices_complete(c, bp.blocks[b])) middles_complete = false;
    push_condition("middle blocks complete", middles_complete,
                   "pruning the head block must leave complete blocks");
    Graph first_block = induced_subgraph(c, bp.blocks.front());
    Graph last_block = induced_subgraph(c, bp.blocks.back());
    bool last_into_first =
        embedding_exists(last_block, first_block, EmbedMode::Subgraph, {}, limits);
    bool cond4 = last_into_first || vertices_complete(c, bp.blocks.back());
    push_condition("last block complete unless it embeds into the first", cond4,
                   last_into_first ? "last block embeds into the first" : "last block checked complete");

    int v1 = bp.cut_vertices[0], v2 = bp.cut_vertices[1];
    Graph cond5_pattern = induced_subgraph(c, segment_vertices(bp, 0, 1, v2));
    Graph cond5_host = induced_subgraph(c, segment_vertices(bp, 1, len - 1, v1));
    auto cond5_map = find_embedding(cond5_pattern, cond5_host, EmbedMode::Subgraph, {}, limits);
    push_condition("weak symmetry embedding", cond5_map.has_value(),
                   "head segment without the second cut vertex into the tail without the first");
    report["shape_conditions"] = conditions;
    if (!all_hold) {
        report["stopped"] = "c is not a minimal counterexample shape";
        return report;
    }
    report["weak_symmetry_witness"] = *cond5_map;

    // Corner pruning of the head block.
    std::vector<int> comp;
    for (int v : bp.blocks.front())
        if (v != v1) comp.push_back(v);
    Corner head = make_corner(c, v1, comp);
    PruningSpec spec{{head.pointed}};
    PruneResult pruned = prune(c, spec);
    report["corner_prune"] = {{"sigma", serialize_graph(head.pointed.graph, head.pointed.basepoint)},
                              {"pruned", serialize_graph(pruned.graph)},
                              {"pruned_roots", pruned.pruned_roots}};

    // Detachability of the tail past the second block.
    VertexMap witness;
    bool hypothesis = detachability_hypothesis(c, bp, 2, &witness, limits);
    report["detachability"] = {{"block", 2}, {"hypothesis", hypothesis}};
    if (hypothesis) report["detachability"]["witness"] = witness;
    if (hypothesis && options.stress_trials > 0) {
        SuspensionSpec sspec = suspension_spec_for_block(c, bp, 2);
        StressOptions sopts;
        sopts.trials = options.stress_trials;
        sopts.seed = options.seed;
        sopts.limits = limits;
        report["detachability"]["stress"] = detachability_stress(sspec, sopts).to_json();
    }

    // The residual two-block constraint: head plus the trimmed second block.
    Graph residual = induced_subgraph(c, segment_vertices(bp, 0, 1, v2));
    report["residual"] = two_block_stage(residual, options);
    return report;
}

} // namespace cfree
