// Command-line front end; links only the public C API.
#include "cfree.h"

#include "CLI11.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

std::uint64_t g_node_budget = 0;
int g_exit = 0;

[[noreturn]] void die(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    std::exit(3);
}

void check(cf_status status, const std::string& context = "") {
    if (status == CF_OK) return;
    die(context.empty() ? cf_last_error() : context + ": " + cf_last_error());
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) die("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) die("cannot write " + path);
    out << text;
}

struct GraphHandle {
    cf_graph* ptr = nullptr;
    GraphHandle() = default;
    explicit GraphHandle(cf_graph* g) : ptr(g) {}
    GraphHandle(const GraphHandle&) = delete;
    GraphHandle& operator=(const GraphHandle&) = delete;
    GraphHandle(GraphHandle&& o) noexcept : ptr(o.ptr) { o.ptr = nullptr; }
    ~GraphHandle() { cf_graph_free(ptr); }
};

struct StringOut {
    char* ptr = nullptr;
    ~StringOut() { cf_string_free(ptr); }
    std::string str() const { return ptr ? ptr : ""; }
};

GraphHandle load_graph(const std::string& path, int* basepoint = nullptr) {
    cf_graph* g = nullptr;
    std::string text = read_file(path);
    if (cf_graph_parse(text.c_str(), &g, basepoint) != CF_OK)
        die(path + ": " + cf_last_error());
    return GraphHandle(g);
}

// ---- embed ----------------------------------------------------------------

struct EmbedOptions {
    std::string pattern, host;
    bool induced = false;
    std::vector<std::string> anchors;
};

void register_embed(CLI::App& parent) {
    auto opt = std::make_shared<EmbedOptions>();
    CLI::App* cmd = parent.add_subcommand("embed", "search for a (pointed) subgraph embedding");
    cmd->add_option("--pattern", opt->pattern, "pattern graph file")->required();
    cmd->add_option("--host", opt->host, "host graph file")->required();
    cmd->add_flag("--induced", opt->induced, "require an induced embedding");
    cmd->add_option("--anchor", opt->anchors, "force assignments, e.g. --anchor 0=3");
    cmd->callback([opt] {
        GraphHandle pattern = load_graph(opt->pattern);
        GraphHandle host = load_graph(opt->host);
        std::vector<int> anchors;
        for (const auto& a : opt->anchors) {
            auto eq = a.find('=');
            if (eq == std::string::npos) die("anchor must look like u=v: " + a);
            try {
                anchors.push_back(std::stoi(a.substr(0, eq)));
                anchors.push_back(std::stoi(a.substr(eq + 1)));
            } catch (const std::exception&) {
                die("anchor must look like u=v: " + a);
            }
        }
        std::vector<int> map(std::max(1, cf_graph_vertex_count(pattern.ptr)));
        int found = 0;
        check(cf_find_embedding(pattern.ptr, host.ptr, opt->induced ? 1 : 0, anchors.data(),
                                anchors.size() / 2, g_node_budget, map.data(), &found));
        if (!found) {
            std::cout << "none\n";
            g_exit = 1;
            return;
        }
        for (int v = 0; v < cf_graph_vertex_count(pattern.ptr); ++v)
            std::cout << v << " -> " << map[v] << "\n";
    });
}

// ---- prune ------------------------------------------------------------------

struct PruneOptions {
    std::string constraint;
    std::vector<std::string> sigma;
    std::string out;
};

void register_prune(CLI::App& parent) {
    auto opt = std::make_shared<PruneOptions>();
    CLI::App* cmd = parent.add_subcommand("prune", "corner-prune a constraint by pointed graphs");
    cmd->add_option("--constraint", opt->constraint, "constraint graph file")->required();
    cmd->add_option("--sigma", opt->sigma, "pointed graph files (with a p line)")->required();
    cmd->add_option("--out", opt->out, "write the pruned graph here instead of stdout");
    cmd->callback([opt] {
        GraphHandle constraint = load_graph(opt->constraint);
        std::vector<GraphHandle> members;
        std::vector<cf_graph*> raw;
        std::vector<int> basepoints;
        for (const auto& path : opt->sigma) {
            int bp = -1;
            members.push_back(load_graph(path, &bp));
            if (bp < 0) die(path + ": sigma member needs a p <basepoint> line");
            raw.push_back(members.back().ptr);
            basepoints.push_back(bp);
        }
        cf_graph* pruned = nullptr;
        check(cf_prune(constraint.ptr, raw.data(), basepoints.data(), raw.size(), &pruned));
        GraphHandle owner(pruned);
        StringOut text;
        check(cf_graph_serialize(pruned, -1, &text.ptr));
        if (opt->out.empty())
            std::cout << text.str();
        else
            write_file(opt->out, text.str());
    });
}

// ---- detach -----------------------------------------------------------------

struct DetachOptions {
    std::string constraint;
    int block = 2;
    int trials = 100;
    int max_vertices = 8;
    std::uint64_t seed = 1;
};

void register_detach(CLI::App& parent) {
    auto opt = std::make_shared<DetachOptions>();
    CLI::App* cmd =
        parent.add_subcommand("detach", "detachability hypothesis and stress run at a block");
    cmd->add_option("--constraint", opt->constraint, "block path constraint file")->required();
    cmd->add_option("--block", opt->block, "1-based block index with two cut vertices")->required();
    cmd->add_option("--trials", opt->trials, "random residue-free graphs to try");
    cmd->add_option("--max-n", opt->max_vertices, "largest random graph order");
    cmd->add_option("--seed", opt->seed, "base seed; trial t uses seed+t");
    cmd->callback([opt] {
        GraphHandle constraint = load_graph(opt->constraint);
        StringOut report;
        check(cf_detachability_stress(constraint.ptr, opt->block, opt->trials, opt->max_vertices,
                                      opt->seed, g_node_budget, &report.ptr));
        std::cout << report.str() << "\n";
    });
}

// ---- hypergraph ---------------------------------------------------------------

struct HypergraphOptions {
    int k = 3, g = 4, edges = 50;
    std::string mode = "adaptive";
    std::string out;
};

void register_hypergraph(CLI::App& parent) {
    auto opt = std::make_shared<HypergraphOptions>();
    CLI::App* cmd = parent.add_subcommand("hypergraph", "build a certified high-girth hypergraph");
    cmd->add_option("--k", opt->k, "uniformity")->required();
    cmd->add_option("--g", opt->g, "girth lower bound")->required();
    cmd->add_option("--edges", opt->edges, "number of hyperedges")->required();
    cmd->add_option("--mode", opt->mode, "adaptive|formula")
        ->check(CLI::IsMember({"adaptive", "formula"}));
    cmd->add_option("--out", opt->out, "write the hypergraph here instead of stdout");
    cmd->callback([opt] {
        cf_hypergraph* h = nullptr;
        check(cf_hypergraph_build(opt->k, opt->g, opt->edges, opt->mode == "adaptive" ? 1 : 0, &h));
        StringOut text;
        cf_status s = cf_hypergraph_format(h, &text.ptr);
        cf_hypergraph_free(h);
        check(s);
        if (opt->out.empty())
            std::cout << text.str();
        else
            write_file(opt->out, text.str());
    });
}

// ---- witness ------------------------------------------------------------------

std::vector<std::uint8_t> make_labeling(const std::string& mode, int edges, std::uint64_t seed) {
    std::vector<std::uint8_t> bits(edges, 0);
    if (mode == "all-zero") return bits;
    if (mode == "all-one") {
        std::fill(bits.begin(), bits.end(), 1);
        return bits;
    }
    if (mode == "random") {
        std::mt19937_64 rng(seed);
        for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1);
        return bits;
    }
    if (static_cast<int>(mode.size()) != edges)
        die("literal labeling must have exactly one bit per hyperedge (" + std::to_string(edges) +
            ")");
    for (int i = 0; i < edges; ++i) {
        if (mode[i] != '0' && mode[i] != '1') die("labeling bits must be 0 or 1");
        bits[i] = mode[i] == '1';
    }
    return bits;
}

struct WitnessOptions {
    std::string constraint;
    int edges = 10;
    std::string eps = "all-one";
    std::string checkKind;
    std::string out;
    std::uint64_t seed = 1;
    int trials = 1;
};

void register_witness(CLI::App& parent) {
    auto opt = std::make_shared<WitnessOptions>();
    CLI::App* cmd =
        parent.add_subcommand("witness", "build and check split-family witness graphs");
    cmd->add_option("--constraint", opt->constraint, "two-block constraint file")->required();
    cmd->add_option("--edges", opt->edges, "hyperedge truncation")->required();
    cmd->add_option("--eps", opt->eps, "bit string, or random|all-zero|all-one");
    cmd->add_option("--check", opt->checkKind, "cfree|distinguish|rigidity")
        ->check(CLI::IsMember({"cfree", "distinguish", "rigidity"}));
    cmd->add_option("--out", opt->out, "write the instantiated graph here");
    cmd->add_option("--seed", opt->seed, "seed for random labelings and rigidity sampling");
    cmd->add_option("--trials", opt->trials, "rigidity sampling trials");
    cmd->callback([opt] {
        GraphHandle constraint = load_graph(opt->constraint);
        cf_family* fam = nullptr;
        check(cf_family_make(constraint.ptr, opt->edges, 1, &fam));
        std::unique_ptr<cf_family, decltype(&cf_family_free)> owner(fam, cf_family_free);
        int edges = cf_family_edge_count(fam);
        std::vector<std::uint8_t> bits = make_labeling(opt->eps, edges, opt->seed);
        std::string bit_text;
        for (auto b : bits) bit_text += b ? '1' : '0';

        cf_graph* inst = nullptr;
        check(cf_family_instantiate(fam, bits.data(), bits.size(), &inst));
        GraphHandle inst_owner(inst);
        StringOut text;
        check(cf_graph_serialize(inst, -1, &text.ptr));
        if (!opt->out.empty())
            write_file(opt->out, text.str());
        else if (opt->checkKind.empty())
            std::cout << text.str();

        if (opt->checkKind.empty()) return;
        std::ostringstream report;
        bool ok = true;
        if (opt->checkKind == "cfree") {
            int free_of_c = 0;
            check(cf_family_check_cfree(fam, bits.data(), bits.size(), g_node_budget, &free_of_c));
            ok = free_of_c != 0;
            report << "{\n  \"check\": \"cfree\",\n  \"labeling\": \"" << bit_text
                   << "\",\n  \"cfree\": " << (free_of_c ? "true" : "false") << "\n}";
        } else if (opt->checkKind == "distinguish") {
            int restored = 0, created = 0;
            report << "{\n  \"check\": \"distinguish\",\n  \"labeling\": \"" << bit_text
                   << "\",\n  \"hyperedges\": [";
            bool first = true;
            for (int j = 0; j < edges; ++j) {
                if (bits[j]) continue;
                int hit = 0;
                check(cf_family_check_distinguisher(fam, bits.data(), bits.size(), j, g_node_budget,
                                                    &hit));
                ++restored;
                created += hit;
                report << (first ? "" : ", ") << "{\"edge\": " << j
                       << ", \"creates_copy\": " << (hit ? "true" : "false") << "}";
                first = false;
            }
            ok = restored == created;
            report << "],\n  \"restored\": " << restored << ",\n  \"created\": " << created
                   << "\n}";
        } else {
            StringOut rj;
            check(cf_family_check_rigidity(fam, bits.data(), bits.size(), opt->trials, opt->seed,
                                           g_node_budget ? g_node_budget : 20'000'000ull, &rj.ptr));
            std::string body = rj.str();
            ok = body.find("\"violations\": []") != std::string::npos;
            report << body;
        }
        std::cout << report.str() << "\n";
        if (!ok) g_exit = 1;
    });
}

// ---- classify -------------------------------------------------------------------

struct ClassifyRow {
    std::string name;
    std::string outcome;
    std::string rule;
    std::string note;
};

std::string json_field(const std::string& trace, const std::string& key) {
    // Single-level lookup of a string field in the trace; enough for rows.
    std::string needle = "\"" + key + "\": \"";
    auto at = trace.find(needle);
    if (at == std::string::npos) return "";
    auto end = trace.find('"', at + needle.size());
    return trace.substr(at + needle.size(), end - at - needle.size());
}

int classify_one(const std::string& path, const std::string& trace_out, ClassifyRow* row) {
    cf_graph* g = nullptr;
    std::string text = read_file(path);
    if (cf_graph_parse(text.c_str(), &g, nullptr) != CF_OK) {
        if (!row) die(path + ": " + cf_last_error());
        row->outcome = "error";
        row->note = cf_last_error();
        return 3;
    }
    GraphHandle owner(g);
    int outcome = 0;
    StringOut trace;
    if (cf_classify(g, g_node_budget, &outcome, &trace.ptr) != CF_OK) {
        if (!row) die(path + ": " + cf_last_error());
        row->outcome = "error";
        row->note = cf_last_error();
        return 3;
    }
    const char* names[] = {"Exists", "NotExists", "Open"};
    if (row) {
        row->outcome = names[outcome];
        row->rule = json_field(trace.str(), "rule");
        row->note = json_field(trace.str(), "note");
    }
    if (!trace_out.empty()) write_file(trace_out, trace.str());
    return outcome; // 0 Exists, 1 NotExists, 2 Open
}

struct ClassifyOptionsCli {
    std::string in, trace, dir, summary;
};

void register_classify(CLI::App& parent) {
    auto opt = std::make_shared<ClassifyOptionsCli>();
    CLI::App* cmd = parent.add_subcommand(
        "classify", "verdict for a constraint: Exists / NotExists / Open with a trace");
    cmd->add_option("--in", opt->in, "constraint graph file");
    cmd->add_option("--trace", opt->trace, "write the JSON trace here");
    cmd->add_option("--dir", opt->dir, "classify every file in this directory");
    cmd->add_option("--summary", opt->summary, "CSV summary for --dir mode");
    cmd->callback([opt] {
        if (opt->in.empty() == opt->dir.empty())
            die("classify needs exactly one of --in or --dir");
        if (!opt->in.empty()) {
            GraphHandle g = load_graph(opt->in);
            int outcome = 0;
            StringOut trace;
            check(cf_classify(g.ptr, g_node_budget, &outcome, &trace.ptr));
            if (opt->trace.empty()) {
                std::cout << trace.str() << "\n";
            } else {
                write_file(opt->trace, trace.str());
                const char* names[] = {"Exists", "NotExists", "Open"};
                std::cout << names[outcome] << "\n";
            }
            g_exit = outcome;
            return;
        }
        std::vector<std::string> files;
        for (const auto& entry : std::filesystem::directory_iterator(opt->dir))
            if (entry.is_regular_file()) files.push_back(entry.path().string());
        std::sort(files.begin(), files.end());
        std::vector<ClassifyRow> rows(files.size());
        std::atomic<std::size_t> next{0};
        unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                           static_cast<unsigned>(files.size())));
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < files.size(); i = next.fetch_add(1)) {
                    rows[i].name = files[i];
                    classify_one(files[i], "", &rows[i]);
                }
            });
        for (auto& t : pool) t.join();
        std::ostringstream csv;
        csv << "file,outcome,rule,note\n";
        for (const auto& row : rows)
            csv << row.name << "," << row.outcome << "," << row.rule << ",\"" << row.note << "\"\n";
        if (opt->summary.empty())
            std::cout << csv.str();
        else
            write_file(opt->summary, csv.str());
    });
}

// ---- reduce / replay -------------------------------------------------------------

struct ReduceOptions {
    std::string in;
    int edges = 8;
    int trials = 0;
    std::uint64_t seed = 1;
};

void register_reduce(CLI::App& parent) {
    auto opt = std::make_shared<ReduceOptions>();
    CLI::App* cmd = parent.add_subcommand(
        "reduce", "walk the reduction chain on a block path with an incomplete block");
    cmd->add_option("--in", opt->in, "constraint graph file")->required();
    cmd->add_option("--edges", opt->edges, "family truncation for the two-block stage");
    cmd->add_option("--trials", opt->trials, "optional detachability stress trials");
    cmd->add_option("--seed", opt->seed, "seed for the stress run");
    cmd->callback([opt] {
        GraphHandle g = load_graph(opt->in);
        StringOut report;
        check(cf_reduction_demo(g.ptr, opt->edges, opt->trials, opt->seed, g_node_budget,
                                &report.ptr));
        std::cout << report.str() << "\n";
    });
}

struct ReplayOptions {
    std::string trace;
};

void register_replay(CLI::App& parent) {
    auto opt = std::make_shared<ReplayOptions>();
    CLI::App* cmd = parent.add_subcommand("replay", "re-verify every checkable step of a trace");
    cmd->add_option("--trace", opt->trace, "trace JSON file")->required();
    cmd->callback([opt] {
        std::string text = read_file(opt->trace);
        int ok = 0;
        check(cf_replay_trace(text.c_str(), &ok));
        std::cout << (ok ? "trace verified\n" : "trace FAILED re-verification\n");
        if (!ok) g_exit = 1;
    });
}

void register_all(CLI::App& app) {
    register_embed(app);
    register_prune(app);
    register_detach(app);
    register_hypergraph(app);
    register_witness(app);
    register_classify(app);
    register_reduce(app);
    register_replay(app);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cfree: universality analysis for one forbidden connected subgraph"};
    app.require_subcommand(1);
    if (const char* budget = std::getenv("CFREE_NODE_BUDGET"))
        g_node_budget = std::strtoull(budget, nullptr, 10);

    register_all(app);
    // `verify <cmd>` works as a synonym for `<cmd>`.
    CLI::App* verify = app.add_subcommand("verify", "synonym namespace for all subcommands");
    verify->require_subcommand(1);
    register_all(*verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }
    return g_exit;
}
