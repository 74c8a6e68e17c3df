#pragma once

#include "blocks.hpp"
#include "embed.hpp"
#include "graph.hpp"

#include "json.hpp"

#include <cstdint>
#include <string>

namespace cfree {

enum class Outcome { Exists, NotExists, Open };

const char* outcome_name(Outcome o);

struct Verdict {
    Outcome outcome = Outcome::Open;
    std::string rule; // the rule that settled the verdict
    std::string note; // optional qualifier (near-path cases, open cases)
    nlohmann::json trace; // self-contained: constraint text, steps, citations
};

struct ClassifyOptions {
    std::uint64_t node_budget = 0;
};

// Decision order: complete constraints admit a universal graph; 2-connected
// incomplete ones do not; trees reduce to the path / near-path split; block
// paths with an incomplete block are ruled out by solidity; all-complete
// block paths stay open; everything else is open with conjectural
// annotations only.
Verdict classify(const Graph& c, const ClassifyOptions& options = {});

// Re-executes every checkable step recorded in a trace; true iff all of
// them still come out the same.
bool replay_trace(const nlohmann::json& trace);

struct DemoOptions {
    int family_edges = 8;   // truncation used when the two-block stage applies
    int stress_trials = 0;  // optional detachability stress run
    std::uint64_t seed = 1;
    std::uint64_t node_budget = 0;
};

// Walks the reduction chain on a block path with an incomplete block: the
// shape conditions, the first-block corner pruning, the tail detachability
// witness, and the residual two-block constraint with its follow-up stage.
nlohmann::json reduction_demo(const Graph& c, const DemoOptions& options = {});

} // namespace cfree
