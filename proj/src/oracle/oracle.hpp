#pragma once

// Exhaustive ground truth at desk scale. The factor search runs on the
// reduction graph with fail-first block ordering; the structure counter
// recurses directly on the system so the two sides stay independent.

#include "fb/fb_graph.hpp"

namespace rf {

enum class OracleStatus { Factor, Infeasible, Timeout };

struct OracleResult {
    OracleStatus status = OracleStatus::Infeasible;
    RainbowPacking factor;   // filled when status == Factor
    long long nodes = 0;
};

OracleResult exact_rainbow_factor(const System& sys, const Pattern& F, long long node_budget = 50'000'000);

// Number of perfect matchings of the reduction graph; -1 once the node
// budget runs out.
long long count_fb_perfect_matchings(const FbGraph& g, long long node_budget = 200'000'000);

// Number of (vertex partition, block assignment) pairs where every chosen
// b-set hosts at least one rainbow copy of its block. Counts the same
// objects as count_fb_perfect_matchings but never touches FbGraph.
long long count_rainbow_factor_structures(const System& sys, const Pattern& F,
                                          long long node_budget = 200'000'000);

}  // namespace rf
