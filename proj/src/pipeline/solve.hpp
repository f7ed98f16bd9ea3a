#pragma once

// End-to-end rainbow factor search. The absorption route places a small
// absorbing structure, almost-covers the residual system, and swaps one
// gadget per leftover b-set; the exact route hands the instance to the
// exhaustive oracle. Every returned factor passes the independent validity
// check before it is reported.

#include <map>
#include <string>
#include <vector>

#include "fb/fb_graph.hpp"
#include "pipeline/config.hpp"

namespace rf {

enum class SolveStatus { Factor, Infeasible, Fail, Timeout };

std::string solve_status_name(SolveStatus s);

struct SolveResult {
    SolveStatus status = SolveStatus::Fail;
    RainbowPacking factor;           // when status == Factor
    std::vector<Vertex> leftover;    // best attempt's uncovered vertices otherwise
    std::map<std::string, double> stats;
    std::vector<std::string> warnings;
    std::string message;
    double ms = 0.0;
};

// strategy: "absorption" (cover strategy from cfg.cover_strategy) or "exact".
// Infeasible is only ever reported by the exact route; the absorption route
// reports Fail when its retries run out.
SolveResult find_rainbow_factor(const System& sys, const Pattern& F,
                                const PipelineConfig& cfg, const std::string& strategy);

}  // namespace rf
