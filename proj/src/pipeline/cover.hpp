#pragma once

// Almost-perfect covers of a balanced residual system: tile vertices with
// block-respecting rainbow copies until at most max_leftover vertices stay
// uncovered. Three strategies share a randomized greedy core and an exact
// bounded endgame: plain greedy, a round-based nibble that extracts its
// first copies from a near-regular sparse subgraph, and LP rounding over a
// column-sampled perfect fractional matching.

#include <map>
#include <string>
#include <vector>

#include "fb/fb_graph.hpp"
#include "pipeline/config.hpp"
#include "util/rng.hpp"

namespace rf {

enum class CoverStrategy { Greedy, Nibble, LpRounding };

CoverStrategy parse_cover_strategy(const std::string& name);

struct CoverResult {
    RainbowPacking packing;            // copies in residual ids
    std::vector<Vertex> leftover;      // uncovered vertices, ascending
    std::vector<int> unused_blocks;    // ascending block ids
    bool ok = false;                   // |leftover| <= max_leftover
    std::map<std::string, double> stats;
};

// sys must be balanced: b | n and m = n f / b. Copies use whole blocks
// (colors [i f, (i+1) f)).
CoverResult almost_cover(const System& sys, const Pattern& F, const PipelineConfig& cfg,
                         CoverStrategy strategy, int max_leftover, Rng& rng);

}  // namespace rf
