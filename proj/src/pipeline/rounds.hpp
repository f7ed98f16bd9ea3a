#pragma once

// Randomized round structure over the reduction graph. Colors are sampled
// block-atomically (a block's f colors enter or leave together), hosts one
// by one. A small balanced reserve S is set aside first; every round is
// rebalanced by deleting reserve elements only. Accepted round sets satisfy
// hard windows on round sizes, per-vertex round counts and pair/edge
// multiplicities; per-round degree floors are recorded as statistics only.

#include <map>
#include <string>
#include <vector>

#include "fb/fb_graph.hpp"
#include "pipeline/config.hpp"
#include "util/rng.hpp"

namespace rf {

struct TwoRoundParams {
    double rate = 0.05;
    int round_count = 60;
    int reserve_hosts = 4;      // rounded up to whole blocks worth of hosts
    double size_rel_slack = 0.75;
    int size_abs_slack = 6;
    double yv_rel_slack = 0.75;
    int yv_abs_slack = 6;
    int y_pair_max = 2;
    int y_edge_max = 1;
    int retries = 24;
    bool degree_stats = true;
};

TwoRoundParams strict_round_params(const PipelineConfig& cfg);
TwoRoundParams nibble_round_params(const PipelineConfig& cfg);

struct Round {
    std::vector<int> blocks;      // ascending block ids
    std::vector<Vertex> verts;    // ascending host ids
};

struct RoundSet {
    std::vector<int> s_blocks;    // reserve blocks
    std::vector<Vertex> s_verts;  // reserve hosts, b per reserve block
    std::vector<Round> rounds;
    bool ok = false;
    std::string failure;          // names the violated property
    std::map<std::string, double> stats;
};

RoundSet two_round_sample(const FbGraph& g, const TwoRoundParams& p, Rng& rng);

// Edges of g induced by one round (block and all hosts inside), as indices
// into g.edges().
std::vector<size_t> round_induced_edges(const FbGraph& g, const Round& r);

struct NearRegularParams {
    double fail_frac = 0.15;    // tolerated fraction of off-window vertices
    int abs_slack = 4;
    double rel_slack = 0.75;
    int delta2_cap = 6;
    int retries = 24;
};

NearRegularParams near_regular_params(const PipelineConfig& cfg);

// Per-round fractional matching weights on the round's induced edges,
// aligned with round_induced_edges(g, rounds[i]).
struct RoundWeights {
    std::vector<size_t> edge_idx;
    std::vector<double> weight;
};

struct NearRegularResult {
    std::vector<size_t> edge_idx;   // the sparse subgraph, indices into g.edges()
    bool ok = false;
    std::string failure;
    std::map<std::string, double> stats;
};

// Keep each induced edge with its weight in the first round containing it;
// accept when host degrees track their round counts for most non-reserve
// hosts and pair codegrees stay under the cap.
NearRegularResult sample_near_regular(const FbGraph& g, const RoundSet& rs,
                                      const std::vector<RoundWeights>& weights,
                                      const NearRegularParams& p, Rng& rng);

}  // namespace rf
