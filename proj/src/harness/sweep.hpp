#pragma once

// Parameter sweeps: a grid of (n, degree fraction, seed, strategy) cells per
// pattern, each generating one seeded instance and solving it. Rows come
// back in a fixed sort order no matter how many worker threads ran, and
// --stable-output zeroes the timing column so reruns are byte identical.

#include <cstdint>
#include <string>
#include <vector>

#include "pipeline/config.hpp"

namespace rf {

struct SweepSpec {
    std::string pattern = "clique:3";
    std::vector<int> ns;
    std::vector<double> fracs = {0.9};
    int seeds = 1;
    uint64_t seed_base = 0;
    std::vector<std::string> strategies = {"absorption"};
    std::string kind = "random";   // random | extremal | completion | complete
    double delete_prob = 0.5;
    int jobs = 1;
    bool stable_output = false;
    PipelineConfig cfg;
};

struct SweepRow {
    std::string pattern;
    int n = 0;
    int m = 0;
    double frac = 0.0;
    uint64_t seed = 0;
    std::string strategy;
    bool feasible = false;
    int leftover = 0;
    int copies = 0;
    long long ms = 0;
    std::string stage_stats;   // "key=value;..." with sorted keys
};

std::vector<SweepRow> run_sweep(const SweepSpec& spec);

std::string rows_to_csv(const std::vector<SweepRow>& rows);
std::string rows_to_json(const std::vector<SweepRow>& rows);

}  // namespace rf
