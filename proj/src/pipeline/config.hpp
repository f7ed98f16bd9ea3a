#pragma once

// Pipeline tuning knobs. The asymptotic analysis fixes exponents and an
// ordering chain between the constants; at desk scale (n below asymptotic_n)
// the absolute fields below take over and chain violations only warn.
// Config files hold one key=value per line, '#' comments allowed.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "core/pattern.hpp"

namespace rf {

struct PipelineConfig {
    // headline constants: 0 < phi << gamma1 << eps_prime << eps < 1
    double eps = 0.08;
    double eps_prime = 0.04;
    double gamma1 = 0.05;
    double phi = 0.1;

    // asymptotic exponents (sampling rate n^-exp_p_sample, n^exp_rounds
    // rounds, reserve n^exp_reserve); active once n >= asymptotic_n
    double exp_p_sample = 0.9;
    double exp_rounds = 1.1;
    double exp_reserve = 0.99;
    int asymptotic_n = 1000;

    uint64_t seed = 0;
    int retries = 24;

    // two-round sampling, desk absolutes
    double sample_rate = 0.05;
    int round_count = 60;
    int reserve_b = 4;            // host vertices reserved (rounded up to b blocks)
    double size_rel_slack = 0.75;
    int size_abs_slack = 6;
    double yv_rel_slack = 0.75;
    int yv_abs_slack = 6;
    int y_pair_max = 2;
    int y_edge_max = 1;
    bool round_degree_stats = true;

    // near-regular subsampling
    double nr_fail_frac = 0.15;
    int nr_abs_slack = 4;
    double nr_rel_slack = 0.75;
    int delta2_cap = 6;

    // cover strategies
    std::string cover_strategy = "greedy";  // greedy | nibble | lp_rounding
    int greedy_passes = 8;
    int greedy_tries = 64;
    int cover_restarts = 4;
    int endgame_threshold = 15;
    long long endgame_nodes = 250000;
    int lp_col_cap = 1500;
    double nibble_rate = 0.12;
    int nibble_rounds = 80;
    int nibble_y_pair_max = 6;
    int nibble_y_edge_max = 2;

    // absorbing structure
    int z_samples = 12;
    int member_tries = 200;
    double c_abs = -1.0;   // negative: derive from the pattern
    double c_cov = -1.0;

    long long oracle_budget = 50'000'000;

    void apply_kv(const std::string& key, const std::string& value);
    void apply_file(const std::string& path);

    // Hard-checks ranges; returns chain warnings. Chain violations become
    // errors in the asymptotic regime (n >= asymptotic_n).
    std::vector<std::string> validate(int n) const;

    // Degree thresholds used for precondition warnings only.
    double cover_threshold(const Pattern& F) const;
    double absorb_threshold(const Pattern& F) const;
};

}  // namespace rf
