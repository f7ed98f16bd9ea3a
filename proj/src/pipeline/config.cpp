#include "pipeline/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "core/types.hpp"

namespace rf {

namespace {

double parse_double(const std::string& key, const std::string& value) {
    try {
        size_t pos = 0;
        double d = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return d;
    } catch (const std::exception&) {
        fail_invalid("config key '" + key + "': bad number '" + value + "'");
    }
}

long long parse_int(const std::string& key, const std::string& value) {
    try {
        size_t pos = 0;
        long long v = std::stoll(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        fail_invalid("config key '" + key + "': bad integer '" + value + "'");
    }
}

int parse_pos_int(const std::string& key, const std::string& value) {
    long long v = parse_int(key, value);
    if (v <= 0 || v > 1'000'000'000)
        fail_invalid("config key '" + key + "': expected positive integer, got '" + value + "'");
    return static_cast<int>(v);
}

}  // namespace

void PipelineConfig::apply_kv(const std::string& key, const std::string& value) {
    if (key == "eps") eps = parse_double(key, value);
    else if (key == "eps_prime") eps_prime = parse_double(key, value);
    else if (key == "gamma1") gamma1 = parse_double(key, value);
    else if (key == "phi") phi = parse_double(key, value);
    else if (key == "exp_p_sample") exp_p_sample = parse_double(key, value);
    else if (key == "exp_rounds") exp_rounds = parse_double(key, value);
    else if (key == "exp_reserve") exp_reserve = parse_double(key, value);
    else if (key == "asymptotic_n") asymptotic_n = parse_pos_int(key, value);
    else if (key == "seed") seed = static_cast<uint64_t>(parse_int(key, value));
    else if (key == "retries") retries = parse_pos_int(key, value);
    else if (key == "sample_rate") sample_rate = parse_double(key, value);
    else if (key == "round_count") round_count = parse_pos_int(key, value);
    else if (key == "reserve_b") reserve_b = parse_pos_int(key, value);
    else if (key == "size_rel_slack") size_rel_slack = parse_double(key, value);
    else if (key == "size_abs_slack") size_abs_slack = static_cast<int>(parse_int(key, value));
    else if (key == "yv_rel_slack") yv_rel_slack = parse_double(key, value);
    else if (key == "yv_abs_slack") yv_abs_slack = static_cast<int>(parse_int(key, value));
    else if (key == "y_pair_max") y_pair_max = parse_pos_int(key, value);
    else if (key == "y_edge_max") y_edge_max = parse_pos_int(key, value);
    else if (key == "round_degree_stats") round_degree_stats = parse_int(key, value) != 0;
    else if (key == "nr_fail_frac") nr_fail_frac = parse_double(key, value);
    else if (key == "nr_abs_slack") nr_abs_slack = static_cast<int>(parse_int(key, value));
    else if (key == "nr_rel_slack") nr_rel_slack = parse_double(key, value);
    else if (key == "delta2_cap") delta2_cap = parse_pos_int(key, value);
    else if (key == "cover_strategy") {
        if (value != "greedy" && value != "nibble" && value != "lp_rounding")
            fail_invalid("config key 'cover_strategy': expected greedy|nibble|lp_rounding, got '" + value + "'");
        cover_strategy = value;
    } else if (key == "greedy_passes") greedy_passes = parse_pos_int(key, value);
    else if (key == "greedy_tries") greedy_tries = parse_pos_int(key, value);
    else if (key == "cover_restarts") cover_restarts = parse_pos_int(key, value);
    else if (key == "endgame_threshold") endgame_threshold = static_cast<int>(parse_int(key, value));
    else if (key == "endgame_nodes") endgame_nodes = parse_int(key, value);
    else if (key == "lp_col_cap") lp_col_cap = parse_pos_int(key, value);
    else if (key == "nibble_rate") nibble_rate = parse_double(key, value);
    else if (key == "nibble_rounds") nibble_rounds = parse_pos_int(key, value);
    else if (key == "nibble_y_pair_max") nibble_y_pair_max = parse_pos_int(key, value);
    else if (key == "nibble_y_edge_max") nibble_y_edge_max = parse_pos_int(key, value);
    else if (key == "z_samples") z_samples = parse_pos_int(key, value);
    else if (key == "member_tries") member_tries = parse_pos_int(key, value);
    else if (key == "c_abs") c_abs = parse_double(key, value);
    else if (key == "c_cov") c_cov = parse_double(key, value);
    else if (key == "oracle_budget") oracle_budget = parse_int(key, value);
    else fail_invalid("unknown config key '" + key + "'");
}

void PipelineConfig::apply_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail_io("cannot open config file: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        // trim
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);
        auto eq = line.find('=');
        if (eq == std::string::npos)
            fail_invalid(path + ":" + std::to_string(lineno) + ": expected key=value");
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        auto strip = [](std::string& s) {
            auto a = s.find_first_not_of(" \t");
            auto b = s.find_last_not_of(" \t");
            s = (a == std::string::npos) ? std::string() : s.substr(a, b - a + 1);
        };
        strip(key);
        strip(value);
        apply_kv(key, value);
    }
}

std::vector<std::string> PipelineConfig::validate(int n) const {
    auto in_open01 = [](double v) { return v > 0.0 && v < 1.0; };
    if (!in_open01(eps)) fail_invalid("config: eps must lie in (0,1)");
    if (!in_open01(eps_prime)) fail_invalid("config: eps_prime must lie in (0,1)");
    if (gamma1 < 0.0 || gamma1 >= 1.0) fail_invalid("config: gamma1 must lie in [0,1)");
    if (!in_open01(phi)) fail_invalid("config: phi must lie in (0,1)");
    if (!in_open01(sample_rate)) fail_invalid("config: sample_rate must lie in (0,1)");
    if (!in_open01(nibble_rate)) fail_invalid("config: nibble_rate must lie in (0,1)");
    if (nr_fail_frac < 0.0 || nr_fail_frac > 1.0)
        fail_invalid("config: nr_fail_frac must lie in [0,1]");
    if (endgame_threshold < 0) fail_invalid("config: endgame_threshold must be >= 0");
    if (endgame_nodes <= 0) fail_invalid("config: endgame_nodes must be positive");
    if (oracle_budget <= 0) fail_invalid("config: oracle_budget must be positive");

    std::vector<std::string> warnings;
    auto chain = [&](bool ok, const std::string& msg) {
        if (ok) return;
        if (n >= asymptotic_n)
            fail_invalid("config: " + msg + " (required once n >= asymptotic_n)");
        warnings.push_back("constant chain: " + msg);
    };
    chain(eps_prime < eps, "eps_prime < eps violated");
    chain(gamma1 < eps_prime * eps_prime * eps_prime, "gamma1 < eps_prime^3 violated");
    chain(phi < gamma1 * eps_prime / 8.0, "phi < gamma1*eps_prime/8 violated");
    return warnings;
}

double PipelineConfig::cover_threshold(const Pattern& F) const {
    if (c_cov >= 0.0) return c_cov;
    if (F.kind == PatternKind::SingleEdge) return 0.5;
    return 1.0 - 1.0 / static_cast<double>(F.b);
}

double PipelineConfig::absorb_threshold(const Pattern& F) const {
    if (c_abs >= 0.0) return c_abs;
    // the gadget searches only need a dense host; reuse the cover threshold
    return cover_threshold(F);
}

}  // namespace rf
