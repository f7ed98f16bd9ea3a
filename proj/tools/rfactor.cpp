// rfactor: command-line front end over the C API.
//
// Subcommands: gen, solve, verify, lp, absorbers, sweep.
// Exit codes: 0 success/feasible/valid, 1 infeasible/invalid/not found,
//             2 usage or I/O error, 3 internal failure.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "rainbowfactor.h"

using nlohmann::json;

namespace {

constexpr int kExitFeasible = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

int exit_code_for(int rc) {
    switch (rc) {
        case RF_OK: return kExitFeasible;
        case RF_ERR_INVALID: return kExitUsage;
        case RF_ERR_IO: return kExitUsage;
        default: return kExitInternal;
    }
}

[[noreturn]] void die(int rc) {
    std::cerr << "rfactor: " << rf_last_error() << "\n";
    std::exit(exit_code_for(rc));
}

std::string take_string(char* s) {
    std::string out = s ? s : "";
    rf_string_free(s);
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "rfactor: cannot open " << path << "\n";
        std::exit(kExitUsage);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "rfactor: cannot write " << path << "\n";
        std::exit(kExitUsage);
    }
    out << text;
}

// "1,2,3" -> [1,2,3]
template <class T>
std::vector<T> split_numbers(const std::string& s) {
    std::vector<T> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        if constexpr (std::is_same_v<T, double>) out.push_back(std::stod(item));
        else out.push_back(static_cast<T>(std::stoll(item)));
    }
    return out;
}

std::vector<std::string> split_strings(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

// Config precedence: later insertions win, so load the file first and
// apply --set pairs on top.
json config_object(const std::string& config_path, const std::vector<std::string>& sets) {
    json cfg = json::object();
    if (!config_path.empty()) {
        std::istringstream in(read_text_file(config_path));
        std::string line;
        while (std::getline(in, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos) continue;
            auto last = line.find_last_not_of(" \t\r");
            line = line.substr(first, last - first + 1);
            auto eq = line.find('=');
            if (eq == std::string::npos) {
                std::cerr << "rfactor: bad config line (expected key=value): " << line << "\n";
                std::exit(kExitUsage);
            }
            auto trim = [](std::string s) {
                auto a = s.find_first_not_of(" \t");
                auto b = s.find_last_not_of(" \t");
                return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
            };
            cfg[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
        }
    }
    for (const std::string& kv : sets) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) {
            std::cerr << "rfactor: --set expects key=value, got: " << kv << "\n";
            std::exit(kExitUsage);
        }
        cfg[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    return cfg;
}

rf_system* load_system(const std::string& path) {
    rf_system* sys = nullptr;
    int rc;
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        rc = rf_system_parse(ss.str().c_str(), &sys);
    } else {
        rc = rf_system_read(path.c_str(), &sys);
    }
    if (rc != RF_OK) die(rc);
    return sys;
}

rf_pattern* load_pattern(const std::string& text) {
    rf_pattern* pat = nullptr;
    int rc = rf_pattern_parse(text.c_str(), &pat);
    if (rc != RF_OK) die(rc);
    return pat;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rainbow factor toolkit"};
    app.require_subcommand(1);

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "generate an instance file");
    std::string g_kind, g_rule = "standard:1", g_out;
    int g_n = 0, g_t = 3, g_k = 2, g_m = -1, g_classes = 0;
    long long g_delta = -1;
    double g_frac = -1.0, g_delete_prob = 0.5;
    uint64_t g_seed = 0;
    bool g_directed = false;
    gen->add_option("--kind", g_kind, "extremal|completion|space|complete|random")->required();
    gen->add_option("--n", g_n, "vertex count")->required();
    gen->add_option("--t", g_t, "clique size (extremal/completion)");
    gen->add_option("--k", g_k, "uniformity");
    gen->add_option("--m", g_m, "color count (complete/random)");
    gen->add_option("--rule", g_rule, "degree rule for kind=random");
    gen->add_option("--delta", g_delta, "min degree target for kind=random");
    gen->add_option("--frac", g_frac, "degree target as a fraction of the maximum");
    gen->add_option("--delete-prob", g_delete_prob, "edge deletion probability");
    gen->add_option("--seed", g_seed, "random seed");
    gen->add_flag("--directed", g_directed, "directed host (k = 2)");
    gen->add_option("--classes", g_classes, "partite class count (0 = none)");
    gen->add_option("-o,--output", g_out, "output file (default stdout)");

    // ---- solve ----
    auto* solve = app.add_subcommand("solve", "search for a rainbow factor");
    std::string s_file, s_pattern, s_strategy = "absorption", s_config, s_out;
    std::vector<std::string> s_sets;
    uint64_t s_seed = 0;
    bool s_seed_set = false;
    solve->add_option("system", s_file, "system file ('-' for stdin)")->required();
    solve->add_option("--pattern", s_pattern, "clique:t|ttour:k|tour:k:SIGNS|edge:k|pclique:k")
        ->required();
    solve->add_option("--strategy", s_strategy, "absorption|exact");
    solve->add_option("--seed", s_seed, "random seed")->each([&](const std::string&) {
        s_seed_set = true;
    });
    solve->add_option("--config", s_config, "config file with key=value lines");
    solve->add_option("--set", s_sets, "override one config key (key=value, repeatable)");
    solve->add_option("-o,--output", s_out, "write the result JSON here (default stdout)");

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "check a claimed packing or factor");
    std::string v_file, v_pattern, v_packing;
    bool v_packing_only = false;
    verify->add_option("system", v_file, "system file ('-' for stdin)")->required();
    verify->add_option("--pattern", v_pattern, "pattern")->required();
    verify->add_option("--packing", v_packing, "packing JSON file")->required();
    verify->add_flag("--packing-only", v_packing_only,
                     "accept a valid partial packing (default demands a factor)");

    // ---- lp ----
    auto* lp = app.add_subcommand("lp", "solve fractional matching programs");
    std::string l_file, l_mode = "matching";
    int l_b = 0;
    lp->add_option("hypergraph", l_file, "hypergraph file ('-' for stdin)")->required();
    lp->add_option("--mode", l_mode, "matching|cover|pfm");
    lp->add_option("-b,--edge-size", l_b, "edge size for --mode pfm");

    // ---- absorbers ----
    auto* absorbers = app.add_subcommand("absorbers", "enumerate rainbow absorbers");
    std::string a_file, a_pattern, a_target, a_colors, a_out;
    long long a_limit = 10;
    absorbers->add_option("system", a_file, "system file ('-' for stdin)")->required();
    absorbers->add_option("--pattern", a_pattern, "pattern")->required();
    absorbers->add_option("--target", a_target, "target vertices v1,v2,...")->required();
    absorbers->add_option("--colors", a_colors, "gadget colors c1,c2,...")->required();
    absorbers->add_option("--limit", a_limit, "stop after this many gadgets");
    absorbers->add_option("-o,--output", a_out, "output file (default stdout)");

    // ---- sweep ----
    auto* sweep = app.add_subcommand("sweep", "run a parameter sweep");
    std::string w_pattern = "clique:3", w_ns, w_fracs = "0.9", w_strategies = "absorption";
    std::string w_kind = "random", w_config, w_out, w_json;
    std::vector<std::string> w_sets;
    int w_seeds = 1, w_jobs = 1;
    uint64_t w_seed_base = 0;
    double w_delete_prob = 0.5;
    bool w_stable = false;
    sweep->add_option("--pattern", w_pattern, "pattern");
    sweep->add_option("--ns", w_ns, "vertex counts n1,n2,...")->required();
    sweep->add_option("--fracs", w_fracs, "degree fractions f1,f2,...");
    sweep->add_option("--seeds", w_seeds, "seeds per cell");
    sweep->add_option("--seed-base", w_seed_base, "first seed value");
    sweep->add_option("--strategies", w_strategies,
                      "comma list: absorption[:cover]|exact");
    sweep->add_option("--kind", w_kind, "random|extremal|completion|complete");
    sweep->add_option("--delete-prob", w_delete_prob, "edge deletion probability");
    sweep->add_option("--jobs", w_jobs, "worker threads");
    sweep->add_flag("--stable-output", w_stable, "zero the ms column for reproducible bytes");
    sweep->add_option("--config", w_config, "config file with key=value lines");
    sweep->add_option("--set", w_sets, "override one config key (key=value, repeatable)");
    sweep->add_option("-o,--output", w_out, "CSV output file (default stdout)");
    sweep->add_option("--json", w_json, "also write a JSON mirror here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    if (gen->parsed()) {
        json spec;
        spec["kind"] = g_kind;
        spec["n"] = g_n;
        if (g_kind == "extremal" || g_kind == "completion") spec["t"] = g_t;
        spec["k"] = g_k;
        spec["seed"] = g_seed;
        spec["directed"] = g_directed;
        spec["classes"] = g_classes;
        if (g_m >= 0) spec["m"] = g_m;
        if (g_kind == "random") {
            spec["rule"] = g_rule;
            spec["delete_prob"] = g_delete_prob;
            long long delta = g_delta;
            if (delta < 0 && g_frac >= 0.0) {
                // fraction of the complete host's min degree
                long long max_star = 1;
                for (int i = 1; i < g_k; ++i) max_star = max_star * (g_n - i) / i;
                if (g_directed) max_star *= 2;
                delta = static_cast<long long>(g_frac * static_cast<double>(max_star) + 0.5);
            }
            if (delta < 0) {
                std::cerr << "rfactor: kind=random needs --delta or --frac\n";
                return kExitUsage;
            }
            spec["delta"] = delta;
        }
        rf_system* sys = nullptr;
        int rc = rf_generate(spec.dump().c_str(), &sys);
        if (rc != RF_OK) die(rc);
        char* text = nullptr;
        rc = rf_system_serialize(sys, &text);
        rf_system_free(sys);
        if (rc != RF_OK) die(rc);
        write_output(g_out, take_string(text));
        return kExitFeasible;
    }

    if (solve->parsed()) {
        rf_system* sys = load_system(s_file);
        rf_pattern* pat = load_pattern(s_pattern);
        json options;
        options["strategy"] = s_strategy;
        json cfg = config_object(s_config, s_sets);
        if (s_seed_set) cfg["seed"] = std::to_string(s_seed);
        options["config"] = cfg;
        char* result = nullptr;
        int rc = rf_solve(sys, pat, options.dump().c_str(), &result);
        rf_pattern_free(pat);
        rf_system_free(sys);
        if (rc != RF_OK) die(rc);
        std::string text = take_string(result);
        write_output(s_out, text);
        json parsed = json::parse(text);
        return parsed.at("status").get<std::string>() == "factor" ? kExitFeasible
                                                                  : kExitInfeasible;
    }

    if (verify->parsed()) {
        rf_system* sys = load_system(v_file);
        rf_pattern* pat = load_pattern(v_pattern);
        std::string packing = read_text_file(v_packing);
        int valid = 0;
        char* reason = nullptr;
        int rc = rf_verify_packing(sys, pat, packing.c_str(), v_packing_only ? 0 : 1, &valid,
                                   &reason);
        rf_pattern_free(pat);
        rf_system_free(sys);
        if (rc != RF_OK) die(rc);
        std::string why = take_string(reason);
        if (valid) {
            std::cout << "valid\n";
            return kExitFeasible;
        }
        std::cout << "invalid: " << why << "\n";
        return kExitInfeasible;
    }

    if (lp->parsed()) {
        std::string text;
        if (l_file == "-") {
            std::ostringstream ss;
            ss << std::cin.rdbuf();
            text = ss.str();
        } else {
            text = read_text_file(l_file);
        }
        char* report = nullptr;
        int feasible = 1;
        int rc = rf_lp_solve_text(text.c_str(), l_mode.c_str(), l_b, &report, &feasible);
        if (rc != RF_OK) die(rc);
        std::cout << take_string(report);
        return feasible ? kExitFeasible : kExitInfeasible;
    }

    if (absorbers->parsed()) {
        rf_system* sys = load_system(a_file);
        rf_pattern* pat = load_pattern(a_pattern);
        json targets;
        targets["target"] = split_numbers<int>(a_target);
        targets["colors"] = split_numbers<int>(a_colors);
        char* result = nullptr;
        int rc = rf_enumerate_absorbers(sys, pat, targets.dump().c_str(), a_limit, &result);
        rf_pattern_free(pat);
        rf_system_free(sys);
        if (rc != RF_OK) die(rc);
        write_output(a_out, take_string(result));
        return kExitFeasible;
    }

    if (sweep->parsed()) {
        json spec;
        spec["pattern"] = w_pattern;
        spec["ns"] = split_numbers<int>(w_ns);
        spec["fracs"] = split_numbers<double>(w_fracs);
        spec["seeds"] = w_seeds;
        spec["seed_base"] = w_seed_base;
        spec["strategies"] = split_strings(w_strategies);
        spec["kind"] = w_kind;
        spec["delete_prob"] = w_delete_prob;
        spec["jobs"] = w_jobs;
        spec["stable_output"] = w_stable;
        spec["config"] = config_object(w_config, w_sets);
        char* csv = nullptr;
        char* js = nullptr;
        int rc = rf_sweep_run(spec.dump().c_str(), &csv, w_json.empty() ? nullptr : &js);
        if (rc != RF_OK) die(rc);
        write_output(w_out, take_string(csv));
        if (!w_json.empty()) write_output(w_json, take_string(js));
        return kExitFeasible;
    }

    return kExitUsage;
}
