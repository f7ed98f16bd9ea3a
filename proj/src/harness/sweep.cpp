#include "harness/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <thread>

#include "json.hpp"

#include "core/degree.hpp"
#include "oracle/generators.hpp"
#include "pipeline/cover.hpp"
#include "pipeline/solve.hpp"
#include "util/comb.hpp"
#include "util/log.hpp"

namespace rf {

namespace {

struct Cell {
    int n = 0;
    double frac = 0.0;
    uint64_t seed = 0;
    std::string strategy;
};

std::string fmt_double(double v, const char* spec = "%.6g") {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

System make_instance(const SweepSpec& spec, const Pattern& F, const Cell& cell) {
    const int n = cell.n;
    const int m = n * F.f / F.b;
    if (spec.kind == "complete") {
        if (F.partite) return gen_complete_partite(n, F.b, m);
        return gen_complete(n, F.k, m, F.directed);
    }
    if (spec.kind == "extremal") {
        if (F.kind != PatternKind::Clique)
            fail_invalid("sweep: kind=extremal needs a clique pattern");
        return gen_extremal(F.b, n);
    }
    if (spec.kind == "completion") {
        if (F.kind != PatternKind::Clique)
            fail_invalid("sweep: kind=completion needs a clique pattern");
        return gen_extremal_completion(F.b, n, cell.seed);
    }
    if (spec.kind != "random")
        fail_invalid("sweep: unknown kind '" + spec.kind + "' (random|extremal|completion|complete)");

    DegreeRule rule;
    long long max_star;
    int classes = 0;
    if (F.partite) {
        rule.kind = RuleKind::Partite;
        classes = F.b;
        max_star = n / F.b;  // smallest class of the balanced split
    } else {
        rule.kind = RuleKind::Standard;
        rule.d = 1;
        max_star = binomial(n - 1, F.k - 1) * (F.directed ? 2 : 1);
    }
    long long target = std::llround(cell.frac * static_cast<double>(max_star));
    return gen_random_min_degree(n, F.k, m, rule, target, spec.delete_prob, cell.seed,
                                 F.directed, classes);
}

SweepRow run_cell(const SweepSpec& spec, const Pattern& F, const Cell& cell) {
    SweepRow row;
    row.pattern = spec.pattern;
    row.n = cell.n;
    row.m = cell.n * F.f / F.b;
    row.frac = cell.frac;
    row.seed = cell.seed;
    row.strategy = cell.strategy;

    System sys = make_instance(spec, F, cell);
    row.m = sys.m;

    PipelineConfig cfg = spec.cfg;
    cfg.seed = cell.seed;
    std::string mode = cell.strategy;
    auto colon = mode.find(':');
    if (colon != std::string::npos) {
        cfg.cover_strategy = mode.substr(colon + 1);
        mode = mode.substr(0, colon);
    }
    SolveResult res = find_rainbow_factor(sys, F, cfg, mode);

    row.feasible = res.status == SolveStatus::Factor;
    row.leftover = static_cast<int>(res.leftover.size());
    row.copies = static_cast<int>(res.factor.copies.size());
    row.ms = spec.stable_output ? 0 : std::llround(res.ms);
    std::string ss;
    ss += "status=" + solve_status_name(res.status);
    for (const auto& [k, v] : res.stats) ss += ";" + k + "=" + fmt_double(v);
    row.stage_stats = ss;
    return row;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    Pattern F = Pattern::parse(spec.pattern);
    if (spec.ns.empty()) fail_invalid("sweep: need at least one n");
    if (spec.seeds < 0) fail_invalid("sweep: seeds must be nonnegative");
    if (spec.strategies.empty()) fail_invalid("sweep: need at least one strategy");
    for (const std::string& strat : spec.strategies) {
        std::string mode = strat;
        auto colon = mode.find(':');
        if (colon != std::string::npos) {
            parse_cover_strategy(mode.substr(colon + 1));  // throws on a bad suffix
            mode = mode.substr(0, colon);
        }
        if (mode != "absorption" && mode != "exact")
            fail_invalid("sweep: unknown strategy '" + strat + "' (absorption[:cover]|exact)");
    }
    if (spec.fracs.empty()) fail_invalid("sweep: need at least one degree fraction");
    for (double frac : spec.fracs)
        if (frac < 0.0 || frac > 1.0) fail_invalid("sweep: fractions must lie in [0,1]");
    for (int n : spec.ns) {
        if (n <= 0 || n % F.b != 0)
            fail_invalid("sweep: every n must be a positive multiple of b = " +
                         std::to_string(F.b));
        if ((n * F.f) % F.b != 0) fail_invalid("sweep: n f / b must be integral");
    }

    std::vector<Cell> cells;
    for (int n : spec.ns)
        for (double frac : spec.fracs)
            for (int s = 0; s < spec.seeds; ++s)
                for (const std::string& strat : spec.strategies)
                    cells.push_back({n, frac, spec.seed_base + static_cast<uint64_t>(s), strat});

    std::vector<SweepRow> rows(cells.size());
    int jobs = std::max(1, spec.jobs);
    if (jobs == 1) {
        for (size_t i = 0; i < cells.size(); ++i) rows[i] = run_cell(spec, F, cells[i]);
    } else {
        std::atomic<size_t> next{0};
        std::mutex err_mu;
        std::string first_error;
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) {
            pool.emplace_back([&]() {
                while (true) {
                    size_t i = next.fetch_add(1);
                    if (i >= cells.size()) return;
                    try {
                        rows[i] = run_cell(spec, F, cells[i]);
                    } catch (const std::exception& e) {
                        std::lock_guard<std::mutex> lock(err_mu);
                        if (first_error.empty()) first_error = e.what();
                        next.store(cells.size());  // drain remaining work
                        return;
                    }
                }
            });
        }
        for (auto& th : pool) th.join();
        if (!first_error.empty()) fail_internal("sweep worker: " + first_error);
    }

    std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
        if (a.n != b.n) return a.n < b.n;
        if (a.frac != b.frac) return a.frac < b.frac;
        if (a.seed != b.seed) return a.seed < b.seed;
        return a.strategy < b.strategy;
    });
    return rows;
}

std::string rows_to_csv(const std::vector<SweepRow>& rows) {
    std::string out = "pattern,n,m,frac,seed,strategy,feasible,leftover,copies,ms,stage_stats\n";
    for (const SweepRow& r : rows) {
        out += r.pattern + ',' + std::to_string(r.n) + ',' + std::to_string(r.m) + ',' +
               fmt_double(r.frac, "%.4f") + ',' + std::to_string(r.seed) + ',' + r.strategy +
               ',' + (r.feasible ? "true" : "false") + ',' + std::to_string(r.leftover) + ',' +
               std::to_string(r.copies) + ',' + std::to_string(r.ms) + ',' + r.stage_stats +
               '\n';
    }
    return out;
}

std::string rows_to_json(const std::vector<SweepRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const SweepRow& r : rows) {
        nlohmann::json o;
        o["pattern"] = r.pattern;
        o["n"] = r.n;
        o["m"] = r.m;
        o["frac"] = r.frac;
        o["seed"] = r.seed;
        o["strategy"] = r.strategy;
        o["feasible"] = r.feasible;
        o["leftover"] = r.leftover;
        o["copies"] = r.copies;
        o["ms"] = r.ms;
        o["stage_stats"] = r.stage_stats;
        arr.push_back(std::move(o));
    }
    return arr.dump(2) + "\n";
}

}  // namespace rf
