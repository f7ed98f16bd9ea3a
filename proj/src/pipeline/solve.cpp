#include "pipeline/solve.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "core/degree.hpp"
#include "oracle/oracle.hpp"
#include "pipeline/absorbing.hpp"
#include "pipeline/cover.hpp"
#include "util/comb.hpp"
#include "util/log.hpp"
#include "util/rng.hpp"

namespace rf {

std::string solve_status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::Factor: return "factor";
        case SolveStatus::Infeasible: return "infeasible";
        case SolveStatus::Fail: return "fail";
        case SolveStatus::Timeout: return "timeout";
    }
    return "?";
}

namespace {

void check_instance(const System& sys, const Pattern& F) {
    sys.validate();
    if (sys.k != F.k) fail_invalid("solve: pattern uniformity does not match the system");
    if (F.partite) {
        if (!sys.partite()) fail_invalid("solve: partite pattern needs a partite system");
        if (sys.num_classes != F.b)
            fail_invalid("solve: partite pattern needs exactly b vertex classes");
    }
    if (sys.n % F.b != 0)
        fail_invalid("solve: factor requires b | n (n = " + std::to_string(sys.n) +
                     ", b = " + std::to_string(F.b) + ")");
    if (sys.m * F.b != sys.n * F.f)
        fail_invalid("solve: factor requires m = n f / b (m = " + std::to_string(sys.m) +
                     ", expected " + std::to_string(sys.n * F.f / F.b) + ")");
}

void degree_warnings(const System& sys, const Pattern& F, const PipelineConfig& cfg,
                     std::vector<std::string>& warnings) {
    if (sys.n == 0) return;
    DegreeRule rule;
    if (F.partite) {
        rule.kind = RuleKind::Partite;
    } else {
        rule.kind = RuleKind::Standard;
        rule.d = 1;
    }
    long long delta = min_star_degree(sys, rule);
    double reference;
    if (F.partite) {
        int min_class = sys.n;
        std::vector<int> sizes(static_cast<size_t>(sys.num_classes), 0);
        for (int c : sys.klass) ++sizes[static_cast<size_t>(c)];
        for (int s : sizes) min_class = std::min(min_class, s);
        reference = static_cast<double>(min_class);
    } else {
        reference = static_cast<double>(binomial(sys.n - 1, F.k - 1));
    }
    double need = (cfg.cover_threshold(F) + cfg.eps) * reference;
    if (static_cast<double>(delta) < need) {
        warnings.push_back("degree pre-check: min star degree " + std::to_string(delta) +
                           " sits below (threshold + eps) * " +
                           std::to_string(static_cast<long long>(reference)) + " = " +
                           std::to_string(need) + "; the search may fail");
    }
}

struct AttemptOutcome {
    bool ok = false;
    RainbowPacking factor;
    std::vector<Vertex> leftover;
    std::map<std::string, double> stats;
};

AttemptOutcome run_attempt(const System& sys, const Pattern& F, const PipelineConfig& cfg,
                           CoverStrategy strat, int attempt) {
    AttemptOutcome out;
    std::string tag = "/" + std::to_string(attempt);
    Rng rng_absorb = derive_stream(cfg.seed, "absorb" + tag);
    Rng rng_cover = derive_stream(cfg.seed, "cover" + tag);

    AbsorbingPacking packing = build_absorbing_packing(sys, F, cfg, rng_absorb);
    out.stats["absorb_attempted"] = packing.attempted;
    out.stats["absorb_members"] = static_cast<double>(packing.members.size());
    out.stats["absorb_attempts"] = packing.attempts;
    if (!packing.ok) return out;

    // residual system: everything outside the surviving members
    std::vector<char> vq(static_cast<size_t>(sys.n), 0), cq(static_cast<size_t>(sys.m), 0);
    for (const AbsorbingMember& mem : packing.members) {
        for (Vertex v : mem.verts) vq[static_cast<size_t>(v)] = 1;
        for (Color c : mem.chunk) cq[static_cast<size_t>(c)] = 1;
    }
    std::vector<Vertex> res_verts;
    std::vector<Color> res_colors;
    for (Vertex v = 0; v < sys.n; ++v)
        if (!vq[static_cast<size_t>(v)]) res_verts.push_back(v);
    for (Color c = 0; c < sys.m; ++c)
        if (!cq[static_cast<size_t>(c)]) res_colors.push_back(c);
    System residual = sys.induced(res_verts, res_colors);

    const int t_prime = static_cast<int>(packing.members.size());
    int budget = std::min(static_cast<int>(std::floor(cfg.phi * sys.n)), t_prime * F.b);
    if (budget < 0) budget = 0;
    out.stats["leftover_budget"] = budget;

    CoverResult cover = almost_cover(residual, F, cfg, strat, budget, rng_cover);
    for (const auto& [k, v] : cover.stats) out.stats["cover_" + k] = v;
    if (!cover.ok) {
        out.leftover.clear();
        for (Vertex u : cover.leftover)
            out.leftover.push_back(res_verts[static_cast<size_t>(u)]);
        return out;
    }

    // leftover vertices and unused colors, back in original ids
    std::vector<Vertex> U;
    for (Vertex u : cover.leftover) U.push_back(res_verts[static_cast<size_t>(u)]);
    std::vector<int> unused_blocks = cover.unused_blocks;
    RainbowPacking cover_copies = cover.packing;

    // |U| is a multiple of b by the balance identity; if a strategy ever
    // broke it, uncovering whole copies would restore it.
    while (U.size() % static_cast<size_t>(F.b) != 0) {
        if (cover_copies.copies.empty())
            fail_internal("solve: leftover size not a multiple of b and nothing to uncover");
        RainbowCopy last = cover_copies.copies.back();
        cover_copies.copies.pop_back();
        for (Vertex v : last.embed) U.push_back(res_verts[static_cast<size_t>(v)]);
        std::vector<Color> cs = last.colors_sorted();
        unused_blocks.push_back(cs[0] / F.f);  // copies are block-respecting
        std::sort(unused_blocks.begin(), unused_blocks.end());
    }
    std::sort(U.begin(), U.end());

    std::vector<Color> c1;  // unused residual colors, ascending block order
    for (int blk : unused_blocks)
        for (int c = blk * F.f; c < (blk + 1) * F.f; ++c)
            c1.push_back(res_colors[static_cast<size_t>(c)]);

    const size_t groups = U.size() / static_cast<size_t>(F.b);
    if (c1.size() != groups * static_cast<size_t>(F.f))
        fail_internal("solve: leftover colors do not match leftover vertices");
    if (groups > static_cast<size_t>(t_prime)) return out;  // not enough members

    AbsorberIndex index(sys, F, packing);
    std::vector<RainbowAbsorber> absorbed;
    for (size_t j = 0; j < groups; ++j) {
        std::vector<Vertex> B(U.begin() + static_cast<long>(j) * F.b,
                              U.begin() + static_cast<long>(j + 1) * F.b);
        std::vector<Color> I(c1.begin() + static_cast<long>(j) * F.f,
                             c1.begin() + static_cast<long>(j + 1) * F.f);
        auto a = index.absorb_query(B, I);
        if (!a) {
            out.leftover = U;
            out.stats["absorbed_groups"] = static_cast<double>(j);
            return out;
        }
        absorbed.push_back(std::move(*a));
    }
    out.stats["absorbed_groups"] = static_cast<double>(groups);

    // assemble: cover copies (mapped back), swapped gadgets, untouched interiors
    RainbowPacking factor;
    for (const RainbowCopy& c : cover_copies.copies) {
        RainbowCopy mapped;
        for (Vertex v : c.embed) mapped.embed.push_back(res_verts[static_cast<size_t>(v)]);
        for (Color col : c.colors) mapped.colors.push_back(res_colors[static_cast<size_t>(col)]);
        factor.copies.push_back(std::move(mapped));
    }
    for (const RainbowAbsorber& a : absorbed)
        for (const RainbowCopy& c : a.exterior.copies) factor.copies.push_back(c);
    for (const AbsorbingMember& mem : packing.members)
        if (!mem.used)
            for (const RainbowCopy& c : mem.interior.copies) factor.copies.push_back(c);

    out.ok = true;
    out.factor = std::move(factor);
    return out;
}

}  // namespace

SolveResult find_rainbow_factor(const System& sys, const Pattern& F,
                                const PipelineConfig& cfg, const std::string& strategy) {
    auto t0 = std::chrono::steady_clock::now();
    SolveResult res;
    check_instance(sys, F);
    auto finish = [&]() -> SolveResult& {
        auto t1 = std::chrono::steady_clock::now();
        res.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        return res;
    };

    if (sys.n == 0) {
        res.status = SolveStatus::Factor;
        return finish();
    }

    if (strategy == "exact") {
        OracleResult o = exact_rainbow_factor(sys, F, cfg.oracle_budget);
        res.stats["oracle_nodes"] = static_cast<double>(o.nodes);
        switch (o.status) {
            case OracleStatus::Factor:
                res.status = SolveStatus::Factor;
                res.factor = std::move(o.factor);
                break;
            case OracleStatus::Infeasible:
                res.status = SolveStatus::Infeasible;
                break;
            case OracleStatus::Timeout:
                res.status = SolveStatus::Timeout;
                res.message = "oracle node budget exhausted";
                break;
        }
        return finish();
    }
    if (strategy != "absorption") fail_invalid("unknown strategy '" + strategy + "' (absorption|exact)");

    for (const std::string& w : cfg.validate(sys.n)) res.warnings.push_back(w);
    degree_warnings(sys, F, cfg, res.warnings);
    CoverStrategy strat = parse_cover_strategy(cfg.cover_strategy);

    AttemptOutcome best;
    bool have_best = false;
    for (int attempt = 0; attempt < cfg.retries; ++attempt) {
        AttemptOutcome o = run_attempt(sys, F, cfg, strat, attempt);
        if (o.ok) {
            std::string reason;
            if (!is_rainbow_factor(sys, F, o.factor, &reason))
                fail_internal("solve: assembled factor failed verification: " + reason);
            res.status = SolveStatus::Factor;
            res.factor = std::move(o.factor);
            res.stats = std::move(o.stats);
            res.stats["attempts"] = attempt + 1;
            return finish();
        }
        bool better = !have_best ||
                      (!o.leftover.empty() &&
                       (best.leftover.empty() || o.leftover.size() < best.leftover.size()));
        if (better) {
            best = std::move(o);
            have_best = true;
        }
    }
    res.status = SolveStatus::Fail;
    res.message = "no rainbow factor found within " + std::to_string(cfg.retries) + " attempts";
    res.leftover = best.leftover;
    res.stats = best.stats;
    res.stats["attempts"] = cfg.retries;
    return finish();
}

}  // namespace rf
