#include "pipeline/select_matching.hpp"

#include <algorithm>
#include <cmath>

#include "util/comb.hpp"
#include "util/log.hpp"

namespace rf {

namespace {

bool sets_intersect(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    // both sorted ascending
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        if (a[i] < b[j]) ++i; else ++j;
    }
    return false;
}

}  // namespace

SelectionCheck selection_step(const std::vector<std::optional<std::vector<Vertex>>>& picks,
                              int num_targets,
                              const std::function<bool(int j, int i)>& hit,
                              double eps) {
    const int t = static_cast<int>(picks.size());
    SelectionCheck out;
    out.alive.assign(t, 0);
    for (int i = 0; i < t; ++i) out.alive[i] = picks[i].has_value() ? 1 : 0;

    // delete the later index of every intersecting pair
    for (int i = 0; i < t; ++i) {
        if (!out.alive[i]) continue;
        for (int j = i + 1; j < t; ++j) {
            if (!out.alive[j]) continue;
            if (sets_intersect(*picks[i], *picks[j])) out.alive[j] = 0;
        }
    }
    for (int i = 0; i < t; ++i)
        if (out.alive[i]) ++out.survivors;

    out.hits.assign(num_targets, 0);
    for (int j = 0; j < num_targets; ++j)
        for (int i = 0; i < t; ++i)
            if (out.alive[i] && hit(j, i)) ++out.hits[j];

    const int need = static_cast<int>(std::ceil((1.0 - eps / 4.0) * t));
    out.size_ok = out.survivors >= need;
    out.targets_ok = true;
    const double per_target = eps * t / 4.0;
    for (int j = 0; j < num_targets; ++j)
        if (static_cast<double>(out.hits[j]) < per_target) out.targets_ok = false;
    return out;
}

SelectResult select_absorbing_matching(const System& sys,
                                       const std::vector<DKGraph>& targets,
                                       double eps,
                                       int retries,
                                       Rng& rng) {
    SelectResult res;
    const int t = sys.m;
    if (t == 0) fail_invalid("select: need at least one graph");
    if (eps <= 0.0 || eps >= 1.0) fail_invalid("select: eps must lie in (0,1)");
    for (const auto& z : targets) {
        if (z.n() != sys.n || z.k() != sys.k)
            fail_invalid("select: target set must share the host vertex count and uniformity");
    }

    // density pre-check, advisory only: |E(Z_j) cap E(G_i)| >= eps * n^k
    double nk = std::pow(static_cast<double>(sys.n), static_cast<double>(sys.k));
    for (size_t j = 0; j < targets.size(); ++j) {
        for (int i = 0; i < t; ++i) {
            long long common = 0;
            for (const auto& e : sys.graphs[i].edges())
                if (targets[j].has_edge_any_sign(e.verts)) ++common;
            if (static_cast<double>(common) < eps * nk) {
                res.warnings.push_back(
                    "density pre-check: target " + std::to_string(j) + " meets graph " +
                    std::to_string(i) + " in " + std::to_string(common) +
                    " edges, below eps*n^k = " + std::to_string(eps * nk));
            }
        }
    }

    auto hit = [&](int j, int i) -> bool {
        return targets[static_cast<size_t>(j)].has_edge_any_sign(*res.picks[i]);
    };

    SelectionCheck best;
    best.survivors = -1;
    std::vector<std::optional<std::vector<Vertex>>> best_picks;
    for (int attempt = 0; attempt < retries; ++attempt) {
        ++res.attempts;
        res.picks.assign(t, std::nullopt);
        for (int i = 0; i < t; ++i) {
            const auto& edges = sys.graphs[i].edges();
            if (edges.empty()) continue;  // empty graph: index i cannot be matched
            size_t pick = static_cast<size_t>(rng.below(static_cast<uint64_t>(edges.size())));
            res.picks[i] = edges[pick].verts;
        }
        SelectionCheck chk =
            selection_step(res.picks, static_cast<int>(targets.size()), hit, eps);
        if (chk.size_ok && chk.targets_ok) {
            for (int i = 0; i < t; ++i)
                if (!chk.alive[i]) res.picks[i].reset();
            res.ok = true;
            res.survivors = chk.survivors;
            res.target_hits = chk.hits;
            return res;
        }
        if (chk.survivors > best.survivors) {
            best = chk;
            best_picks = res.picks;
        }
    }
    // exhausted: report the best attempt
    res.ok = false;
    res.picks = best_picks;
    if (best.survivors >= 0) {
        for (int i = 0; i < t; ++i)
            if (!best.alive[i]) res.picks[i].reset();
        res.survivors = best.survivors;
        res.target_hits = best.hits;
    }
    return res;
}

}  // namespace rf
