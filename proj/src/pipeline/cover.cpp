#include "pipeline/cover.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "lp/matching_lp.hpp"
#include "pipeline/rounds.hpp"
#include "util/comb.hpp"
#include "util/log.hpp"

namespace rf {

CoverStrategy parse_cover_strategy(const std::string& name) {
    if (name == "greedy") return CoverStrategy::Greedy;
    if (name == "nibble") return CoverStrategy::Nibble;
    if (name == "lp_rounding") return CoverStrategy::LpRounding;
    fail_invalid("unknown cover strategy '" + name + "' (greedy|nibble|lp_rounding)");
}

namespace {

struct CoverState {
    const System& sys;
    const Pattern& F;
    std::vector<char> covered;       // per vertex
    std::vector<char> block_used;    // per block
    RainbowPacking packing;
    int uncovered = 0;

    CoverState(const System& s, const Pattern& f, int blocks)
        : sys(s), F(f), covered(static_cast<size_t>(s.n), 0),
          block_used(static_cast<size_t>(blocks), 0), uncovered(s.n) {}

    std::vector<Color> block_colors(int blk) const {
        std::vector<Color> cols;
        for (int c = blk * F.f; c < (blk + 1) * F.f; ++c) cols.push_back(c);
        return cols;
    }

    bool try_add(int blk, const std::vector<Vertex>& bset) {
        auto copy = first_copy_on(sys, F, bset, block_colors(blk));
        if (!copy) return false;
        add(blk, *copy);
        return true;
    }

    void add(int blk, const RainbowCopy& copy) {
        for (Vertex v : copy.embed) covered[static_cast<size_t>(v)] = 1;
        block_used[static_cast<size_t>(blk)] = 1;
        uncovered -= static_cast<int>(copy.embed.size());
        packing.copies.push_back(copy);
    }

    std::vector<Vertex> uncovered_list() const {
        std::vector<Vertex> u;
        for (Vertex v = 0; v < sys.n; ++v)
            if (!covered[static_cast<size_t>(v)]) u.push_back(v);
        return u;
    }

    std::vector<int> unused_list() const {
        std::vector<int> u;
        for (size_t i = 0; i < block_used.size(); ++i)
            if (!block_used[i]) u.push_back(static_cast<int>(i));
        return u;
    }
};

// Randomized passes over the unused blocks; when a whole pass stalls, one
// deterministic sweep runs if the subset space is small enough.
void greedy_phase(CoverState& st, const PipelineConfig& cfg, Rng& rng,
                  std::map<std::string, double>& stats) {
    const int b = st.F.b;
    for (int pass = 0; pass < cfg.greedy_passes; ++pass) {
        if (st.uncovered < b) break;
        bool progress = false;
        std::vector<int> order = st.unused_list();
        rng.shuffle(order);
        for (int blk : order) {
            std::vector<Vertex> uncov = st.uncovered_list();
            if (static_cast<int>(uncov.size()) < b) break;
            for (int attempt = 0; attempt < cfg.greedy_tries; ++attempt) {
                std::vector<int> idx = rng.sample_sorted(static_cast<int>(uncov.size()), b);
                std::vector<Vertex> bset;
                for (int t : idx) bset.push_back(uncov[static_cast<size_t>(t)]);
                if (st.try_add(blk, bset)) {
                    progress = true;
                    break;
                }
            }
        }
        if (!progress) {
            std::vector<Vertex> uncov = st.uncovered_list();
            if (binomial(static_cast<int>(uncov.size()), b, 50'000) > 49'999) break;
            bool swept = false;
            for (int blk : st.unused_list()) {
                for_each_subset_of<Vertex>(uncov, b, [&](const std::vector<Vertex>& bset) {
                    if (st.try_add(blk, bset)) {
                        swept = true;
                        return false;
                    }
                    return true;
                });
                if (swept) break;
            }
            stats["greedy_sweeps"] += 1;
            if (!swept) break;
        }
    }
    stats["after_greedy_uncovered"] = st.uncovered;
}

// Exact bounded search: cover the remaining vertices with unused blocks,
// skipping at most skip_budget of them.
bool endgame_phase(CoverState& st, int skip_budget, long long node_budget,
                   std::map<std::string, double>& stats) {
    std::vector<Vertex> uncov = st.uncovered_list();
    std::vector<int> unused = st.unused_list();
    const int b = st.F.b;
    long long nodes = 0;

    struct Placement {
        int blk;
        RainbowCopy copy;
    };
    std::vector<Placement> chosen;
    std::vector<char> in_use(uncov.size(), 0);
    std::vector<char> blk_used(unused.size(), 0);

    std::function<bool(size_t, int)> rec = [&](size_t pos, int skips) -> bool {
        while (pos < uncov.size() && in_use[pos]) ++pos;
        if (pos == uncov.size()) return true;
        if (++nodes > node_budget) return false;

        // option 1: cover uncov[pos]
        std::vector<size_t> rest;
        for (size_t i = pos + 1; i < uncov.size(); ++i)
            if (!in_use[i]) rest.push_back(i);
        bool done = false;
        for_each_subset_of<size_t>(rest, b - 1, [&](const std::vector<size_t>& others) {
            std::vector<Vertex> bset;
            bset.push_back(uncov[pos]);
            for (size_t i : others) bset.push_back(uncov[i]);
            std::sort(bset.begin(), bset.end());
            for (size_t ui = 0; ui < unused.size(); ++ui) {
                if (blk_used[ui]) continue;
                if (++nodes > node_budget) return false;
                auto copy = first_copy_on(st.sys, st.F, bset, st.block_colors(unused[ui]));
                if (!copy) continue;
                in_use[pos] = 1;
                for (size_t i : others) in_use[i] = 1;
                blk_used[ui] = 1;
                chosen.push_back({unused[ui], *copy});
                if (rec(pos + 1, skips)) { done = true; return false; }
                chosen.pop_back();
                blk_used[ui] = 0;
                in_use[pos] = 0;
                for (size_t i : others) in_use[i] = 0;
            }
            return nodes <= node_budget;
        });
        if (done) return true;
        if (nodes > node_budget) return false;

        // option 2: leave uncov[pos] uncovered
        if (skips > 0) {
            in_use[pos] = 1;
            if (rec(pos + 1, skips - 1)) return true;
            in_use[pos] = 0;
        }
        return false;
    };

    bool ok = rec(0, skip_budget);
    stats["endgame_nodes"] = static_cast<double>(nodes);
    if (ok)
        for (const Placement& pl : chosen) st.add(pl.blk, pl.copy);
    return ok;
}

void nibble_phase(CoverState& st, const PipelineConfig& cfg, Rng& rng,
                  std::map<std::string, double>& stats) {
    FbGraph g = build_fb_graph(st.sys, st.F, /*strict=*/true);
    RoundSet rs = two_round_sample(g, nibble_round_params(cfg), rng);
    stats["nibble_rounds_ok"] = rs.ok ? 1 : 0;
    if (!rs.ok) {
        log_warn("nibble: round sampling failed (" + rs.failure + "); falling through to greedy");
        return;
    }

    std::vector<RoundWeights> weights(rs.rounds.size());
    int rounds_with_pfm = 0;
    for (size_t r = 0; r < rs.rounds.size(); ++r) {
        const Round& rd = rs.rounds[r];
        std::vector<size_t> induced = round_induced_edges(g, rd);
        if (induced.empty() || rd.blocks.empty()) continue;
        // contracted hypergraph: round blocks then round hosts, local ids
        std::vector<int> blk_local(static_cast<size_t>(g.blocks()), -1);
        std::vector<int> v_local(static_cast<size_t>(g.n()), -1);
        int next = 0;
        for (int blk : rd.blocks) blk_local[static_cast<size_t>(blk)] = next++;
        for (Vertex v : rd.verts) v_local[static_cast<size_t>(v)] = next++;
        Hypergraph h;
        h.n = next;
        for (size_t idx : induced) {
            const FbEdge& e = g.edges()[idx];
            std::vector<Vertex> he;
            he.push_back(blk_local[static_cast<size_t>(e.block)]);
            for (Vertex v : e.bset) he.push_back(v_local[static_cast<size_t>(v)]);
            std::sort(he.begin(), he.end());
            h.edges.push_back(std::move(he));
        }
        PfmResult pfm = has_perfect_fractional_matching(h, 1 + g.b());
        if (!pfm.has_pfm) continue;
        ++rounds_with_pfm;
        weights[r].edge_idx = induced;
        for (const Rat& x : pfm.sol.weights) weights[r].weight.push_back(x.get_d());
    }
    stats["nibble_rounds_with_pfm"] = rounds_with_pfm;
    if (rounds_with_pfm == 0) return;

    NearRegularResult nr = sample_near_regular(g, rs, weights, near_regular_params(cfg), rng);
    stats["nibble_nr_ok"] = nr.ok ? 1 : 0;
    stats["nibble_nr_edges"] = static_cast<double>(nr.edge_idx.size());

    // iterated random greedy on the sparse subgraph
    std::vector<size_t> order = nr.edge_idx;
    rng.shuffle(order);
    int added = 0;
    for (size_t idx : order) {
        const FbEdge& e = g.edges()[idx];
        if (st.block_used[static_cast<size_t>(e.block)]) continue;
        bool clash = false;
        for (Vertex v : e.bset)
            if (st.covered[static_cast<size_t>(v)]) { clash = true; break; }
        if (clash) continue;
        if (st.try_add(e.block, e.bset)) ++added;
    }
    stats["nibble_added"] = added;
}

void lp_phase(CoverState& st, const PipelineConfig& cfg, Rng& rng,
              std::map<std::string, double>& stats) {
    FbGraph g = build_fb_graph(st.sys, st.F, /*strict=*/true);
    const size_t total = g.edges().size();
    if (total == 0) return;

    size_t cap = static_cast<size_t>(cfg.lp_col_cap);
    std::vector<size_t> cols;
    std::vector<Rat> x;
    bool has = false;
    for (int escalation = 0; escalation < 4 && !has; ++escalation) {
        cols.clear();
        if (total <= cap) {
            for (size_t i = 0; i < total; ++i) cols.push_back(i);
        } else {
            std::vector<int> s =
                rng.sample_sorted(static_cast<int>(total), static_cast<int>(cap));
            cols.assign(s.begin(), s.end());
        }
        Hypergraph h;
        h.n = g.blocks() + g.n();
        for (size_t idx : cols) {
            const FbEdge& e = g.edges()[idx];
            std::vector<Vertex> he;
            he.push_back(e.block);
            for (Vertex v : e.bset) he.push_back(g.blocks() + v);
            std::sort(he.begin(), he.end());
            h.edges.push_back(std::move(he));
        }
        PfmResult pfm = has_perfect_fractional_matching(h, 1 + g.b());
        stats["lp_columns"] = static_cast<double>(cols.size());
        if (pfm.has_pfm) {
            has = true;
            x = pfm.sol.weights;
        } else if (total <= cap) {
            break;  // the full graph has no perfect fractional matching
        } else {
            cap *= 2;
        }
    }
    stats["lp_pfm"] = has ? 1 : 0;
    if (!has) return;

    // randomized rounding, then conflict resolution in random order
    std::vector<size_t> rounded;
    for (size_t i = 0; i < cols.size(); ++i) {
        double p = std::clamp(x[i].get_d(), 0.0, 1.0);
        if (rng.bernoulli(p)) rounded.push_back(cols[i]);
    }
    rng.shuffle(rounded);
    int added = 0;
    for (size_t idx : rounded) {
        const FbEdge& e = g.edges()[idx];
        if (st.block_used[static_cast<size_t>(e.block)]) continue;
        bool clash = false;
        for (Vertex v : e.bset)
            if (st.covered[static_cast<size_t>(v)]) { clash = true; break; }
        if (clash) continue;
        if (st.try_add(e.block, e.bset)) ++added;
    }
    stats["lp_added"] = added;
}

}  // namespace

CoverResult almost_cover(const System& sys, const Pattern& F, const PipelineConfig& cfg,
                         CoverStrategy strategy, int max_leftover, Rng& rng) {
    if (F.f <= 0 || F.b <= 0) fail_invalid("cover: bad pattern");
    if (sys.n % F.b != 0 || sys.m * F.b != sys.n * F.f)
        fail_invalid("cover: residual system must be balanced (b | n, m = n f / b)");
    const int blocks = sys.m / F.f;

    CoverResult best;
    bool have_best = false;
    for (int restart = 0; restart < cfg.cover_restarts; ++restart) {
        CoverState st(sys, F, blocks);
        std::map<std::string, double> stats;
        stats["restart"] = restart;

        if (strategy == CoverStrategy::Nibble) nibble_phase(st, cfg, rng, stats);
        else if (strategy == CoverStrategy::LpRounding) lp_phase(st, cfg, rng, stats);
        greedy_phase(st, cfg, rng, stats);

        if (st.uncovered > 0 && st.uncovered <= cfg.endgame_threshold) {
            int skip_budget = std::min(max_leftover, st.uncovered);
            endgame_phase(st, skip_budget, cfg.endgame_nodes, stats);
        }

        CoverResult res;
        res.packing = std::move(st.packing);
        res.leftover = st.uncovered_list();
        res.unused_blocks = st.unused_list();
        res.ok = static_cast<int>(res.leftover.size()) <= max_leftover;
        res.stats = std::move(stats);
        res.stats["leftover"] = static_cast<double>(res.leftover.size());
        if (res.ok) {
            res.stats["restarts_used"] = restart + 1;
            return res;
        }
        if (!have_best ||
            res.leftover.size() < best.leftover.size()) {
            best = std::move(res);
            have_best = true;
        }
    }
    best.stats["restarts_used"] = cfg.cover_restarts;
    return best;
}

}  // namespace rf
