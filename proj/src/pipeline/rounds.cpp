#include "pipeline/rounds.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "util/comb.hpp"
#include "util/log.hpp"

namespace rf {

TwoRoundParams strict_round_params(const PipelineConfig& cfg) {
    TwoRoundParams p;
    p.rate = cfg.sample_rate;
    p.round_count = cfg.round_count;
    p.reserve_hosts = cfg.reserve_b;
    p.size_rel_slack = cfg.size_rel_slack;
    p.size_abs_slack = cfg.size_abs_slack;
    p.yv_rel_slack = cfg.yv_rel_slack;
    p.yv_abs_slack = cfg.yv_abs_slack;
    p.y_pair_max = cfg.y_pair_max;
    p.y_edge_max = cfg.y_edge_max;
    p.retries = cfg.retries;
    p.degree_stats = cfg.round_degree_stats;
    return p;
}

TwoRoundParams nibble_round_params(const PipelineConfig& cfg) {
    TwoRoundParams p = strict_round_params(cfg);
    p.rate = cfg.nibble_rate;
    p.round_count = cfg.nibble_rounds;
    p.y_pair_max = cfg.nibble_y_pair_max;
    p.y_edge_max = cfg.nibble_y_edge_max;
    return p;
}

NearRegularParams near_regular_params(const PipelineConfig& cfg) {
    NearRegularParams p;
    p.fail_frac = cfg.nr_fail_frac;
    p.abs_slack = cfg.nr_abs_slack;
    p.rel_slack = cfg.nr_rel_slack;
    p.delta2_cap = cfg.delta2_cap;
    p.retries = cfg.retries;
    return p;
}

namespace {

bool in_window(double value, double center, double rel, int abs_slack) {
    double slack = std::max(static_cast<double>(abs_slack), rel * center);
    return std::abs(value - center) <= slack;
}

}  // namespace

std::vector<size_t> round_induced_edges(const FbGraph& g, const Round& r) {
    std::vector<char> vin(static_cast<size_t>(g.n()), 0);
    for (Vertex v : r.verts) vin[static_cast<size_t>(v)] = 1;
    std::vector<size_t> out;
    for (int blk : r.blocks) {
        for (size_t idx : g.block_edge_index(blk)) {
            const FbEdge& e = g.edges()[idx];
            bool all = true;
            for (Vertex v : e.bset)
                if (!vin[static_cast<size_t>(v)]) { all = false; break; }
            if (all) out.push_back(idx);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

RoundSet two_round_sample(const FbGraph& g, const TwoRoundParams& p, Rng& rng) {
    RoundSet best;
    const int nb = g.blocks();
    const int n = g.n();
    const int b = g.b();

    int reserve_blocks = (p.reserve_hosts + b - 1) / b;
    reserve_blocks = std::min(reserve_blocks, nb);
    int reserve_hosts = std::min(reserve_blocks * b, n);
    // keep the reserve itself balanced
    reserve_blocks = reserve_hosts / b;
    reserve_hosts = reserve_blocks * b;

    for (int attempt = 0; attempt < p.retries; ++attempt) {
        RoundSet rs;
        // reserve: random blocks, random hosts
        rs.s_blocks = rng.sample_sorted(nb, reserve_blocks);
        rs.s_verts = rng.sample_sorted(n, reserve_hosts);
        std::vector<char> sb(static_cast<size_t>(nb), 0), sv(static_cast<size_t>(n), 0);
        for (int x : rs.s_blocks) sb[static_cast<size_t>(x)] = 1;
        for (Vertex x : rs.s_verts) sv[static_cast<size_t>(x)] = 1;

        // Each round is an i.i.d. sample conditioned on being balanceable by
        // deleting reserve elements only; unbalanceable draws are rejected
        // and redrawn, the desk-scale form of conditioning on the almost-sure
        // balancing event.
        bool balanced_ok = true;
        for (int r = 0; r < p.round_count && balanced_ok; ++r) {
            bool made = false;
            for (int redraw = 0; redraw < p.retries && !made; ++redraw) {
                Round rd;
                for (int blk = 0; blk < nb; ++blk)
                    if (rng.bernoulli(p.rate)) rd.blocks.push_back(blk);
                for (Vertex v = 0; v < n; ++v)
                    if (rng.bernoulli(p.rate)) rd.verts.push_back(v);

                // rebalance to |verts| = b |blocks| by deleting reserve elements
                int ab = static_cast<int>(rd.blocks.size());
                int av = static_cast<int>(rd.verts.size());
                int del_b_avail = 0, del_v_avail = 0;
                for (int blk : rd.blocks) del_b_avail += sb[static_cast<size_t>(blk)];
                for (Vertex v : rd.verts) del_v_avail += sv[static_cast<size_t>(v)];
                // keep ka blocks and b*ka hosts
                int ka_hi = std::min(ab, av / b);
                int ka_lo = std::max(ab - del_b_avail, (av - del_v_avail + b - 1) / b);
                if (ka_lo > ka_hi) continue;
                int ka = ka_hi;
                int drop_b = ab - ka;
                int drop_v = av - b * ka;
                // drop the highest reserve elements present
                for (auto it = rd.blocks.rbegin(); it != rd.blocks.rend() && drop_b > 0;) {
                    if (sb[static_cast<size_t>(*it)]) {
                        rd.blocks.erase(std::next(it).base());
                        --drop_b;
                        it = rd.blocks.rbegin();
                    } else ++it;
                }
                for (auto it = rd.verts.rbegin(); it != rd.verts.rend() && drop_v > 0;) {
                    if (sv[static_cast<size_t>(*it)]) {
                        rd.verts.erase(std::next(it).base());
                        --drop_v;
                        it = rd.verts.rbegin();
                    } else ++it;
                }
                rs.rounds.push_back(std::move(rd));
                made = true;
            }
            if (!made) balanced_ok = false;
        }
        if (!balanced_ok) {
            best = std::move(rs);
            best.failure = "balance: a round cannot be balanced from the reserve";
            continue;
        }

        // property 1: round sizes near their expectations
        bool sizes_ok = true;
        for (const Round& rd : rs.rounds) {
            if (!in_window(static_cast<double>(rd.verts.size()), p.rate * n,
                           p.size_rel_slack, p.size_abs_slack) ||
                !in_window(static_cast<double>(rd.blocks.size()), p.rate * nb,
                           p.size_rel_slack, p.size_abs_slack)) {
                sizes_ok = false;
                break;
            }
        }
        if (!sizes_ok) {
            best = std::move(rs);
            best.failure = "size window: a round strays from its expected size";
            continue;
        }

        // property 2: per-element round counts
        std::vector<int> yv(static_cast<size_t>(n), 0), yb(static_cast<size_t>(nb), 0);
        for (const Round& rd : rs.rounds) {
            for (Vertex v : rd.verts) ++yv[static_cast<size_t>(v)];
            for (int blk : rd.blocks) ++yb[static_cast<size_t>(blk)];
        }
        double y_center = p.rate * p.round_count;
        bool y_ok = true;
        for (int v = 0; v < n && y_ok; ++v) {
            if (sv[static_cast<size_t>(v)]) {
                // reserve elements only lose rounds: upper bound only
                if (yv[static_cast<size_t>(v)] >
                    y_center + std::max(static_cast<double>(p.yv_abs_slack),
                                        p.yv_rel_slack * y_center))
                    y_ok = false;
            } else if (!in_window(yv[static_cast<size_t>(v)], y_center, p.yv_rel_slack,
                                  p.yv_abs_slack)) {
                y_ok = false;
            }
        }
        for (int blk = 0; blk < nb && y_ok; ++blk) {
            if (sb[static_cast<size_t>(blk)]) {
                if (yb[static_cast<size_t>(blk)] >
                    y_center + std::max(static_cast<double>(p.yv_abs_slack),
                                        p.yv_rel_slack * y_center))
                    y_ok = false;
            } else if (!in_window(yb[static_cast<size_t>(blk)], y_center, p.yv_rel_slack,
                                  p.yv_abs_slack)) {
                y_ok = false;
            }
        }
        if (!y_ok) {
            best = std::move(rs);
            best.failure = "round counts: an element's round count leaves its window";
            continue;
        }

        // property 3: pair multiplicities (pairs across both sides; blocks
        // are offset by n to share one id space)
        std::map<std::pair<int, int>, int> ypair;
        bool pair_ok = true;
        for (const Round& rd : rs.rounds) {
            std::vector<int> ids;
            for (Vertex v : rd.verts) ids.push_back(v);
            for (int blk : rd.blocks) ids.push_back(n + blk);
            for (size_t i = 0; i < ids.size() && pair_ok; ++i)
                for (size_t j = i + 1; j < ids.size(); ++j) {
                    int c = ++ypair[{ids[i], ids[j]}];
                    if (c > p.y_pair_max) { pair_ok = false; break; }
                }
            if (!pair_ok) break;
        }
        if (!pair_ok) {
            best = std::move(rs);
            best.failure = "pair multiplicity: a pair appears in too many rounds";
            continue;
        }

        // property 4: edge multiplicities
        bool edge_ok = true;
        {
            std::vector<int> ye(g.edges().size(), 0);
            for (const Round& rd : rs.rounds)
                for (size_t idx : round_induced_edges(g, rd))
                    if (++ye[idx] > p.y_edge_max) { edge_ok = false; break; }
        }
        if (!edge_ok) {
            best = std::move(rs);
            best.failure = "edge multiplicity: an edge is induced by too many rounds";
            continue;
        }

        // property 5, stats only: min (block, host) codegree inside a round
        if (p.degree_stats) {
            long long min_d11 = -1;
            for (const Round& rd : rs.rounds) {
                std::vector<size_t> induced = round_induced_edges(g, rd);
                std::map<std::pair<int, Vertex>, long long> d;
                for (size_t idx : induced) {
                    const FbEdge& e = g.edges()[idx];
                    for (Vertex v : e.bset) ++d[{e.block, v}];
                }
                for (int blk : rd.blocks)
                    for (Vertex v : rd.verts) {
                        auto it = d.find({blk, v});
                        long long val = (it == d.end()) ? 0 : it->second;
                        if (min_d11 < 0 || val < min_d11) min_d11 = val;
                    }
            }
            rs.stats["round_min_d11"] = static_cast<double>(min_d11 < 0 ? 0 : min_d11);
        }
        rs.stats["attempts"] = attempt + 1;
        rs.stats["reserve_hosts"] = reserve_hosts;
        rs.ok = true;
        return rs;
    }
    best.stats["attempts"] = p.retries;
    return best;
}

NearRegularResult sample_near_regular(const FbGraph& g, const RoundSet& rs,
                                      const std::vector<RoundWeights>& weights,
                                      const NearRegularParams& p, Rng& rng) {
    NearRegularResult best;
    if (weights.size() != rs.rounds.size())
        fail_invalid("near-regular: one weight vector per round required");

    // first round containing each edge, with its weight there
    std::vector<int> first_round(g.edges().size(), -1);
    std::vector<double> w_first(g.edges().size(), 0.0);
    for (size_t r = 0; r < rs.rounds.size(); ++r) {
        const RoundWeights& rw = weights[r];
        if (rw.edge_idx.size() != rw.weight.size())
            fail_invalid("near-regular: weight vector length mismatch");
        for (size_t i = 0; i < rw.edge_idx.size(); ++i) {
            size_t idx = rw.edge_idx[i];
            if (idx >= g.edges().size()) fail_invalid("near-regular: edge index out of range");
            if (first_round[idx] < 0) {
                first_round[idx] = static_cast<int>(r);
                w_first[idx] = std::clamp(rw.weight[i], 0.0, 1.0);
            }
        }
    }

    std::vector<char> sv(static_cast<size_t>(g.n()), 0);
    for (Vertex v : rs.s_verts) sv[static_cast<size_t>(v)] = 1;
    std::vector<int> yv(static_cast<size_t>(g.n()), 0);
    for (const Round& rd : rs.rounds)
        for (Vertex v : rd.verts) ++yv[static_cast<size_t>(v)];

    for (int attempt = 0; attempt < p.retries; ++attempt) {
        NearRegularResult res;
        for (size_t idx = 0; idx < g.edges().size(); ++idx)
            if (first_round[idx] >= 0 && rng.bernoulli(w_first[idx]))
                res.edge_idx.push_back(idx);

        // host degrees against round counts
        std::vector<int> deg(static_cast<size_t>(g.n()), 0);
        for (size_t idx : res.edge_idx)
            for (Vertex v : g.edges()[idx].bset) ++deg[static_cast<size_t>(v)];
        int off = 0, tracked = 0;
        for (int v = 0; v < g.n(); ++v) {
            if (sv[static_cast<size_t>(v)] || yv[static_cast<size_t>(v)] == 0) continue;
            ++tracked;
            double center = yv[static_cast<size_t>(v)];
            double slack = std::max(static_cast<double>(p.abs_slack), p.rel_slack * center);
            if (std::abs(deg[static_cast<size_t>(v)] - center) > slack) ++off;
        }
        res.stats["tracked_hosts"] = tracked;
        res.stats["off_window_hosts"] = off;

        // pair codegrees
        std::map<std::pair<Vertex, Vertex>, int> cod;
        int max_cod = 0;
        for (size_t idx : res.edge_idx) {
            const auto& bs = g.edges()[idx].bset;
            for (size_t i = 0; i < bs.size(); ++i)
                for (size_t j = i + 1; j < bs.size(); ++j)
                    max_cod = std::max(max_cod, ++cod[{bs[i], bs[j]}]);
        }
        res.stats["max_codegree"] = max_cod;
        res.stats["edges"] = static_cast<double>(res.edge_idx.size());
        res.stats["attempts"] = attempt + 1;

        bool deg_ok = tracked == 0 ||
                      static_cast<double>(off) <= p.fail_frac * static_cast<double>(tracked);
        bool cod_ok = max_cod <= p.delta2_cap;
        if (deg_ok && cod_ok) {
            res.ok = true;
            return res;
        }
        res.failure = !deg_ok ? "host degrees drift from their round counts"
                              : "pair codegree exceeds its cap";
        best = std::move(res);
    }
    return best;
}

}  // namespace rf
