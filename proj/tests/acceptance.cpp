// Acceptance gate: nine desk-scale checks, one line of output each.
// Every tolerance is pinned here as a named constant; the binary exits
// with the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "absorb/absorber.hpp"
#include "core/degree.hpp"
#include "core/pattern.hpp"
#include "fb/fb_graph.hpp"
#include "lp/complex.hpp"
#include "lp/matching_lp.hpp"
#include "oracle/generators.hpp"
#include "oracle/oracle.hpp"
#include "pipeline/config.hpp"
#include "pipeline/rounds.hpp"
#include "pipeline/select_matching.hpp"
#include "pipeline/solve.hpp"
#include "util/comb.hpp"
#include "util/rng.hpp"

using namespace rf;

namespace {

// pinned tolerances and sizes
constexpr int kDualitySuiteMin = 100;        // criterion 1
constexpr double kDualityBudgetSec = 60.0;
constexpr int kBijectionRuns = 50;           // criterion 2
constexpr int kLiftRuns = 200;               // criterion 3
constexpr int kComplexSeeds = 4;             // criterion 4, per (k, n, mode)
constexpr int kCompletionRuns = 100;         // criterion 5, per n
constexpr double kCompletionMinRate = 0.95;
constexpr int kAbsorberQuota = 500;          // criterion 6
constexpr int kEndToEndRuns = 100;           // criterion 7 (50 per n)
constexpr double kEndToEndMinRate = 0.90;
constexpr double kEndToEndBudgetSec = 120.0;
constexpr int kOracleAgreeRuns = 100;        // criterion 7, n = 12
constexpr int kSelectRuns = 100;             // criterion 8
constexpr double kSelectMinRate = 0.90;
constexpr double kSelectEps = 0.5;
constexpr int kRoundRuns = 100;              // criterion 9
constexpr double kNearRegularMinRate = 0.90;

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------------------
// criterion 1: exact LP duality across a mixed suite
// ---------------------------------------------------------------------------

bool matching_feasible(const Hypergraph& h, const FractionalSolution& s) {
    std::vector<Rat> load(static_cast<size_t>(h.n), Rat(0));
    Rat total(0);
    for (size_t i = 0; i < h.edges.size(); ++i) {
        if (s.weights[i] < 0) return false;
        for (Vertex v : h.edges[i]) load[static_cast<size_t>(v)] += s.weights[i];
        total += s.weights[i];
    }
    for (const Rat& l : load)
        if (l > 1) return false;
    return total == s.value;
}

bool cover_feasible(const Hypergraph& h, const FractionalSolution& s) {
    Rat total(0);
    for (const Rat& w : s.weights) {
        if (w < 0) return false;
        total += w;
    }
    if (total != s.value) return false;
    for (const auto& e : h.edges) {
        Rat sum(0);
        for (Vertex v : e) sum += s.weights[static_cast<size_t>(v)];
        if (sum < 1) return false;
    }
    return true;
}

std::vector<Hypergraph> duality_suite() {
    std::vector<Hypergraph> suite;

    // paths and cycles on 3..12 vertices
    for (int n = 3; n <= 12; ++n) {
        Hypergraph path;
        path.n = n;
        for (int i = 0; i + 1 < n; ++i) path.edges.push_back({i, i + 1});
        suite.push_back(path);

        Hypergraph cycle = path;
        cycle.edges.push_back({0, n - 1});
        suite.push_back(cycle);

        Hypergraph star;
        star.n = n;
        for (int i = 1; i < n; ++i) star.edges.push_back({0, i});
        suite.push_back(star);
    }

    // complete k-graphs
    for (int k = 2; k <= 3; ++k) {
        for (int n = k + 1; n <= 8; ++n) {
            Hypergraph comp;
            comp.n = n;
            for_each_subset(n, k, [&](const std::vector<int>& s) {
                comp.edges.push_back(s);
                return true;
            });
            suite.push_back(comp);
        }
    }

    // random uniform hypergraphs
    Rng rng(90001);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 4 + static_cast<int>(rng.below(9));
        int r = 2 + static_cast<int>(rng.below(3));
        Hypergraph h;
        h.n = n;
        int edges = 2 + static_cast<int>(rng.below(14));
        for (int i = 0; i < edges; ++i) {
            auto e = rng.sample_sorted(n, std::min(r, n));
            h.edges.emplace_back(e.begin(), e.end());
        }
        std::sort(h.edges.begin(), h.edges.end());
        h.edges.erase(std::unique(h.edges.begin(), h.edges.end()), h.edges.end());
        suite.push_back(h);
    }

    // reduction graphs of seeded systems
    Pattern F = Pattern::parse("clique:3");
    DegreeRule rule = DegreeRule::parse("standard:1");
    for (uint64_t seed = 0; seed < 15; ++seed) {
        int n = seed % 2 == 0 ? 6 : 9;
        System sys = gen_random_min_degree(n, 2, n, rule, std::llround(0.7 * (n - 1)), 0.4, seed);
        suite.push_back(to_hypergraph(build_fb_graph(sys, F)));
    }
    return suite;
}

Outcome criterion1() {
    auto t0 = std::chrono::steady_clock::now();
    auto suite = duality_suite();
    int bad = 0;
    for (const Hypergraph& h : suite) {
        auto nu = max_fractional_matching(h);
        auto tau = min_fractional_cover(h);
        if (nu.value != tau.value || !matching_feasible(h, nu) || !cover_feasible(h, tau)) ++bad;
    }
    double secs = seconds_since(t0);
    Outcome out;
    out.pass = static_cast<int>(suite.size()) >= kDualitySuiteMin && bad == 0 &&
               secs < kDualityBudgetSec;
    out.detail = std::to_string(suite.size()) + " hypergraphs, " + std::to_string(bad) +
                 " duality gaps, " + std::to_string(secs).substr(0, 5) + "s";
    return out;
}

// ---------------------------------------------------------------------------
// criterion 2: factor count equals perfect matching count
// ---------------------------------------------------------------------------

Outcome criterion2() {
    Pattern F = Pattern::parse("clique:3");
    DegreeRule rule = DegreeRule::parse("standard:1");
    int bad = 0, runs = 0;
    for (uint64_t seed = 0; seed < kBijectionRuns; ++seed) {
        int n = seed % 2 == 0 ? 6 : 9;
        long long delta = std::llround(0.7 * (n - 1));
        System sys = gen_random_min_degree(n, 2, n, rule, delta, 0.5, seed);
        long long pm = count_fb_perfect_matchings(build_fb_graph(sys, F));
        long long st = count_rainbow_factor_structures(sys, F);
        ++runs;
        if (pm < 0 || st < 0 || pm != st) ++bad;
    }
    Outcome out;
    out.pass = bad == 0 && runs == kBijectionRuns;
    out.detail = std::to_string(runs) + " systems, " + std::to_string(bad) + " count mismatches";
    return out;
}

// ---------------------------------------------------------------------------
// criterion 3: block-wise PFMs lift to the whole reduction graph
// ---------------------------------------------------------------------------

Outcome criterion3() {
    Rng rng(5150);
    int bad = 0, runs = 0;
    while (runs < kLiftRuns) {
        int blocks = 2 + static_cast<int>(rng.below(3));
        int b = 2 + static_cast<int>(rng.below(2));
        int f = 1 + static_cast<int>(rng.below(2));
        int n = blocks * b;
        FbGraph g(blocks * f, n, f, b);

        // guarantee per-block PFMs by planting a perfect matching per block
        std::set<std::pair<int, std::vector<Vertex>>> seen;
        auto put = [&](int blk, std::vector<Vertex> bset) {
            std::sort(bset.begin(), bset.end());
            if (seen.emplace(blk, bset).second) g.add_edge({blk, bset});
        };
        std::vector<Vertex> hosts(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) hosts[static_cast<size_t>(v)] = v;
        for (int blk = 0; blk < blocks; ++blk) {
            rng.shuffle(hosts);
            for (int i = 0; i < blocks; ++i)
                put(blk, {hosts.begin() + i * b, hosts.begin() + (i + 1) * b});
            int extra = static_cast<int>(rng.below(static_cast<uint64_t>(n) + 1));
            for (int i = 0; i < extra; ++i) {
                auto pick = rng.sample_sorted(n, b);
                put(blk, {pick.begin(), pick.end()});
            }
        }
        g.finalize();
        if (!g.strict()) { ++bad; ++runs; continue; }

        bool blocks_ok = true;
        for (int blk = 0; blk < blocks; ++blk)
            blocks_ok = blocks_ok &&
                        has_perfect_fractional_matching(block_hypergraph(g, blk), b).has_pfm;
        if (!blocks_ok) continue;  // not a valid sample for this criterion

        ++runs;
        if (!lift_block_pfm(g).has_pfm) ++bad;
    }
    Outcome out;
    out.pass = bad == 0;
    out.detail = std::to_string(runs) + " strict graphs with block PFMs, " + std::to_string(bad) +
                 " failed lifts";
    return out;
}

// ---------------------------------------------------------------------------
// criterion 4: degree-sequence complexes admit PFMs and low greedy ranks
// ---------------------------------------------------------------------------

Complex full_complex(int n, int k) {
    Complex c;
    c.n = n;
    c.k = k;
    c.levels.resize(static_cast<size_t>(k) + 1);
    c.levels[0] = {{}};
    for (int r = 1; r <= k; ++r)
        for_each_subset(n, r, [&](const std::vector<int>& s) {
            c.levels[static_cast<size_t>(r)].push_back(s);
            return true;
        });
    c.sort_levels();
    return c;
}

// all partial transversals of k classes of the given size
Complex full_partite_complex(int class_size, int k) {
    Complex c;
    c.n = class_size * k;
    c.k = k;
    c.num_classes = k;
    c.klass.resize(static_cast<size_t>(c.n));
    for (int v = 0; v < c.n; ++v) c.klass[static_cast<size_t>(v)] = v / class_size;
    c.levels.resize(static_cast<size_t>(k) + 1);
    c.levels[0] = {{}};
    for (int r = 1; r <= k; ++r)
        for_each_subset(c.n, r, [&](const std::vector<int>& s) {
            std::set<int> classes;
            for (int v : s) classes.insert(c.klass[static_cast<size_t>(v)]);
            if (static_cast<int>(classes.size()) == r)
                c.levels[static_cast<size_t>(r)].push_back(s);
            return true;
        });
    c.sort_levels();
    return c;
}

// delete random top edges while the degree bound survives
void thin_complex(Complex& c, Rng& rng) {
    auto& top = c.levels[static_cast<size_t>(c.k)];
    int tries = static_cast<int>(top.size());
    for (int i = 0; i < tries; ++i) {
        if (top.size() <= 1) break;
        size_t pick = rng.below(top.size());
        std::vector<Vertex> removed = top[pick];
        top.erase(top.begin() + static_cast<long>(pick));
        if (!degree_sequence_bound_met(c)) {
            top.insert(std::lower_bound(top.begin(), top.end(), removed), removed);
        }
    }
}

bool greedy_rank_ok(const Complex& c, int base, Rng& rng) {
    // identity plus seeded shuffled rankings
    for (int trial = 0; trial < 3; ++trial) {
        GreedyEdgeResult g;
        if (c.partite()) {
            std::vector<std::vector<Vertex>> orders(static_cast<size_t>(c.num_classes));
            for (int v = 0; v < c.n; ++v)
                orders[static_cast<size_t>(c.klass[static_cast<size_t>(v)])].push_back(v);
            if (trial > 0)
                for (auto& o : orders) rng.shuffle(o);
            g = greedy_low_index_edge_partite(c, orders);
        } else {
            std::vector<Vertex> order(static_cast<size_t>(c.n));
            for (int v = 0; v < c.n; ++v) order[static_cast<size_t>(v)] = v;
            if (trial > 0) rng.shuffle(order);
            g = greedy_low_index_edge(c, order);
        }
        if (!g.ok) return false;
        for (size_t j = 0; j < g.ranks.size(); ++j) {
            // rank bound (j-1) base / k + 1 over the class or vertex ranking
            long long bound = static_cast<long long>(j) * base / c.k + 1;
            if (g.ranks[j] > bound) return false;
        }
    }
    return true;
}

Outcome criterion4() {
    Rng rng(777);
    int bad = 0, runs = 0;
    for (int k : {2, 3}) {
        for (int mult : {2, 3, 4}) {
            int n = mult * k;
            for (int seed = 0; seed < kComplexSeeds; ++seed) {
                // uniform mode
                Complex c = full_complex(n, k);
                if (seed > 0) thin_complex(c, rng);
                ++runs;
                auto r = check_degree_sequence_pfm(c);
                if (!r.bound_met || !r.pfm.has_pfm || !greedy_rank_ok(c, c.n, rng)) ++bad;

                // partite mode: class size n/k = mult
                Complex p = full_partite_complex(mult, k);
                if (seed > 0) thin_complex(p, rng);
                ++runs;
                auto rp = check_degree_sequence_pfm(p);
                if (!rp.bound_met || !rp.pfm.has_pfm || !greedy_rank_ok(p, mult, rng)) ++bad;
            }
        }
    }
    Outcome out;
    out.pass = bad == 0;
    out.detail = std::to_string(runs) + " bounded complexes, " + std::to_string(bad) + " failures";
    return out;
}

// ---------------------------------------------------------------------------
// criterion 5: extremal sharpness
// ---------------------------------------------------------------------------

Outcome criterion5() {
    Pattern F = Pattern::parse("clique:3");
    std::string detail;
    bool pass = true;
    for (int n : {6, 9, 12}) {
        System barrier = gen_extremal(3, n);
        auto r = exact_rainbow_factor(barrier, F);
        bool infeasible = r.status == OracleStatus::Infeasible;

        int feasible = 0;
        for (uint64_t seed = 0; seed < kCompletionRuns; ++seed) {
            System done = gen_extremal_completion(3, n, seed);
            auto rc = exact_rainbow_factor(done, F);
            feasible += rc.status == OracleStatus::Factor ? 1 : 0;
        }
        double rate = static_cast<double>(feasible) / kCompletionRuns;
        pass = pass && infeasible && rate >= kCompletionMinRate;
        if (!detail.empty()) detail += ", ";
        detail += "n=" + std::to_string(n) + (infeasible ? " barrier" : " BARRIER-FAILED") + " " +
                  std::to_string(feasible) + "/" + std::to_string(kCompletionRuns);
    }
    return {pass, detail};
}

// ---------------------------------------------------------------------------
// criterion 6: absorber soundness at volume
// ---------------------------------------------------------------------------

bool gadget_sound(const RainbowAbsorber& a, const System& sys, const Pattern& F) {
    if (!validate_absorber(a, sys, F).ok) return false;
    std::set<Vertex> iv, ev;
    for (const auto& c : a.interior.copies) iv.insert(c.embed.begin(), c.embed.end());
    for (const auto& c : a.exterior.copies) ev.insert(c.embed.begin(), c.embed.end());
    if (ev.size() != iv.size() + static_cast<size_t>(F.b)) return false;
    if (a.exterior_colors().size() != a.interior_colors().size() + static_cast<size_t>(F.f))
        return false;
    return a.new_colors().size() == static_cast<size_t>(F.f);
}

Outcome criterion6() {
    int total = 0, bad = 0;

    // clique family across hosts and targets
    Pattern K3 = Pattern::parse("clique:3");
    for (int n : {12, 13}) {
        System sys = gen_complete(n, 2, n + 2, false);
        for (Vertex base = 0; base + 2 < n && total < kAbsorberQuota; ++base) {
            std::vector<Vertex> S{base, base + 1, base + 2};
            std::vector<Color> C;
            for (Color x = 0; x < 12; ++x) C.push_back((base + x) % sys.m);
            std::sort(C.begin(), C.end());
            auto gs = enumerate_clique_absorbers(sys, K3, S, C, 40);
            for (const auto& a : gs) {
                if (total >= kAbsorberQuota) break;
                ++total;
                if (!gadget_sound(a, sys, K3)) ++bad;
            }
        }
    }

    // matching family on reduction graphs
    Pattern E3 = Pattern::parse("edge:3");
    System h3 = gen_complete(9, 3, 3, false);
    FbGraph g3 = build_fb_graph(h3, E3);
    for (Vertex base = 0; base + 2 < 9 && total < kAbsorberQuota; ++base) {
        std::vector<Vertex> T{base, base + 1, base + 2};
        auto gs = enumerate_matching_absorbers(g3, T, {0, 1, 2}, 40);
        for (const auto& a : gs) {
            if (total >= kAbsorberQuota) break;
            ++total;
            if (!gadget_sound(a, h3, E3)) ++bad;
        }
    }

    Pattern E2 = Pattern::parse("edge:2");
    System h2 = gen_complete(8, 2, 4, false);
    FbGraph g2 = build_fb_graph(h2, E2);
    for (Vertex base = 0; base + 1 < 8 && total < kAbsorberQuota; ++base) {
        std::vector<Vertex> T{base, base + 1};
        auto gs = enumerate_matching_absorbers(g2, T, {0, 1}, 40);
        for (const auto& a : gs) {
            if (total >= kAbsorberQuota) break;
            ++total;
            if (!gadget_sound(a, h2, E2)) ++bad;
        }
    }

    Outcome out;
    out.pass = total >= kAbsorberQuota && bad == 0;
    out.detail = std::to_string(total) + " gadgets, " + std::to_string(bad) + " unsound";
    return out;
}

// ---------------------------------------------------------------------------
// criterion 7: end-to-end absorption and oracle agreement
// ---------------------------------------------------------------------------

Outcome criterion7() {
    Pattern F = Pattern::parse("clique:3");
    DegreeRule rule = DegreeRule::parse("standard:1");
    PipelineConfig cfg;

    int factors = 0;
    double worst = 0.0;
    for (int i = 0; i < kEndToEndRuns; ++i) {
        int n = i < kEndToEndRuns / 2 ? 30 : 60;
        uint64_t seed = static_cast<uint64_t>(i);
        long long delta = (3LL * n + 3) / 4;  // ceil(0.75 n)
        System sys = gen_random_min_degree(n, 2, n, rule, delta, 0.5, seed);
        auto t0 = std::chrono::steady_clock::now();
        cfg.seed = seed;
        SolveResult r = find_rainbow_factor(sys, F, cfg, "absorption");
        double secs = seconds_since(t0);
        worst = std::max(worst, secs);
        std::string reason;
        if (r.status == SolveStatus::Factor && is_rainbow_factor(sys, F, r.factor, &reason))
            ++factors;
    }
    double rate = static_cast<double>(factors) / kEndToEndRuns;

    int agree = 0;
    for (uint64_t seed = 0; seed < kOracleAgreeRuns; ++seed) {
        System sys = gen_random_min_degree(12, 2, 12, rule, 9, 0.5, seed);
        cfg.seed = seed;
        SolveResult r = find_rainbow_factor(sys, F, cfg, "absorption");
        auto o = exact_rainbow_factor(sys, F);
        bool both_factor = r.status == SolveStatus::Factor && o.status == OracleStatus::Factor;
        bool both_infeasible =
            r.status != SolveStatus::Factor && o.status == OracleStatus::Infeasible;
        if (both_factor || both_infeasible) ++agree;
    }

    Outcome out;
    out.pass = rate >= kEndToEndMinRate && worst < kEndToEndBudgetSec &&
               agree == kOracleAgreeRuns;
    out.detail = std::to_string(factors) + "/" + std::to_string(kEndToEndRuns) +
                 " factors, worst " + std::to_string(worst).substr(0, 5) + "s, oracle agreement " +
                 std::to_string(agree) + "/" + std::to_string(kOracleAgreeRuns);
    return out;
}

// ---------------------------------------------------------------------------
// criterion 8: selection postconditions at scaled parameters
// ---------------------------------------------------------------------------

Outcome criterion8() {
    const int n = 60, t = 6;
    System ctx = gen_complete(n, 2, t, false);
    int ok_runs = 0;
    for (uint64_t seed = 0; seed < kSelectRuns; ++seed) {
        // dense seeded targets: each pair kept with probability 0.85
        Rng gen = derive_stream(seed, "accept8/targets");
        std::vector<DKGraph> targets;
        for (int j = 0; j < t; ++j) {
            DKGraph z(n, 2);
            for_each_subset(n, 2, [&](const std::vector<int>& s) {
                if (gen.uniform01() < 0.85) z.add_edge({s, +1});
                return true;
            });
            z.finalize();
            targets.push_back(std::move(z));
        }
        Rng rng = derive_stream(seed, "accept8/select");
        SelectResult r = select_absorbing_matching(ctx, targets, kSelectEps, 24, rng);
        if (!r.ok) continue;

        // re-verify both postconditions independently
        int need = static_cast<int>(std::ceil((1.0 - kSelectEps / 4.0) * t));
        bool sizes = r.survivors >= need;
        bool hits = true;
        for (int h : r.target_hits) hits = hits && h >= kSelectEps * t / 4.0;
        std::set<Vertex> seen;
        bool disjoint = true;
        for (const auto& p : r.picks) {
            if (!p) continue;
            for (Vertex v : *p) disjoint = disjoint && seen.insert(v).second;
        }
        if (sizes && hits && disjoint) ++ok_runs;
    }
    Outcome out;
    double rate = static_cast<double>(ok_runs) / kSelectRuns;
    out.pass = rate >= kSelectMinRate;
    out.detail = std::to_string(ok_runs) + "/" + std::to_string(kSelectRuns) +
                 " runs met both postconditions";
    return out;
}

// ---------------------------------------------------------------------------
// criterion 9: two-round machinery
// ---------------------------------------------------------------------------

Outcome criterion9() {
    System sys = gen_complete(30, 2, 30, false);
    Pattern F = Pattern::parse("clique:3");
    FbGraph g = build_fb_graph(sys, F);
    PipelineConfig cfg;
    TwoRoundParams params = strict_round_params(cfg);
    NearRegularParams nr_params = near_regular_params(cfg);

    int balanced_runs = 0, edge_violations = 0, nr_ok = 0, sampled_ok = 0;
    for (uint64_t seed = 0; seed < kRoundRuns; ++seed) {
        Rng rng = derive_stream(seed, "accept9");
        RoundSet rs = two_round_sample(g, params, rng);
        if (!rs.ok) continue;
        ++sampled_ok;

        bool balanced = rs.s_verts.size() == rs.s_blocks.size() * static_cast<size_t>(g.b());
        std::map<size_t, int> mult;
        for (const Round& r : rs.rounds) {
            balanced = balanced && r.verts.size() == r.blocks.size() * static_cast<size_t>(g.b());
            for (size_t idx : round_induced_edges(g, r)) mult[idx]++;
        }
        if (balanced) ++balanced_runs;
        for (const auto& [idx, cnt] : mult)
            if (cnt > params.y_edge_max) ++edge_violations;

        // per-round fractional weights from the contracted matching LP
        std::vector<RoundWeights> weights(rs.rounds.size());
        for (size_t ri = 0; ri < rs.rounds.size(); ++ri) {
            const Round& r = rs.rounds[ri];
            if (r.blocks.empty()) continue;
            auto induced = round_induced_edges(g, r);
            std::map<int, int> block_id;
            std::map<Vertex, int> vert_id;
            for (size_t i = 0; i < r.blocks.size(); ++i) block_id[r.blocks[i]] = static_cast<int>(i);
            for (size_t i = 0; i < r.verts.size(); ++i)
                vert_id[r.verts[i]] = static_cast<int>(r.blocks.size() + i);
            Hypergraph h;
            h.n = static_cast<int>(r.blocks.size() + r.verts.size());
            for (size_t idx : induced) {
                const FbEdge& e = g.edges()[idx];
                std::vector<Vertex> he{block_id.at(e.block)};
                for (Vertex v : e.bset) he.push_back(vert_id.at(v));
                std::sort(he.begin(), he.end());
                h.edges.push_back(he);
            }
            auto pfm = has_perfect_fractional_matching(h, 1 + g.b());
            if (!pfm.has_pfm) continue;
            weights[ri].edge_idx = induced;
            for (const Rat& w : pfm.sol.weights) weights[ri].weight.push_back(w.get_d());
        }
        Rng nr_rng = derive_stream(seed, "accept9/nr");
        NearRegularResult nr = sample_near_regular(g, rs, weights, nr_params, nr_rng);
        if (nr.ok) ++nr_ok;
    }

    Outcome out;
    bool all_sampled = sampled_ok == kRoundRuns;
    bool all_balanced = balanced_runs == kRoundRuns;
    double nr_rate = static_cast<double>(nr_ok) / kRoundRuns;
    out.pass = all_sampled && all_balanced && edge_violations == 0 &&
               nr_rate >= kNearRegularMinRate;
    out.detail = std::to_string(balanced_runs) + "/" + std::to_string(kRoundRuns) +
                 " balanced, " + std::to_string(edge_violations) + " edge-cap violations, " +
                 std::to_string(nr_ok) + "/" + std::to_string(kRoundRuns) + " near-regular";
    return out;
}

}  // namespace

int main() {
    struct Entry {
        const char* name;
        Outcome (*fn)();
    };
    const Entry entries[] = {
        {"exact LP duality on a mixed suite", criterion1},
        {"factor count equals matching count", criterion2},
        {"block PFMs lift to the reduction graph", criterion3},
        {"degree-sequence complexes: PFM and greedy ranks", criterion4},
        {"extremal barriers sharp, completions feasible", criterion5},
        {"absorbers sound and swap by (+b,+f)", criterion6},
        {"end-to-end absorption and oracle agreement", criterion7},
        {"selection postconditions at scale", criterion8},
        {"two-round sampling and near-regularity", criterion9},
    };

    int failed = 0;
    for (size_t i = 0; i < sizeof(entries) / sizeof(entries[0]); ++i) {
        Outcome o;
        try {
            o = entries[i].fn();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::cout << "criterion " << (i + 1) << ": " << (o.pass ? "PASS" : "FAIL") << " - "
                  << entries[i].name << " (" << o.detail << ")" << std::endl;
        if (!o.pass) ++failed;
    }
    return failed;
}
