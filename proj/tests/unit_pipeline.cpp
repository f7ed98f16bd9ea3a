#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"

#include "core/pattern.hpp"
#include "fb/fb_graph.hpp"
#include "oracle/generators.hpp"
#include "pipeline/absorbing.hpp"
#include "pipeline/config.hpp"
#include "pipeline/cover.hpp"
#include "pipeline/rounds.hpp"
#include "pipeline/select_matching.hpp"
#include "pipeline/solve.hpp"
#include "util/rng.hpp"

using namespace rf;

TEST_CASE("config keys parse and validate") {
    PipelineConfig cfg;
    cfg.apply_kv("eps", "0.1");
    cfg.apply_kv("gamma1", "0.02");
    cfg.apply_kv("retries", "7");
    cfg.apply_kv("cover_strategy", "nibble");
    cfg.apply_kv("seed", "99");
    CHECK(cfg.eps == doctest::Approx(0.1));
    CHECK(cfg.gamma1 == doctest::Approx(0.02));
    CHECK(cfg.retries == 7);
    CHECK(cfg.cover_strategy == "nibble");
    CHECK(cfg.seed == 99);

    CHECK_THROWS_AS(cfg.apply_kv("no_such_knob", "1"), Error);
    CHECK_THROWS_AS(cfg.apply_kv("cover_strategy", "magic"), Error);
    CHECK_THROWS_AS(cfg.apply_kv("eps", "banana"), Error);

    PipelineConfig bad;
    bad.eps = 2.0;
    CHECK_THROWS_AS(bad.validate(30), Error);
}

TEST_CASE("constant chain warns at desk scale and fails asymptotically") {
    PipelineConfig cfg;  // desk defaults break phi << gamma1 eps'/8 on purpose
    auto warnings = cfg.validate(30);
    CHECK(!warnings.empty());
    CHECK_THROWS_AS(cfg.validate(cfg.asymptotic_n), Error);

    PipelineConfig strict;
    strict.eps = 0.3;
    strict.eps_prime = 0.2;
    strict.gamma1 = 0.004;
    strict.phi = 0.00005;
    CHECK(strict.validate(strict.asymptotic_n).empty());
}

TEST_CASE("config file application") {
    std::string path = "/tmp/rf_unit_cfg.txt";
    {
        std::ofstream out(path);
        out << "# tuning\n";
        out << "eps = 0.2\n";
        out << "round_count=9   # trailing comment\n";
    }
    PipelineConfig cfg;
    cfg.apply_file(path);
    CHECK(cfg.eps == doctest::Approx(0.2));
    CHECK(cfg.round_count == 9);
    std::remove(path.c_str());
    CHECK_THROWS_AS(cfg.apply_file("/tmp/rf_no_such_file.txt"), Error);
}

TEST_CASE("degree thresholds derive from the pattern") {
    PipelineConfig cfg;
    CHECK(cfg.cover_threshold(Pattern::parse("clique:3")) == doctest::Approx(2.0 / 3.0));
    CHECK(cfg.cover_threshold(Pattern::parse("edge:3")) == doctest::Approx(0.5));
    cfg.c_cov = 0.8;
    CHECK(cfg.cover_threshold(Pattern::parse("clique:3")) == doctest::Approx(0.8));
}

TEST_CASE("selection step deletes the later of intersecting picks") {
    std::vector<std::optional<std::vector<Vertex>>> picks = {
        std::vector<Vertex>{0, 1},
        std::vector<Vertex>{1, 2},   // hits pick 0, dies
        std::vector<Vertex>{4, 5},
        std::vector<Vertex>{6, 7},
        std::nullopt,                // failed to draw
    };
    auto hit_all = [](int, int) { return true; };
    SelectionCheck chk = selection_step(picks, 1, hit_all, 0.8);
    CHECK(chk.alive == std::vector<char>{1, 0, 1, 1, 0});
    CHECK(chk.survivors == 3);
    CHECK(chk.hits == std::vector<int>{3});
    // needs ceil((1 - 0.8/4) * 5) = 4 survivors
    CHECK_FALSE(chk.size_ok);
    CHECK(chk.targets_ok);  // 3 >= 0.8 * 5 / 4 = 1

    std::vector<std::optional<std::vector<Vertex>>> clean = {
        std::vector<Vertex>{0, 1}, std::vector<Vertex>{2, 3}, std::vector<Vertex>{4, 5},
        std::vector<Vertex>{6, 7}, std::vector<Vertex>{8, 9},
    };
    SelectionCheck ok = selection_step(clean, 2, hit_all, 0.8);
    CHECK(ok.survivors == 5);
    CHECK(ok.size_ok);
    CHECK(ok.targets_ok);
}

TEST_CASE("selection of a large rainbow matching on dense targets") {
    System sys = gen_complete(30, 2, 6, false);
    std::vector<DKGraph> targets = sys.graphs;  // six complete graphs
    Rng rng(11);
    SelectResult r = select_absorbing_matching(sys, targets, 0.5, 24, rng);
    REQUIRE(r.ok);
    int t = static_cast<int>(targets.size());
    CHECK(r.survivors >= static_cast<int>(std::ceil((1.0 - 0.5 / 4.0) * t)));
    for (int h : r.target_hits) CHECK(h >= 0.5 * t / 4.0);

    // surviving picks are pairwise disjoint
    std::set<Vertex> seen;
    for (const auto& p : r.picks) {
        if (!p) continue;
        for (Vertex v : *p) CHECK(seen.insert(v).second);
    }
}

TEST_CASE("member shape depends on the pattern family") {
    CHECK(member_copy_count(Pattern::parse("clique:3")) == 3);
    CHECK(member_copy_count(Pattern::parse("clique:4")) == 4);
    CHECK(member_copy_count(Pattern::parse("ttour:3")) == 3);
    CHECK(member_copy_count(Pattern::parse("edge:2")) == 1);
    CHECK(member_copy_count(Pattern::parse("edge:3")) == 2);
}

TEST_CASE("absorbing structure on a complete host") {
    System sys = gen_complete(30, 2, 30, false);
    Pattern F = Pattern::parse("clique:3");
    PipelineConfig cfg;
    Rng rng(5);
    AbsorbingPacking pk = build_absorbing_packing(sys, F, cfg, rng);
    REQUIRE(pk.ok);
    REQUIRE(!pk.members.empty());

    const int q = member_copy_count(F);
    for (const auto& mem : pk.members) {
        CHECK(mem.interior.copies.size() == static_cast<size_t>(q));
        CHECK(mem.chunk.size() == static_cast<size_t>(q * F.f));
        CHECK(mem.verts.size() == static_cast<size_t>(q * F.b));
        std::string reason;
        CHECK(is_valid_packing(sys, F, mem.interior, &reason));
        CHECK_FALSE(mem.used);
    }
}

TEST_CASE("members complete into absorbers for concrete leftovers") {
    System sys = gen_complete(30, 2, 30, false);
    Pattern F = Pattern::parse("clique:3");
    PipelineConfig cfg;
    Rng rng(5);
    AbsorbingPacking pk = build_absorbing_packing(sys, F, cfg, rng);
    REQUIRE(pk.ok);
    REQUIRE(!pk.members.empty());
    const AbsorbingMember& mem = pk.members[0];

    // leftover disjoint from the member
    std::vector<Vertex> B;
    for (Vertex v = 0; v < sys.n && static_cast<int>(B.size()) < F.b; ++v)
        if (!std::binary_search(mem.verts.begin(), mem.verts.end(), v)) B.push_back(v);
    std::vector<Color> I;
    for (Color x = 0; x < sys.m && static_cast<int>(I.size()) < F.f; ++x)
        if (!std::binary_search(mem.chunk.begin(), mem.chunk.end(), x)) I.push_back(x);

    auto a = complete_member(sys, F, mem, B, I);
    REQUIRE(a.has_value());
    CHECK(validate_absorber(*a, sys, F).ok);
    CHECK(a->B == B);
    auto nc = a->new_colors();
    CHECK(std::vector<Color>(nc.begin(), nc.end()) == I);

    // overlapping leftovers are rejected up front
    std::vector<Vertex> overlap{mem.verts[0], B[1], B[2]};
    std::sort(overlap.begin(), overlap.end());
    CHECK_FALSE(complete_member(sys, F, mem, overlap, I).has_value());
}

TEST_CASE("absorber index consumes members one query at a time") {
    System sys = gen_complete(30, 2, 30, false);
    Pattern F = Pattern::parse("clique:3");
    PipelineConfig cfg;
    Rng rng(5);
    AbsorbingPacking pk = build_absorbing_packing(sys, F, cfg, rng);
    REQUIRE(pk.ok);
    int before = static_cast<int>(pk.members.size());

    AbsorberIndex index(sys, F, pk);
    CHECK(index.unused_count() == before);

    std::vector<Vertex> B;
    for (Vertex v = 0; v < sys.n && static_cast<int>(B.size()) < F.b; ++v) {
        bool inside = false;
        for (const auto& mem : pk.members)
            inside = inside || std::binary_search(mem.verts.begin(), mem.verts.end(), v);
        if (!inside) B.push_back(v);
    }
    std::vector<Color> I;
    for (Color x = 0; x < sys.m && static_cast<int>(I.size()) < F.f; ++x) {
        bool inside = false;
        for (const auto& mem : pk.members)
            inside = inside || std::binary_search(mem.chunk.begin(), mem.chunk.end(), x);
        if (!inside) I.push_back(x);
    }

    auto got = index.absorb_query(B, I);
    REQUIRE(got.has_value());
    CHECK(validate_absorber(*got, sys, F).ok);
    CHECK(index.unused_count() == before - 1);
}

TEST_CASE("two-round sampling produces balanced rounds within windows") {
    System sys = gen_complete(30, 2, 30, false);
    Pattern F = Pattern::parse("clique:3");
    FbGraph g = build_fb_graph(sys, F);
    PipelineConfig cfg;
    TwoRoundParams p = strict_round_params(cfg);
    Rng rng(3);
    RoundSet rs = two_round_sample(g, p, rng);
    REQUIRE_MESSAGE(rs.ok, rs.failure);
    CHECK(!rs.rounds.empty());
    CHECK(rs.s_verts.size() == rs.s_blocks.size() * static_cast<size_t>(g.b()));

    for (const Round& r : rs.rounds) {
        CHECK(r.verts.size() == r.blocks.size() * static_cast<size_t>(g.b()));
        CHECK(std::is_sorted(r.blocks.begin(), r.blocks.end()));
        CHECK(std::is_sorted(r.verts.begin(), r.verts.end()));
    }

    // edge multiplicity across rounds stays under the cap
    std::map<size_t, int> edge_mult;
    for (const Round& r : rs.rounds)
        for (size_t idx : round_induced_edges(g, r)) edge_mult[idx]++;
    for (const auto& [idx, cnt] : edge_mult) CHECK(cnt <= p.y_edge_max);
}

TEST_CASE("near-regular subsample tracks round counts") {
    System sys = gen_complete(6, 2, 6, false);
    FbGraph g = build_fb_graph(sys, Pattern::parse("clique:3"));

    RoundSet rs;
    rs.ok = true;
    Round r;
    r.blocks = {0, 1};
    r.verts = {0, 1, 2, 3, 4, 5};
    rs.rounds.push_back(r);

    auto induced = round_induced_edges(g, r);
    CHECK(induced.size() == 40);  // 2 blocks x C(6,3)
    RoundWeights w;
    w.edge_idx = induced;
    w.weight.assign(induced.size(), 1.0 / 20.0);  // per-host degree 20 in the round

    PipelineConfig cfg;
    NearRegularParams p = near_regular_params(cfg);
    Rng rng(17);
    NearRegularResult nr = sample_near_regular(g, rs, {w}, p, rng);
    REQUIRE_MESSAGE(nr.ok, nr.failure);
    for (size_t idx : nr.edge_idx) CHECK(std::find(induced.begin(), induced.end(), idx) != induced.end());
}

TEST_CASE("cover strategies tile a complete residual") {
    System sys = gen_complete(18, 2, 18, false);
    Pattern F = Pattern::parse("clique:3");
    PipelineConfig cfg;

    for (CoverStrategy strat :
         {CoverStrategy::Greedy, CoverStrategy::Nibble, CoverStrategy::LpRounding}) {
        Rng rng(7);
        CoverResult cr = almost_cover(sys, F, cfg, strat, 6, rng);
        REQUIRE(cr.ok);
        CHECK(cr.leftover.size() <= 6);
        std::string reason;
        CHECK(is_valid_packing(sys, F, cr.packing, &reason));
        CHECK(cr.packing.copies.size() * F.b + cr.leftover.size() == static_cast<size_t>(sys.n));
        CHECK(cr.unused_blocks.size() * F.b == cr.leftover.size());
    }
}

TEST_CASE("cover strategy names parse") {
    CHECK(parse_cover_strategy("greedy") == CoverStrategy::Greedy);
    CHECK(parse_cover_strategy("nibble") == CoverStrategy::Nibble);
    CHECK(parse_cover_strategy("lp_rounding") == CoverStrategy::LpRounding);
    CHECK_THROWS_AS(parse_cover_strategy("bogus"), Error);
}

TEST_CASE("absorption finds a verified factor on dense hosts") {
    System sys = gen_complete(30, 2, 30, false);
    Pattern F = Pattern::parse("clique:3");
    PipelineConfig cfg;
    SolveResult r = find_rainbow_factor(sys, F, cfg, "absorption");
    REQUIRE_MESSAGE(r.status == SolveStatus::Factor, r.message);
    std::string reason;
    CHECK(is_rainbow_factor(sys, F, r.factor, &reason));
    CHECK(r.stats.count("attempts") == 1);
}

TEST_CASE("absorption is deterministic given the seed") {
    System sys = gen_complete(30, 2, 30, false);
    Pattern F = Pattern::parse("clique:3");
    PipelineConfig cfg;
    cfg.seed = 123;
    SolveResult a = find_rainbow_factor(sys, F, cfg, "absorption");
    SolveResult b = find_rainbow_factor(sys, F, cfg, "absorption");
    REQUIRE(a.status == SolveStatus::Factor);
    REQUIRE(b.status == SolveStatus::Factor);
    REQUIRE(a.factor.copies.size() == b.factor.copies.size());
    for (size_t i = 0; i < a.factor.copies.size(); ++i) {
        CHECK(a.factor.copies[i].embed == b.factor.copies[i].embed);
        CHECK(a.factor.copies[i].colors == b.factor.copies[i].colors);
    }
}

TEST_CASE("small hosts run without an absorbing budget") {
    System sys = gen_complete(6, 2, 6, false);
    Pattern F = Pattern::parse("clique:3");
    PipelineConfig cfg;
    SolveResult r = find_rainbow_factor(sys, F, cfg, "absorption");
    REQUIRE_MESSAGE(r.status == SolveStatus::Factor, r.message);
    std::string reason;
    CHECK(is_rainbow_factor(sys, F, r.factor, &reason));
}

TEST_CASE("exact strategy agrees with the oracle") {
    Pattern F = Pattern::parse("clique:3");
    PipelineConfig cfg;

    SolveResult yes = find_rainbow_factor(gen_complete(6, 2, 6, false), F, cfg, "exact");
    CHECK(yes.status == SolveStatus::Factor);

    SolveResult no = find_rainbow_factor(gen_extremal(3, 6), F, cfg, "exact");
    CHECK(no.status == SolveStatus::Infeasible);
}

TEST_CASE("solve validates the instance against the pattern") {
    PipelineConfig cfg;
    // uniformity mismatch
    CHECK_THROWS_AS(
        find_rainbow_factor(gen_complete(6, 3, 2, false), Pattern::parse("clique:3"), cfg, "exact"),
        Error);
    // color count off balance
    CHECK_THROWS_AS(
        find_rainbow_factor(gen_complete(6, 2, 5, false), Pattern::parse("clique:3"), cfg, "exact"),
        Error);
    // partite pattern on a non-partite host
    CHECK_THROWS_AS(
        find_rainbow_factor(gen_complete(6, 2, 6, false), Pattern::parse("pclique:3"), cfg, "exact"),
        Error);
    // unknown strategy
    CHECK_THROWS_AS(
        find_rainbow_factor(gen_complete(6, 2, 6, false), Pattern::parse("clique:3"), cfg, "magic"),
        Error);
}

TEST_CASE("partite instances solve end to end") {
    System sys = gen_complete_partite(9, 3, 9);
    Pattern F = Pattern::parse("pclique:3");
    PipelineConfig cfg;
    SolveResult r = find_rainbow_factor(sys, F, cfg, "exact");
    REQUIRE(r.status == SolveStatus::Factor);
    std::string reason;
    CHECK(is_rainbow_factor(sys, F, r.factor, &reason));
}
