#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"

#include "core/pattern.hpp"
#include "fb/fb_graph.hpp"
#include "oracle/generators.hpp"
#include "util/comb.hpp"

using namespace rf;

TEST_CASE("reduction graph of a complete host") {
    // n = 6, t = 3: f = 3, b = 3, m = 6, two blocks
    System sys = gen_complete(6, 2, 6, false);
    Pattern F = Pattern::parse("clique:3");
    FbGraph g = build_fb_graph(sys, F);

    CHECK(g.strict());
    CHECK(g.blocks() == 2);
    CHECK(g.f() == 3);
    CHECK(g.b() == 3);
    CHECK(g.edges().size() == 2 * binomial(6, 3));
    CHECK(g.block_colors(1) == std::vector<Color>{3, 4, 5});
    CHECK(g.has_edge(0, {0, 1, 2}));
    CHECK(g.block_edge_index(0).size() == binomial(6, 3));
}

TEST_CASE("strict mode rejects unbalanced systems") {
    System sys = gen_complete(6, 2, 5, false);  // m b != n f
    Pattern F = Pattern::parse("clique:3");
    CHECK_THROWS_AS(build_fb_graph(sys, F, true), Error);
    FbGraph relaxed = build_fb_graph(sys, F, false);
    CHECK_FALSE(relaxed.strict());
    CHECK(relaxed.blocks() == 1);  // floor(5 / 3)
}

TEST_CASE("reduction graph text round trip") {
    System sys = gen_complete(6, 2, 6, false);
    FbGraph g = build_fb_graph(sys, Pattern::parse("clique:3"));
    FbGraph back = FbGraph::parse(g.serialize());
    CHECK(back.edges() == g.edges());
    CHECK(back.strict() == g.strict());
    CHECK_THROWS_AS(FbGraph::parse("fb 6 6 3"), Error);
}

TEST_CASE("matching and packing convert back and forth") {
    System sys = gen_complete(6, 2, 6, false);
    Pattern F = Pattern::parse("clique:3");
    FbGraph g = build_fb_graph(sys, F);

    std::vector<FbEdge> matching{{0, {0, 2, 4}}, {1, {1, 3, 5}}};
    RainbowPacking p = matching_to_packing(matching, sys, F);
    std::string reason;
    CHECK(is_rainbow_factor(sys, F, p, &reason));

    auto back = packing_to_matching(p, g);
    std::sort(back.begin(), back.end());
    CHECK(back == matching);
}

TEST_CASE("packing validity catches overlaps and color reuse") {
    System sys = gen_complete(6, 2, 6, false);
    Pattern F = Pattern::parse("clique:3");
    std::string reason;

    RainbowPacking overlap;
    overlap.copies.push_back({{0, 1, 2}, {0, 1, 2}});
    overlap.copies.push_back({{2, 3, 4}, {3, 4, 5}});
    CHECK_FALSE(is_valid_packing(sys, F, overlap, &reason));
    CHECK(reason.find("vertex") != std::string::npos);

    RainbowPacking reuse;
    reuse.copies.push_back({{0, 1, 2}, {0, 1, 2}});
    reuse.copies.push_back({{3, 4, 5}, {2, 3, 4}});
    CHECK_FALSE(is_valid_packing(sys, F, reuse, &reason));

    RainbowPacking partial;
    partial.copies.push_back({{0, 1, 2}, {0, 1, 2}});
    CHECK(is_valid_packing(sys, F, partial, &reason));
    CHECK_FALSE(is_rainbow_factor(sys, F, partial, &reason));  // not a cover
}

TEST_CASE("balance predicate weighs sides by f and b") {
    System sys = gen_complete(6, 2, 6, false);
    FbGraph g = build_fb_graph(sys, Pattern::parse("clique:3"));
    // one block's three colors (f = 3) balance b = 3 hosts
    CHECK(is_balanced(g, {0, 1, 2}, {0, 1, 2}));
    CHECK(is_balanced(g, {}, {}));
    CHECK_FALSE(is_balanced(g, {0, 1, 2}, {0, 1}));
    CHECK_FALSE(is_balanced(g, {0, 1}, {0, 1, 2}));
}

TEST_CASE("single edge pattern reduces with f = 1") {
    System sys = gen_complete(6, 3, 2, false);  // m = n f / b = 2
    Pattern F = Pattern::parse("edge:3");
    FbGraph g = build_fb_graph(sys, F);
    CHECK(g.f() == 1);
    CHECK(g.b() == 3);
    CHECK(g.blocks() == 2);
    CHECK(g.edges().size() == 2 * binomial(6, 3));
}
