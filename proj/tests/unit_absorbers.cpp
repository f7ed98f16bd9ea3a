#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"

#include "absorb/absorber.hpp"
#include "core/pattern.hpp"
#include "fb/fb_graph.hpp"
#include "oracle/generators.hpp"

using namespace rf;

namespace {

// sorted union size of a packing's vertices
std::vector<Vertex> packing_verts(const RainbowPacking& p) {
    std::vector<Vertex> out;
    for (const auto& c : p.copies) out.insert(out.end(), c.embed.begin(), c.embed.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Color> packing_colors(const RainbowPacking& p) {
    std::vector<Color> out;
    for (const auto& c : p.copies) out.insert(out.end(), c.colors.begin(), c.colors.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("clique gadgets enumerate, validate, and swap by (+b, +f)") {
    // t = 3 gadget: 9 interior vertices + target 3-set, 12 colors
    System sys = gen_complete(13, 2, 13, false);
    Pattern F = Pattern::parse("clique:3");
    std::vector<Vertex> S{0, 1, 2};
    std::vector<Color> C{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};

    auto gadgets = enumerate_clique_absorbers(sys, F, S, C, 8);
    REQUIRE(!gadgets.empty());
    CHECK(gadgets.size() == 8);

    for (const auto& a : gadgets) {
        auto v = validate_absorber(a, sys, F);
        CHECK(v.ok);
        CHECK(a.B == S);
        CHECK(a.L.size() == 9);
        CHECK(a.interior.copies.size() == 3);
        CHECK(a.exterior.copies.size() == 4);

        // swap delta: +b vertices, +f colors
        auto iv = packing_verts(a.interior);
        auto ev = packing_verts(a.exterior);
        CHECK(iv == a.L);
        CHECK(ev.size() == iv.size() + static_cast<size_t>(F.b));
        CHECK(a.exterior_colors().size() == a.interior_colors().size() + static_cast<size_t>(F.f));
        CHECK(a.new_colors().size() == static_cast<size_t>(F.f));

        // interior colors all come from C's first 9, new colors from anywhere in C
        for (Color x : a.new_colors())
            CHECK(std::find(C.begin(), C.end(), x) != C.end());
    }
}

TEST_CASE("clique gadgets need gadget-sized room") {
    // 11 vertices cannot hold a 3-set target plus 9 interior vertices
    System sys = gen_complete(11, 2, 12, false);
    Pattern F = Pattern::parse("clique:3");
    auto gadgets = enumerate_clique_absorbers(sys, F, {0, 1, 2},
                                              {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}, 4);
    CHECK(gadgets.empty());
}

TEST_CASE("matching gadgets enumerate on the reduction graph") {
    // edge:3 on a complete 3-graph; b = 3, f = 1, carriers need 6 vertices
    System sys = gen_complete(9, 3, 3, false);
    Pattern F = Pattern::parse("edge:3");
    FbGraph g = build_fb_graph(sys, F);

    std::vector<Vertex> T{0, 1, 2};
    std::vector<Color> C{0, 1, 2};
    auto gadgets = enumerate_matching_absorbers(g, T, C, 6);
    REQUIRE(!gadgets.empty());

    for (const auto& a : gadgets) {
        auto v = validate_absorber(a, sys, F);
        CHECK(v.ok);
        CHECK(a.B == T);
        CHECK(a.L.size() == 6);               // (k-1) carrier edges
        CHECK(a.interior.copies.size() == 2);  // b - 1
        CHECK(a.exterior.copies.size() == 3);  // bridge + swaps
        CHECK(a.new_colors().size() == 1);
    }
}

TEST_CASE("validation rejects tampered gadgets") {
    System sys = gen_complete(13, 2, 13, false);
    Pattern F = Pattern::parse("clique:3");
    auto gadgets = enumerate_clique_absorbers(
        sys, F, {0, 1, 2}, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}, 1);
    REQUIRE(gadgets.size() == 1);

    RainbowAbsorber broken = gadgets[0];
    broken.exterior.copies[0].colors[0] = broken.exterior.copies[1].colors[0];
    CHECK_FALSE(validate_absorber(broken, sys, F).ok);

    RainbowAbsorber off_target = gadgets[0];
    off_target.B = {0, 1, 3};  // exterior no longer covers B cup L
    CHECK_FALSE(validate_absorber(off_target, sys, F).ok);

    RainbowAbsorber short_interior = gadgets[0];
    short_interior.interior.copies.pop_back();
    CHECK_FALSE(validate_absorber(short_interior, sys, F).ok);
}

TEST_CASE("absorb returns the requested side after validating") {
    System sys = gen_complete(13, 2, 13, false);
    Pattern F = Pattern::parse("clique:3");
    auto gadgets = enumerate_clique_absorbers(
        sys, F, {0, 1, 2}, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}, 1);
    REQUIRE(gadgets.size() == 1);

    RainbowPacking interior = absorb(gadgets[0], false, sys, F);
    CHECK(packing_verts(interior) == gadgets[0].L);

    RainbowPacking exterior = absorb(gadgets[0], true, sys, F);
    std::vector<Vertex> want = gadgets[0].L;
    want.insert(want.end(), gadgets[0].B.begin(), gadgets[0].B.end());
    std::sort(want.begin(), want.end());
    CHECK(packing_verts(exterior) == want);

    RainbowAbsorber broken = gadgets[0];
    broken.interior.copies.clear();
    CHECK_THROWS_AS(absorb(broken, false, sys, F), Error);
}

TEST_CASE("gadget colors stay inside the offered palette") {
    System sys = gen_complete(13, 2, 13, false);
    Pattern F = Pattern::parse("clique:3");
    std::vector<Color> C{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};  // skip color 0
    auto gadgets = enumerate_clique_absorbers(sys, F, {0, 1, 2}, C, 3);
    REQUIRE(!gadgets.empty());
    for (const auto& a : gadgets)
        for (Color x : a.exterior_colors())
            CHECK(std::find(C.begin(), C.end(), x) != C.end());
}
