#pragma once

// Rainbow absorbers: gadgets whose interior tiles L with colors C_int and
// whose exterior tiles B cup L with C_int plus exactly f new colors. A
// factor built with interiors can later swap one gadget to exterior form,
// soaking up b leftover vertices and f leftover colors without disturbing
// anything else.

#include <string>
#include <vector>

#include "fb/fb_graph.hpp"

namespace rf {

struct RainbowAbsorber {
    std::vector<Vertex> B;     // absorbed vertex set, |B| = b, ascending
    std::vector<Vertex> L;     // interior vertex set, ascending
    RainbowPacking interior;   // covers L exactly
    RainbowPacking exterior;   // covers B cup L exactly

    std::vector<Color> interior_colors() const;   // sorted
    std::vector<Color> exterior_colors() const;   // sorted
    std::vector<Color> new_colors() const;        // exterior minus interior, sorted
};

struct ValidationResult {
    bool ok = false;
    std::string reason;
};

ValidationResult validate_absorber(const RainbowAbsorber& a, const System& sys, const Pattern& F);

// The interior or exterior packing, after validating; throws on a bad gadget.
RainbowPacking absorb(const RainbowAbsorber& a, bool use_exterior, const System& sys, const Pattern& F);

// Clique-family gadgets (2-uniform patterns with all pairs present): t
// interior cliques, one bridge clique on designated interior vertices, and
// t swapped cliques that trade one interior vertex for one target vertex,
// reusing the freed colors. S is the target t-set; C lists (t+1) t(t-1)/2
// distinct colors, chunk i coloring interior clique i and the last chunk
// the bridge. DFS order: bridge vertex set, bridge coloring, assignment of
// bridge vertices to cliques, then per-clique completions; lexicographic at
// every branch. Enumeration stops at `limit` gadgets.
std::vector<RainbowAbsorber> enumerate_clique_absorbers(const System& sys, const Pattern& F,
                                                        const std::vector<Vertex>& S,
                                                        const std::vector<Color>& C,
                                                        long long limit);

// Single-edge gadgets on the reduction graph (f = 1, b = k): k-1 disjoint
// carrier edges M_i of color c_i avoiding T, pivots u_i in M_i, a bridge
// {u_2,...,u_k, v_1} of color c_1, and swapped edges (M_i minus u_i) plus
// v_i of color c_i, where v_i is the i-th smallest of T. DFS order: carrier
// edges, then pivot tuples; lexicographic at every branch.
std::vector<RainbowAbsorber> enumerate_matching_absorbers(const FbGraph& g,
                                                          const std::vector<Vertex>& T,
                                                          const std::vector<Color>& C,
                                                          long long limit);

}  // namespace rf
