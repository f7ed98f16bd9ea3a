#pragma once

// Reduction from rainbow factors to perfect matchings. Side A holds the m
// colors grouped into blocks of f consecutive colors; side B holds the n
// host vertices. Each edge joins one whole block to a b-set of hosts that
// carries a rainbow copy using exactly that block's colors. A rainbow
// factor that respects blocks is exactly a perfect matching here.
//
// Text format:
//   fb m n f b
//   c_1 ... c_f v_1 ... v_b     (one edge per line, block colors ascending)

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "core/embed.hpp"

namespace rf {

struct FbEdge {
    int block = 0;                 // block index in [0, m/f)
    std::vector<Vertex> bset;      // ascending host vertices, |bset| = b

    bool operator==(const FbEdge& o) const { return block == o.block && bset == o.bset; }
    bool operator<(const FbEdge& o) const {
        if (block != o.block) return block < o.block;
        return bset < o.bset;
    }
};

class FbGraph {
  public:
    FbGraph() = default;
    FbGraph(int m, int n, int f, int b);

    int m() const { return m_; }
    int n() const { return n_; }
    int f() const { return f_; }
    int b() const { return b_; }
    int blocks() const { return blocks_; }
    // Strict means the sides balance exactly: b | n and m = n f / b.
    bool strict() const { return strict_; }

    const std::vector<FbEdge>& edges() const { return edges_; }
    const std::vector<size_t>& block_edge_index(int block) const;  // indices into edges()
    std::vector<Color> block_colors(int block) const;              // the f colors of a block

    void add_edge(FbEdge e);
    void finalize();
    bool has_edge(int block, const std::vector<Vertex>& bset) const;

    std::string serialize() const;
    static FbGraph parse(const std::string& text);

  private:
    int m_ = 0, n_ = 0, f_ = 1, b_ = 1, blocks_ = 0;
    bool strict_ = false;
    bool finalized_ = false;
    std::vector<FbEdge> edges_;
    std::vector<std::vector<size_t>> by_block_;
    std::unordered_set<uint64_t> keys_;

    uint64_t key_of(int block, const std::vector<Vertex>& bset) const;
};

struct RainbowPacking {
    std::vector<RainbowCopy> copies;
};

// Pairwise vertex- and color-disjointness plus per-copy validity.
bool is_valid_packing(const System& sys, const Pattern& F, const RainbowPacking& p, std::string* reason);
// A packing that exhausts vertices and colors.
bool is_rainbow_factor(const System& sys, const Pattern& F, const RainbowPacking& p, std::string* reason);

// Build the reduction graph. strict requires b | n and m = n f / b; the
// relaxed form keeps floor(m/f) blocks and ignores trailing colors (only
// the pipeline's internal bookkeeping uses it).
FbGraph build_fb_graph(const System& sys, const Pattern& F, bool strict = true);

// A matching (pairwise disjoint blocks and hosts) lifts to a packing by
// realizing the first rainbow copy on each edge; a block-respecting packing
// projects back. These invert each other on matchings.
RainbowPacking matching_to_packing(const std::vector<FbEdge>& matching, const System& sys, const Pattern& F);
std::vector<FbEdge> packing_to_matching(const RainbowPacking& p, const FbGraph& g);

// Balance of a bipartite vertex set S: b |S cap A| = f |S cap B|.
bool is_balanced(const FbGraph& g, const std::vector<int>& a_side, const std::vector<Vertex>& b_side);

}  // namespace rf
