#pragma once

// Fractional matching and cover machinery on plain hypergraphs, plus the
// perfect fractional matching test with infeasibility certificates.
//
// Hypergraph text format:
//   hg n
//   v_1 v_2 ... v_r      (one edge per line, ascending vertices)

#include <optional>
#include <string>
#include <vector>

#include "fb/fb_graph.hpp"
#include "lp/simplex.hpp"

namespace rf {

struct Hypergraph {
    int n = 0;
    std::vector<std::vector<Vertex>> edges;

    void validate() const;
    static Hypergraph parse(const std::string& text);
    std::string serialize() const;
};

enum class SolKind { Matching, Cover };

struct FractionalSolution {
    SolKind kind = SolKind::Matching;
    std::vector<Rat> weights;  // per edge (matching) or per vertex (cover)
    Rat value;
};

// Witness that no perfect fractional matching exists: a vertex weighting
// with a . chi(e) >= 0 on every edge and a . 1 < 0, which any perfect
// fractional matching would contradict.
struct FarkasCertificate {
    std::vector<Rat> a;
};

bool check_farkas(const Hypergraph& h, const FarkasCertificate& cert);

// max { 1.x : sum_{e ni v} x_e <= 1, x >= 0 }
FractionalSolution max_fractional_matching(const Hypergraph& h);
// min { 1.y : sum_{v in e} y_v >= 1, y >= 0 }
FractionalSolution min_fractional_cover(const Hypergraph& h);

struct PfmResult {
    bool has_pfm = false;
    FractionalSolution sol;                  // matching if has_pfm, else the optimal cover
    std::optional<FarkasCertificate> cert;   // present iff !has_pfm
};

// For b-uniform h: a perfect fractional matching saturates every vertex,
// which happens exactly when the matching LP reaches n / b.
PfmResult has_perfect_fractional_matching(const Hypergraph& h, int b);

// Views of a reduction graph as hypergraphs.
Hypergraph to_hypergraph(const FbGraph& g);                 // vertices A cup B, (f+b)-uniform
Hypergraph block_hypergraph(const FbGraph& g, int block);   // b-uniform on B

// Perfect fractional matching of the whole reduction graph, solved directly.
PfmResult lift_block_pfm(const FbGraph& g);

}  // namespace rf
