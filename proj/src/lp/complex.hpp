#pragma once

// Downward-closed k-complexes and the constructive degree-sequence route to
// perfect fractional matchings: a complex whose level degrees stay above
// (n, (k-1)n/k, ..., n/k) has a PFM at the top level, and greedy low-rank
// edge selection certifies it level by level. The partite analogue ranks
// vertices inside each class.

#include <optional>
#include <vector>

#include "core/system.hpp"
#include "lp/matching_lp.hpp"

namespace rf {

struct Complex {
    int n = 0;
    int k = 1;
    // levels[r] = ascending list of ascending r-sets, r in [0, k];
    // levels[0] = { {} }.
    std::vector<std::vector<std::vector<Vertex>>> levels;
    std::vector<int> klass;   // partite mode only
    int num_classes = 0;

    bool partite() const { return num_classes > 0; }
    bool has_set(int r, const std::vector<Vertex>& s) const;
    void sort_levels();
    bool downward_closed() const;
    Hypergraph top_level() const;
};

// deg_r = min over r-edges of the number of (r+1)-edges containing them,
// for r = 0..k-1; an empty level contributes 0 at its index.
std::vector<long long> degree_sequence(const Complex& c);

// Partite variant: for each r-edge and each class disjoint from it, count
// extensions into that class; minimize over both.
std::vector<long long> partite_degree_sequence(const Complex& c);

// Whether the degree sequence clears (n, (k-1)n/k, ..., n/k); in partite
// mode n is the (common) class size. Pure arithmetic on exact rationals.
bool degree_sequence_bound_met(const Complex& c);

// The color-slice complex of a width-C(k,2) slice: level r holds the vertex
// sets spanning a rainbow r-clique (ordered, sign-respecting cliques when
// the slice is directed) using any r(r-1)/2 distinct slice colors.
Complex clique_complex(const System& slice, bool directed);

struct GreedyEdgeResult {
    bool ok = false;
    std::vector<Vertex> edge;          // the selected top-level edge when ok
    std::vector<int> ranks;            // 1-based rank of each pick
    std::vector<Vertex> stuck_prefix;  // the partial edge that could not extend
};

// Scan vertices by rank, extending a prefix one level at a time; uniform
// mode uses one global ranking, partite mode one ranking per class (pick j
// comes from class j).
GreedyEdgeResult greedy_low_index_edge(const Complex& c, const std::vector<Vertex>& order);
GreedyEdgeResult greedy_low_index_edge_partite(const Complex& c,
                                               const std::vector<std::vector<Vertex>>& class_orders);

struct DegSeqPfmResult {
    bool bound_met = false;
    PfmResult pfm;
};

// Reports the bound check and the top-level PFM side by side, honestly:
// callers see exactly which half failed.
DegSeqPfmResult check_degree_sequence_pfm(const Complex& c);

}  // namespace rf
