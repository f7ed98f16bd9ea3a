#pragma once

// A k-uniform graph with signed edges on vertices {0,...,n-1}. At most one
// edge per (k-set, sign) pair. Lookup is O(1) via packed 64-bit keys, so n
// is capped at 4095 and k at 5 (enough for every pattern in scope).

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "core/types.hpp"

namespace rf {

constexpr int kMaxVertices = 4095;
constexpr int kMaxUniformity = 5;

class DKGraph {
  public:
    DKGraph() = default;
    DKGraph(int n, int k);

    int n() const { return n_; }
    int k() const { return k_; }
    const std::vector<DEdge>& edges() const { return edges_; }
    size_t edge_count() const { return edges_.size(); }

    // Append without deduplication; call finalize() before queries.
    void add_edge(DEdge e);
    bool add_edge_checked(DEdge e);  // false if duplicate or invalid, no throw

    // Sorts edges, rejects duplicates, builds the lookup index.
    void finalize();
    bool finalized() const { return finalized_; }

    bool has_edge(const std::vector<Vertex>& sorted_verts, int sign) const;
    bool has_edge_any_sign(const std::vector<Vertex>& sorted_verts) const;
    bool has_edge(const DEdge& e) const { return has_edge(e.verts, e.sign); }

    bool has_minus_edge() const { return has_minus_; }

    static uint64_t pack_key(const std::vector<Vertex>& sorted_verts, int sign);

  private:
    void validate_edge(const DEdge& e) const;

    int n_ = 0;
    int k_ = 2;
    std::vector<DEdge> edges_;
    std::unordered_set<uint64_t> signed_keys_;
    std::unordered_set<uint64_t> unsigned_keys_;
    bool has_minus_ = false;
    bool finalized_ = false;
};

}  // namespace rf
