#include "core/dkgraph.hpp"

#include <algorithm>

#include "util/comb.hpp"

namespace rf {

DKGraph::DKGraph(int n, int k) : n_(n), k_(k) {
    if (n < 0 || n > kMaxVertices) fail_invalid("vertex count out of range: " + std::to_string(n));
    if (k < 1 || k > kMaxUniformity) fail_invalid("uniformity out of range: " + std::to_string(k));
}

uint64_t DKGraph::pack_key(const std::vector<Vertex>& sorted_verts, int sign) {
    uint64_t key = sign < 0 ? 1 : 0;
    for (Vertex v : sorted_verts) key = (key << 12) | static_cast<uint64_t>(v + 1);
    return key;
}

void DKGraph::validate_edge(const DEdge& e) const {
    if (static_cast<int>(e.verts.size()) != k_) fail_invalid("edge arity mismatch");
    if (!is_sorted_unique(e.verts)) fail_invalid("edge vertices must be strictly ascending");
    if (e.verts.front() < 0 || e.verts.back() >= n_) fail_invalid("edge vertex out of range");
    if (e.sign != 1 && e.sign != -1) fail_invalid("edge sign must be +1 or -1");
}

void DKGraph::add_edge(DEdge e) {
    validate_edge(e);
    finalized_ = false;
    edges_.push_back(std::move(e));
}

bool DKGraph::add_edge_checked(DEdge e) {
    if (static_cast<int>(e.verts.size()) != k_ || !is_sorted_unique(e.verts)) return false;
    if (e.verts.front() < 0 || e.verts.back() >= n_) return false;
    if (e.sign != 1 && e.sign != -1) return false;
    if (finalized_ && signed_keys_.count(pack_key(e.verts, e.sign))) return false;
    if (!finalized_) {
        for (const DEdge& x : edges_)
            if (x == e) return false;
    }
    add_edge(std::move(e));
    finalize();
    return true;
}

void DKGraph::finalize() {
    std::sort(edges_.begin(), edges_.end());
    for (size_t i = 1; i < edges_.size(); ++i)
        if (edges_[i] == edges_[i - 1])
            fail_invalid("duplicate edge: " + join_ints(edges_[i].verts) +
                         (edges_[i].sign < 0 ? " -" : " +"));
    signed_keys_.clear();
    unsigned_keys_.clear();
    has_minus_ = false;
    signed_keys_.reserve(edges_.size() * 2);
    unsigned_keys_.reserve(edges_.size() * 2);
    for (const DEdge& e : edges_) {
        signed_keys_.insert(pack_key(e.verts, e.sign));
        unsigned_keys_.insert(pack_key(e.verts, +1));
        if (e.sign < 0) has_minus_ = true;
    }
    finalized_ = true;
}

bool DKGraph::has_edge(const std::vector<Vertex>& sorted_verts, int sign) const {
    if (!finalized_) fail_internal("DKGraph query before finalize");
    return signed_keys_.count(pack_key(sorted_verts, sign)) > 0;
}

bool DKGraph::has_edge_any_sign(const std::vector<Vertex>& sorted_verts) const {
    if (!finalized_) fail_internal("DKGraph query before finalize");
    return unsigned_keys_.count(pack_key(sorted_verts, +1)) > 0;
}

}  // namespace rf
