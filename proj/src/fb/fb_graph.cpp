#include "fb/fb_graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "util/comb.hpp"

namespace rf {

FbGraph::FbGraph(int m, int n, int f, int b) : m_(m), n_(n), f_(f), b_(b) {
    if (m < 0 || n < 0 || f < 1 || b < 1) fail_invalid("fb graph: bad dimensions");
    if (m % f != 0) fail_invalid("fb graph: f must divide the color count");
    blocks_ = m / f;
    strict_ = (b > 0 && n % b == 0) && (static_cast<long long>(m) * b == static_cast<long long>(n) * f);
}

uint64_t FbGraph::key_of(int block, const std::vector<Vertex>& bset) const {
    uint64_t key = static_cast<uint64_t>(block);
    for (Vertex v : bset) key = key * 4099 + static_cast<uint64_t>(v + 1);
    return key;
}

void FbGraph::add_edge(FbEdge e) {
    if (e.block < 0 || e.block >= blocks_) fail_invalid("fb graph: block out of range");
    if (static_cast<int>(e.bset.size()) != b_) fail_invalid("fb graph: edge host set must have b vertices");
    if (!is_sorted_unique(e.bset)) fail_invalid("fb graph: edge host set must be strictly ascending");
    if (e.bset.front() < 0 || e.bset.back() >= n_) fail_invalid("fb graph: host vertex out of range");
    finalized_ = false;
    edges_.push_back(std::move(e));
}

void FbGraph::finalize() {
    std::sort(edges_.begin(), edges_.end());
    for (size_t i = 1; i < edges_.size(); ++i)
        if (edges_[i] == edges_[i - 1]) fail_invalid("fb graph: duplicate edge");
    by_block_.assign(static_cast<size_t>(blocks_), {});
    keys_.clear();
    keys_.reserve(edges_.size() * 2);
    for (size_t i = 0; i < edges_.size(); ++i) {
        by_block_[static_cast<size_t>(edges_[i].block)].push_back(i);
        keys_.insert(key_of(edges_[i].block, edges_[i].bset));
    }
    finalized_ = true;
}

const std::vector<size_t>& FbGraph::block_edge_index(int block) const {
    if (!finalized_) fail_internal("fb graph: query before finalize");
    if (block < 0 || block >= blocks_) fail_invalid("fb graph: block out of range");
    return by_block_[static_cast<size_t>(block)];
}

std::vector<Color> FbGraph::block_colors(int block) const {
    if (block < 0 || block >= blocks_) fail_invalid("fb graph: block out of range");
    std::vector<Color> out(static_cast<size_t>(f_));
    for (int i = 0; i < f_; ++i) out[static_cast<size_t>(i)] = block * f_ + i;
    return out;
}

bool FbGraph::has_edge(int block, const std::vector<Vertex>& bset) const {
    if (!finalized_) fail_internal("fb graph: query before finalize");
    return keys_.count(key_of(block, bset)) > 0;
}

std::string FbGraph::serialize() const {
    std::ostringstream out;
    out << "fb " << m_ << ' ' << n_ << ' ' << f_ << ' ' << b_ << '\n';
    for (const FbEdge& e : edges_) {
        for (int i = 0; i < f_; ++i) out << (e.block * f_ + i) << ' ';
        out << join_ints(e.bset) << '\n';
    }
    return out.str();
}

FbGraph FbGraph::parse(const std::string& text) {
    std::istringstream in(text);
    std::string tag;
    if (!(in >> tag) || tag != "fb") fail_invalid("fb parse: expected leading 'fb'");
    int m = 0, n = 0, f = 0, b = 0;
    if (!(in >> m >> n >> f >> b)) fail_invalid("fb parse: bad header");
    FbGraph g(m, n, f, b);
    while (true) {
        std::vector<Color> cols(static_cast<size_t>(f));
        if (!(in >> cols[0])) break;
        for (int i = 1; i < f; ++i)
            if (!(in >> cols[static_cast<size_t>(i)])) fail_invalid("fb parse: truncated edge");
        FbEdge e;
        e.bset.resize(static_cast<size_t>(b));
        for (int i = 0; i < b; ++i)
            if (!(in >> e.bset[static_cast<size_t>(i)])) fail_invalid("fb parse: truncated edge");
        if (cols[0] % f != 0) fail_invalid("fb parse: edge colors must form one block");
        e.block = cols[0] / f;
        for (int i = 0; i < f; ++i)
            if (cols[static_cast<size_t>(i)] != e.block * f + i)
                fail_invalid("fb parse: edge colors must form one block, ascending");
        g.add_edge(std::move(e));
    }
    g.finalize();
    return g;
}

bool is_valid_packing(const System& sys, const Pattern& F, const RainbowPacking& p, std::string* reason) {
    auto bad = [&](const std::string& why) {
        if (reason) *reason = why;
        return false;
    };
    std::set<Vertex> verts;
    std::set<Color> cols;
    for (size_t i = 0; i < p.copies.size(); ++i) {
        const RainbowCopy& c = p.copies[i];
        std::string why;
        if (!is_rainbow_copy(sys, F, c, &why))
            return bad("copy " + std::to_string(i) + " invalid: " + why);
        for (Vertex v : c.embed)
            if (!verts.insert(v).second)
                return bad("copy " + std::to_string(i) + " reuses vertex " + std::to_string(v));
        for (Color x : c.colors)
            if (!cols.insert(x).second)
                return bad("copy " + std::to_string(i) + " reuses color " + std::to_string(x));
    }
    if (reason) reason->clear();
    return true;
}

bool is_rainbow_factor(const System& sys, const Pattern& F, const RainbowPacking& p, std::string* reason) {
    if (!is_valid_packing(sys, F, p, reason)) return false;
    size_t nverts = p.copies.size() * static_cast<size_t>(F.b);
    size_t ncols = p.copies.size() * static_cast<size_t>(F.f);
    if (nverts != static_cast<size_t>(sys.n)) {
        if (reason) *reason = "copies cover " + std::to_string(nverts) + " of " + std::to_string(sys.n) + " vertices";
        return false;
    }
    if (ncols != static_cast<size_t>(sys.m)) {
        if (reason) *reason = "copies use " + std::to_string(ncols) + " of " + std::to_string(sys.m) + " colors";
        return false;
    }
    return true;
}

FbGraph build_fb_graph(const System& sys, const Pattern& F, bool strict) {
    if (sys.k != F.k) fail_invalid("fb reduction: system uniformity does not match the pattern");
    if (sys.m % F.f != 0) {
        if (strict) fail_invalid("fb reduction: f must divide m");
    }
    if (strict) {
        if (sys.n % F.b != 0) fail_invalid("fb reduction: b must divide n");
        if (static_cast<long long>(sys.m) * F.b != static_cast<long long>(sys.n) * F.f)
            fail_invalid("fb reduction: strict mode needs m = n f / b");
    }
    int blocks = sys.m / F.f;
    FbGraph g(blocks * F.f, sys.n, F.f, F.b);
    for (int blk = 0; blk < blocks; ++blk) {
        std::vector<Color> cols = g.block_colors(blk);
        for_each_subset(sys.n, F.b, [&](const std::vector<int>& bset) {
            if (first_copy_on(sys, F, bset, cols)) g.add_edge({blk, bset});
            return true;
        });
    }
    g.finalize();
    return g;
}

RainbowPacking matching_to_packing(const std::vector<FbEdge>& matching, const System& sys, const Pattern& F) {
    std::set<int> blocks;
    std::set<Vertex> verts;
    for (const FbEdge& e : matching) {
        if (!blocks.insert(e.block).second) fail_invalid("matching_to_packing: repeated block");
        for (Vertex v : e.bset)
            if (!verts.insert(v).second) fail_invalid("matching_to_packing: repeated host vertex");
    }
    RainbowPacking p;
    for (const FbEdge& e : matching) {
        std::vector<Color> cols(static_cast<size_t>(F.f));
        for (int i = 0; i < F.f; ++i) cols[static_cast<size_t>(i)] = e.block * F.f + i;
        auto copy = first_copy_on(sys, F, e.bset, cols);
        if (!copy)
            fail_invalid("matching_to_packing: no rainbow copy on " + join_ints(e.bset) +
                         " with block " + std::to_string(e.block));
        p.copies.push_back(*copy);
    }
    return p;
}

std::vector<FbEdge> packing_to_matching(const RainbowPacking& p, const FbGraph& g) {
    std::vector<FbEdge> out;
    for (const RainbowCopy& c : p.copies) {
        std::vector<Color> cols = c.colors_sorted();
        if (cols.empty()) fail_invalid("packing_to_matching: empty copy");
        if (cols.front() % g.f() != 0 || cols.back() != cols.front() + g.f() - 1)
            fail_invalid("packing_to_matching: copy colors do not form one block");
        for (size_t i = 1; i < cols.size(); ++i)
            if (cols[i] != cols[i - 1] + 1)
                fail_invalid("packing_to_matching: copy colors do not form one block");
        FbEdge e;
        e.block = cols.front() / g.f();
        e.bset = c.verts_sorted();
        if (!g.has_edge(e.block, e.bset))
            fail_invalid("packing_to_matching: copy is not an edge of the reduction graph");
        out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_balanced(const FbGraph& g, const std::vector<int>& a_side, const std::vector<Vertex>& b_side) {
    return static_cast<long long>(g.b()) * static_cast<long long>(a_side.size()) ==
           static_cast<long long>(g.f()) * static_cast<long long>(b_side.size());
}

}  // namespace rf
