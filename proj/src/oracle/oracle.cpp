#include "oracle/oracle.hpp"

#include <algorithm>
#include <functional>

#include "util/comb.hpp"

namespace rf {

namespace {

struct FbSearch {
    const FbGraph& g;
    long long budget;
    long long nodes = 0;
    bool out_of_budget = false;
    std::vector<char> covered;
    std::vector<char> block_used;
    std::vector<FbEdge> picked;

    explicit FbSearch(const FbGraph& graph, long long node_budget) : g(graph), budget(node_budget) {
        covered.assign(static_cast<size_t>(g.n()), 0);
        block_used.assign(static_cast<size_t>(g.blocks()), 0);
    }

    bool edge_free(const FbEdge& e) const {
        for (Vertex v : e.bset)
            if (covered[static_cast<size_t>(v)]) return false;
        return true;
    }

    // Fail-first: the unused block with the fewest viable edges.
    int pick_block(std::vector<size_t>& cand) const {
        int best = -1;
        std::vector<size_t> tmp;
        for (int blk = 0; blk < g.blocks(); ++blk) {
            if (block_used[static_cast<size_t>(blk)]) continue;
            tmp.clear();
            for (size_t idx : g.block_edge_index(blk))
                if (edge_free(g.edges()[idx])) tmp.push_back(idx);
            if (best < 0 || tmp.size() < cand.size()) {
                best = blk;
                cand = tmp;
                if (cand.empty()) break;
            }
        }
        return best;
    }

    // find one perfect matching
    bool find(int remaining) {
        if (++nodes > budget) { out_of_budget = true; return false; }
        if (remaining == 0) return true;
        std::vector<size_t> cand;
        int blk = pick_block(cand);
        if (blk < 0 || cand.empty()) return false;
        block_used[static_cast<size_t>(blk)] = 1;
        for (size_t idx : cand) {
            const FbEdge& e = g.edges()[idx];
            if (!edge_free(e)) continue;
            for (Vertex v : e.bset) covered[static_cast<size_t>(v)] = 1;
            picked.push_back(e);
            if (find(remaining - 1)) return true;
            picked.pop_back();
            for (Vertex v : e.bset) covered[static_cast<size_t>(v)] = 0;
            if (out_of_budget) break;
        }
        block_used[static_cast<size_t>(blk)] = 0;
        return false;
    }

    long long count(int remaining) {
        if (++nodes > budget) { out_of_budget = true; return 0; }
        if (remaining == 0) return 1;
        std::vector<size_t> cand;
        int blk = pick_block(cand);
        if (blk < 0 || cand.empty()) return 0;
        long long total = 0;
        block_used[static_cast<size_t>(blk)] = 1;
        for (size_t idx : cand) {
            const FbEdge& e = g.edges()[idx];
            for (Vertex v : e.bset) covered[static_cast<size_t>(v)] = 1;
            total += count(remaining - 1);
            for (Vertex v : e.bset) covered[static_cast<size_t>(v)] = 0;
            if (out_of_budget) break;
        }
        block_used[static_cast<size_t>(blk)] = 0;
        return total;
    }
};

}  // namespace

OracleResult exact_rainbow_factor(const System& sys, const Pattern& F, long long node_budget) {
    OracleResult res;
    if (sys.n == 0 && sys.m == 0) {
        res.status = OracleStatus::Factor;
        return res;
    }
    if (sys.n % F.b != 0 ||
        static_cast<long long>(sys.m) * F.b != static_cast<long long>(sys.n) * F.f) {
        res.status = OracleStatus::Infeasible;  // side counts rule a factor out
        return res;
    }
    FbGraph g = build_fb_graph(sys, F, true);
    FbSearch s(g, node_budget);
    bool found = s.find(g.blocks());
    res.nodes = s.nodes;
    if (found) {
        res.status = OracleStatus::Factor;
        res.factor = matching_to_packing(s.picked, sys, F);
    } else if (s.out_of_budget) {
        res.status = OracleStatus::Timeout;
    } else {
        res.status = OracleStatus::Infeasible;
    }
    return res;
}

long long count_fb_perfect_matchings(const FbGraph& g, long long node_budget) {
    FbSearch s(g, node_budget);
    long long total = s.count(g.blocks());
    return s.out_of_budget ? -1 : total;
}

long long count_rainbow_factor_structures(const System& sys, const Pattern& F, long long node_budget) {
    if (sys.n % F.b != 0 ||
        static_cast<long long>(sys.m) * F.b != static_cast<long long>(sys.n) * F.f)
        return 0;
    int blocks = sys.m / F.f;
    std::vector<char> covered(static_cast<size_t>(sys.n), 0);
    std::vector<char> block_used(static_cast<size_t>(blocks), 0);
    std::vector<std::vector<Color>> block_cols(static_cast<size_t>(blocks));
    for (int blk = 0; blk < blocks; ++blk) {
        for (int i = 0; i < F.f; ++i) block_cols[static_cast<size_t>(blk)].push_back(blk * F.f + i);
    }
    long long nodes = 0;
    bool out_of_budget = false;

    std::function<long long(int)> rec = [&](int remaining) -> long long {
        if (++nodes > node_budget) { out_of_budget = true; return 0; }
        if (remaining == 0) return 1;
        Vertex v = -1;
        for (int u = 0; u < sys.n; ++u)
            if (!covered[static_cast<size_t>(u)]) { v = u; break; }
        std::vector<Vertex> rest;
        for (int u = v + 1; u < sys.n; ++u)
            if (!covered[static_cast<size_t>(u)]) rest.push_back(u);
        long long total = 0;
        for_each_subset_of<Vertex>(rest, F.b - 1, [&](const std::vector<Vertex>& tail) {
            std::vector<Vertex> bset;
            bset.reserve(static_cast<size_t>(F.b));
            bset.push_back(v);
            bset.insert(bset.end(), tail.begin(), tail.end());
            for (int blk = 0; blk < blocks; ++blk) {
                if (block_used[static_cast<size_t>(blk)]) continue;
                if (!first_copy_on(sys, F, bset, block_cols[static_cast<size_t>(blk)])) continue;
                for (Vertex u : bset) covered[static_cast<size_t>(u)] = 1;
                block_used[static_cast<size_t>(blk)] = 1;
                total += rec(remaining - 1);
                block_used[static_cast<size_t>(blk)] = 0;
                for (Vertex u : bset) covered[static_cast<size_t>(u)] = 0;
                if (out_of_budget) return false;
            }
            return !out_of_budget;
        });
        return total;
    };

    long long total = rec(blocks);
    return out_of_budget ? -1 : total;
}

}  // namespace rf
