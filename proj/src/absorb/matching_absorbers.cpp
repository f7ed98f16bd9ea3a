#include <algorithm>

#include "absorb/absorber.hpp"
#include "util/comb.hpp"

namespace rf {

namespace {

RainbowCopy edge_copy(const std::vector<Vertex>& bset, Color c) {
    RainbowCopy copy;
    copy.embed = bset;
    copy.colors = {c};
    return copy;
}

struct MatchEnum {
    const FbGraph& g;
    const std::vector<Vertex>& T;
    const std::vector<Color>& C;
    long long limit;
    std::vector<RainbowAbsorber>* out;

    int k = 0;
    std::vector<std::vector<Vertex>> carriers;  // M_2..M_k
    std::vector<char> used;

    bool full() const { return static_cast<long long>(out->size()) >= limit; }

    void pick_pivots(size_t i, std::vector<Vertex>& pivots) {
        if (full()) return;
        if (i == carriers.size()) {
            std::vector<Vertex> bridge = pivots;
            bridge.push_back(T[0]);
            std::sort(bridge.begin(), bridge.end());
            if (!g.has_edge(C[0], bridge)) return;
            std::vector<std::vector<Vertex>> swapped(carriers.size());
            for (size_t j = 0; j < carriers.size(); ++j) {
                std::vector<Vertex> w;
                for (Vertex v : carriers[j])
                    if (v != pivots[j]) w.push_back(v);
                w.push_back(T[j + 1]);
                std::sort(w.begin(), w.end());
                if (!g.has_edge(C[j + 1], w)) return;
                swapped[j] = std::move(w);
            }
            RainbowAbsorber a;
            a.B = T;
            for (size_t j = 0; j < carriers.size(); ++j) {
                a.L.insert(a.L.end(), carriers[j].begin(), carriers[j].end());
                a.interior.copies.push_back(edge_copy(carriers[j], C[j + 1]));
            }
            std::sort(a.L.begin(), a.L.end());
            a.exterior.copies.push_back(edge_copy(bridge, C[0]));
            for (size_t j = 0; j < carriers.size(); ++j)
                a.exterior.copies.push_back(edge_copy(swapped[j], C[j + 1]));
            out->push_back(std::move(a));
            return;
        }
        for (Vertex u : carriers[i]) {
            pivots.push_back(u);
            pick_pivots(i + 1, pivots);
            pivots.pop_back();
            if (full()) return;
        }
    }

    void pick_carriers(size_t i) {
        if (full()) return;
        if (i + 1 == static_cast<size_t>(k)) {
            std::vector<Vertex> pivots;
            pick_pivots(0, pivots);
            return;
        }
        Color c = C[i + 1];
        for (size_t idx : g.block_edge_index(c)) {
            const std::vector<Vertex>& bset = g.edges()[idx].bset;
            bool clash = false;
            for (Vertex v : bset)
                if (used[static_cast<size_t>(v)]) { clash = true; break; }
            if (clash) continue;
            for (Vertex v : bset) used[static_cast<size_t>(v)] = 1;
            carriers.push_back(bset);
            pick_carriers(i + 1);
            carriers.pop_back();
            for (Vertex v : bset) used[static_cast<size_t>(v)] = 0;
            if (full()) return;
        }
    }
};

}  // namespace

std::vector<RainbowAbsorber> enumerate_matching_absorbers(const FbGraph& g,
                                                          const std::vector<Vertex>& T,
                                                          const std::vector<Color>& C,
                                                          long long limit) {
    if (g.f() != 1) fail_invalid("matching absorbers: reduction graph must have f = 1");
    int k = g.b();
    if (static_cast<int>(T.size()) != k) fail_invalid("matching absorbers: target set must have k vertices");
    if (!is_sorted_unique(T) || T.front() < 0 || T.back() >= g.n())
        fail_invalid("matching absorbers: bad target set");
    if (static_cast<int>(C.size()) != k) fail_invalid("matching absorbers: need k colors");
    std::vector<Color> cs = C;
    std::sort(cs.begin(), cs.end());
    if (!is_sorted_unique(cs) || cs.front() < 0 || cs.back() >= g.blocks())
        fail_invalid("matching absorbers: colors must be distinct and in range");
    if (limit <= 0 || k < 2) return {};

    std::vector<RainbowAbsorber> out;
    MatchEnum e{g, T, C, limit, &out, k, {}, {}};
    e.used.assign(static_cast<size_t>(g.n()), 0);
    for (Vertex v : T) e.used[static_cast<size_t>(v)] = 1;
    e.pick_carriers(0);
    return out;
}

}  // namespace rf
