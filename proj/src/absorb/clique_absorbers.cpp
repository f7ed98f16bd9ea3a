#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "absorb/absorber.hpp"
#include "absorb/pair_colors.hpp"
#include "util/comb.hpp"

namespace rf {

namespace {

struct CliqueEnum {
    const System& sys;
    const Pattern& F;
    const std::vector<Vertex>& S;
    std::vector<std::vector<Color>> chunks;  // t interior chunks + the bridge chunk
    long long limit;
    std::vector<RainbowAbsorber>* out;

    int t = 0;
    std::vector<Vertex> assign;              // assign[i] = bridge vertex owned by clique i
    RainbowCopy bridge;
    std::vector<RainbowCopy> interiors;
    std::vector<RainbowCopy> exteriors;
    std::vector<char> used;

    bool full() const { return static_cast<long long>(out->size()) >= limit; }

    void emit() {
        RainbowAbsorber a;
        a.B = S;
        for (const RainbowCopy& c : interiors) {
            a.L.insert(a.L.end(), c.embed.begin(), c.embed.end());
            a.interior.copies.push_back(c);
        }
        std::sort(a.L.begin(), a.L.end());
        a.exterior.copies.push_back(bridge);
        for (const RainbowCopy& c : exteriors) a.exterior.copies.push_back(c);
        out->push_back(std::move(a));
    }

    // Complete clique i around its bridge vertex, then its swapped twin.
    void complete(int i) {
        if (full()) return;
        if (i == t) { emit(); return; }
        Vertex pivot = assign[static_cast<size_t>(i)];
        Vertex target = S[static_cast<size_t>(i)];
        std::vector<Vertex> avail;
        for (Vertex v = 0; v < sys.n; ++v)
            if (!used[static_cast<size_t>(v)] && v != pivot) avail.push_back(v);
        for_each_subset_of<Vertex>(avail, t - 1, [&](const std::vector<Vertex>& rest) {
            if (full()) return false;
            std::vector<Vertex> tset = rest;
            tset.insert(std::lower_bound(tset.begin(), tset.end(), pivot), pivot);
            for_each_copy_on(sys, F, tset, chunks[static_cast<size_t>(i)], [&](const RainbowCopy& inner) {
                if (full()) return false;
                // Freed colors: the ones the interior put on pivot edges.
                PairColor pc = pair_colors_of(F, inner);
                std::vector<Color> freed;
                PairColor kept;
                for (const auto& [pr, col] : pc) {
                    if (pr.first == pivot || pr.second == pivot) freed.push_back(col);
                    else kept[pr] = col;
                }
                std::sort(freed.begin(), freed.end());
                // Swapped clique: rest stays, pivot -> target, new edges take
                // the freed colors in every order.
                std::vector<Color> perm_cols = freed;
                do {
                    if (full()) return false;
                    PairColor ext = kept;
                    for (size_t x = 0; x < rest.size(); ++x)
                        ext[host_pair(target, rest[x])] = perm_cols[x];
                    std::vector<Vertex> evset = rest;
                    evset.push_back(target);
                    auto ecopy = copy_with_pair_colors(sys, F, evset, ext);
                    if (!ecopy) continue;
                    for (Vertex v : tset) used[static_cast<size_t>(v)] = 1;
                    interiors.push_back(inner);
                    exteriors.push_back(*ecopy);
                    complete(i + 1);
                    exteriors.pop_back();
                    interiors.pop_back();
                    for (Vertex v : tset) used[static_cast<size_t>(v)] = 0;
                } while (std::next_permutation(perm_cols.begin(), perm_cols.end()));
                return !full();
            });
            return !full();
        });
    }

    void run() {
        t = F.b;
        used.assign(static_cast<size_t>(sys.n), 0);
        for (Vertex v : S) used[static_cast<size_t>(v)] = 1;
        std::vector<Vertex> avail;
        for (Vertex v = 0; v < sys.n; ++v)
            if (!used[static_cast<size_t>(v)]) avail.push_back(v);
        for_each_subset_of<Vertex>(avail, t, [&](const std::vector<Vertex>& W) {
            if (full()) return false;
            for_each_copy_on(sys, F, W, chunks[static_cast<size_t>(t)], [&](const RainbowCopy& bc) {
                if (full()) return false;
                bridge = bc;
                std::vector<Vertex> perm = W;
                do {
                    if (full()) return false;
                    assign = perm;
                    for (Vertex v : W) used[static_cast<size_t>(v)] = 1;
                    complete(0);
                    for (Vertex v : W) used[static_cast<size_t>(v)] = 0;
                } while (std::next_permutation(perm.begin(), perm.end()));
                return !full();
            });
            return !full();
        });
    }
};

}  // namespace

std::vector<RainbowAbsorber> enumerate_clique_absorbers(const System& sys, const Pattern& F,
                                                        const std::vector<Vertex>& S,
                                                        const std::vector<Color>& C,
                                                        long long limit) {
    if (F.k != 2 || F.f != F.b * (F.b - 1) / 2)
        fail_invalid("clique absorbers: pattern must be a 2-uniform clique family");
    int t = F.b;
    if (static_cast<int>(S.size()) != t) fail_invalid("clique absorbers: target set must have t vertices");
    if (!is_sorted_unique(S) || S.front() < 0 || S.back() >= sys.n)
        fail_invalid("clique absorbers: bad target set");
    if (static_cast<int>(C.size()) != (t + 1) * F.f)
        fail_invalid("clique absorbers: need (t+1) t(t-1)/2 colors");
    std::vector<Color> cs = C;
    std::sort(cs.begin(), cs.end());
    if (!is_sorted_unique(cs) || cs.front() < 0 || cs.back() >= sys.m)
        fail_invalid("clique absorbers: colors must be distinct and in range");
    if (limit <= 0) return {};

    std::vector<RainbowAbsorber> out;
    CliqueEnum e{sys, F, S, {}, limit, &out, 0, {}, {}, {}, {}, {}};
    for (int i = 0; i <= t; ++i)
        e.chunks.emplace_back(C.begin() + static_cast<long>(i) * F.f,
                              C.begin() + static_cast<long>(i + 1) * F.f);
    e.run();
    return out;
}

}  // namespace rf
