#pragma once

// Helpers for pair-colored embeddings of 2-uniform patterns: realize a copy
// whose host pairs must carry prescribed colors, and read the pair -> color
// map back off an existing copy. Shared by the absorber enumerator and the
// absorbing-structure completion search.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>

#include "core/embed.hpp"
#include "core/system.hpp"
#include "util/comb.hpp"

namespace rf {

using PairColor = std::map<std::pair<Vertex, Vertex>, Color>;

inline std::pair<Vertex, Vertex> host_pair(Vertex a, Vertex b) {
    return {std::min(a, b), std::max(a, b)};
}

// First rainbow copy on `verts` whose host pairs carry exactly the colors in
// pair_color. Directed patterns search orderings and match signs; undirected
// patterns settle for the ascending embedding.
inline std::optional<RainbowCopy> copy_with_pair_colors(const System& sys, const Pattern& F,
                                                        std::vector<Vertex> verts,
                                                        const PairColor& pair_color) {
    std::sort(verts.begin(), verts.end());
    if (F.partite) {
        std::set<int> classes;
        for (Vertex v : verts) classes.insert(sys.klass[static_cast<size_t>(v)]);
        if (static_cast<int>(classes.size()) != F.b) return std::nullopt;
    }
    std::vector<Vertex> perm = verts;
    do {
        RainbowCopy copy;
        copy.embed = perm;
        copy.colors.clear();
        bool ok = true;
        for (const DEdge& te : F.tmpl.edges()) {
            DEdge he = translate_edge(te, perm);
            auto it = pair_color.find(host_pair(he.verts[0], he.verts[1]));
            if (it == pair_color.end()) { ok = false; break; }
            const DKGraph& g = sys.graphs[static_cast<size_t>(it->second)];
            bool present = F.directed ? g.has_edge(he.verts, he.sign) : g.has_edge_any_sign(he.verts);
            if (!present) { ok = false; break; }
            copy.colors.push_back(it->second);
        }
        if (ok) {
            std::vector<Color> cs = copy.colors_sorted();
            if (is_sorted_unique(cs)) return copy;
        }
        if (!F.directed) return std::nullopt;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

inline PairColor pair_colors_of(const Pattern& F, const RainbowCopy& copy) {
    PairColor pc;
    const auto& tedges = F.tmpl.edges();
    for (size_t j = 0; j < tedges.size(); ++j) {
        DEdge he = translate_edge(tedges[j], copy.embed);
        pc[host_pair(he.verts[0], he.verts[1])] = copy.colors[j];
    }
    return pc;
}

}  // namespace rf
