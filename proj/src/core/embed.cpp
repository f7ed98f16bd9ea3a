#include "core/embed.hpp"

#include <algorithm>
#include <set>

#include "util/comb.hpp"

namespace rf {

std::vector<Vertex> RainbowCopy::verts_sorted() const {
    std::vector<Vertex> v = embed;
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<Color> RainbowCopy::colors_sorted() const {
    std::vector<Color> c = colors;
    std::sort(c.begin(), c.end());
    return c;
}

DEdge translate_edge(const DEdge& tmpl_edge, const std::vector<Vertex>& embed) {
    DEdge out;
    out.verts.reserve(tmpl_edge.verts.size());
    for (Vertex tv : tmpl_edge.verts) out.verts.push_back(embed[static_cast<size_t>(tv)]);
    out.sign = tmpl_edge.sign * sort_parity(out.verts);
    std::sort(out.verts.begin(), out.verts.end());
    return out;
}

bool is_rainbow_copy(const System& sys, const Pattern& F, const RainbowCopy& copy, std::string* reason) {
    auto bad = [&](const std::string& why) {
        if (reason) *reason = why;
        return false;
    };
    if (static_cast<int>(copy.embed.size()) != F.b) return bad("embedding arity mismatch");
    if (static_cast<int>(copy.colors.size()) != F.f) return bad("color tuple arity mismatch");
    std::vector<Vertex> vs = copy.verts_sorted();
    if (!is_sorted_unique(vs)) return bad("embedding not injective");
    if (vs.front() < 0 || vs.back() >= sys.n) return bad("embedded vertex out of range");
    std::vector<Color> cs = copy.colors_sorted();
    if (!is_sorted_unique(cs)) return bad("repeated color");
    if (cs.front() < 0 || cs.back() >= sys.m) return bad("color out of range");
    if (F.partite) {
        if (!sys.partite()) return bad("partite pattern on a non-partite system");
        std::set<int> classes;
        for (Vertex v : copy.embed) classes.insert(sys.klass[static_cast<size_t>(v)]);
        if (static_cast<int>(classes.size()) != F.b) return bad("embedding repeats a vertex class");
    }
    const auto& tedges = F.tmpl.edges();
    for (size_t j = 0; j < tedges.size(); ++j) {
        DEdge host = translate_edge(tedges[j], copy.embed);
        const DKGraph& g = sys.graphs[static_cast<size_t>(copy.colors[j])];
        bool ok = F.directed ? g.has_edge(host.verts, host.sign) : g.has_edge_any_sign(host.verts);
        if (!ok)
            return bad("missing edge " + join_ints(host.verts) + (host.sign < 0 ? " -" : " +") +
                       " in color " + std::to_string(copy.colors[j]));
    }
    if (reason) reason->clear();
    return true;
}

bool is_rainbow_copy(const System& sys, const Pattern& F, const RainbowCopy& copy) {
    return is_rainbow_copy(sys, F, copy, nullptr);
}

namespace {

// Host edge images of all template edges under one embedding, in template
// edge order. Returns false if partite class constraints already fail.
bool host_edges_of(const System& sys, const Pattern& F, const std::vector<Vertex>& embed,
                   std::vector<DEdge>& out) {
    if (F.partite) {
        std::set<int> classes;
        for (Vertex v : embed) classes.insert(sys.klass[static_cast<size_t>(v)]);
        if (static_cast<int>(classes.size()) != F.b) return false;
    }
    out.clear();
    out.reserve(F.tmpl.edges().size());
    for (const DEdge& te : F.tmpl.edges()) out.push_back(translate_edge(te, embed));
    return true;
}

// Candidate embeddings on one ascending b-set: permutations in lexicographic
// tuple order, deduplicated by induced host edge set. Undirected patterns
// match either sign, so their key drops the sign; two permutations that
// select the same host edges are the same copy.
std::vector<std::vector<Vertex>> embeddings_on(const System& sys, const Pattern& F,
                                               const std::vector<Vertex>& bset) {
    std::vector<std::vector<Vertex>> result;
    std::set<std::vector<DEdge>> seen;
    std::vector<Vertex> perm = bset;
    std::vector<DEdge> he;
    do {
        if (!host_edges_of(sys, F, perm, he)) continue;
        std::vector<DEdge> key = he;
        if (!F.directed)
            for (DEdge& e : key) e.sign = +1;
        std::sort(key.begin(), key.end());
        if (seen.insert(std::move(key)).second) result.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return result;
}

// For one embedding, visit color assignments (bijections from template
// edges to `colors`) that realize a rainbow copy, in lexicographic color
// tuple order. Returns false if fn stopped the walk.
bool visit_colorings(const System& sys, const Pattern& F, const std::vector<Vertex>& embed,
                     const std::vector<Color>& colors,
                     const std::function<bool(const RainbowCopy&)>& fn) {
    std::vector<DEdge> he;
    if (!host_edges_of(sys, F, embed, he)) return true;
    size_t f = he.size();
    // admissible[j] = colors (by palette index) whose graph contains host edge j
    std::vector<std::vector<int>> admissible(f);
    for (size_t j = 0; j < f; ++j) {
        for (size_t ci = 0; ci < colors.size(); ++ci) {
            const DKGraph& g = sys.graphs[static_cast<size_t>(colors[ci])];
            bool ok = F.directed ? g.has_edge(he[j].verts, he[j].sign) : g.has_edge_any_sign(he[j].verts);
            if (ok) admissible[j].push_back(static_cast<int>(ci));
        }
        if (admissible[j].empty()) return true;
    }
    std::vector<bool> used(colors.size(), false);
    std::vector<Color> assign(f, -1);
    RainbowCopy copy;
    copy.embed = embed;
    std::function<bool(size_t)> rec = [&](size_t j) -> bool {
        if (j == f) {
            copy.colors = assign;
            return fn(copy);
        }
        for (int ci : admissible[j]) {
            if (used[static_cast<size_t>(ci)]) continue;
            used[static_cast<size_t>(ci)] = true;
            assign[j] = colors[static_cast<size_t>(ci)];
            if (!rec(j + 1)) return false;
            used[static_cast<size_t>(ci)] = false;
        }
        return true;
    };
    return rec(0);
}

}  // namespace

bool for_each_copy_on(const System& sys, const Pattern& F, const std::vector<Vertex>& bset,
                      const std::vector<Color>& colors,
                      const std::function<bool(const RainbowCopy&)>& fn) {
    if (static_cast<int>(bset.size()) != F.b) fail_invalid("for_each_copy_on: vertex set size must be b");
    if (static_cast<int>(colors.size()) != F.f) fail_invalid("for_each_copy_on: color set size must be f");
    if (!is_sorted_unique(bset) && F.b > 1) fail_invalid("for_each_copy_on: vertex set must be ascending");
    for (const auto& embed : embeddings_on(sys, F, bset))
        if (!visit_colorings(sys, F, embed, colors, fn)) return false;
    return true;
}

std::optional<RainbowCopy> first_copy_on(const System& sys, const Pattern& F,
                                         const std::vector<Vertex>& bset,
                                         const std::vector<Color>& colors) {
    std::optional<RainbowCopy> found;
    for_each_copy_on(sys, F, bset, colors, [&](const RainbowCopy& c) {
        found = c;
        return false;
    });
    return found;
}

std::vector<RainbowCopy> enumerate_rainbow_copies(const System& sys, const Pattern& F,
                                                  const std::vector<Color>& colors) {
    if (static_cast<int>(colors.size()) < F.f) return {};
    std::vector<RainbowCopy> out;
    for_each_subset(sys.n, F.b, [&](const std::vector<int>& bset) {
        for (const auto& embed : embeddings_on(sys, F, bset)) {
            // visit_colorings on the full palette walks injections from
            // template edges into the palette in lexicographic color tuple
            // order, which covers every f-subset exactly once.
            visit_colorings(sys, F, embed, colors, [&](const RainbowCopy& c) {
                out.push_back(c);
                return true;
            });
        }
        return true;
    });
    return out;
}

std::vector<RainbowCopy> enumerate_rainbow_copies(const System& sys, const Pattern& F) {
    std::vector<Color> all(static_cast<size_t>(sys.m));
    for (int i = 0; i < sys.m; ++i) all[static_cast<size_t>(i)] = i;
    return enumerate_rainbow_copies(sys, F, all);
}

DKGraph build_HF(const System& slice, const Pattern& F) {
    if (slice.m != F.f)
        fail_invalid("build_HF: slice must have exactly f = " + std::to_string(F.f) + " colors");
    std::vector<Color> colors(static_cast<size_t>(F.f));
    for (int i = 0; i < F.f; ++i) colors[static_cast<size_t>(i)] = i;
    DKGraph h(slice.n, F.b);
    for_each_subset(slice.n, F.b, [&](const std::vector<int>& bset) {
        if (first_copy_on(slice, F, bset, colors)) h.add_edge({bset, +1});
        return true;
    });
    h.finalize();
    return h;
}

}  // namespace rf
