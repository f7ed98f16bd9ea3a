#include "lp/complex.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "util/comb.hpp"

namespace rf {

bool Complex::has_set(int r, const std::vector<Vertex>& s) const {
    if (r < 0 || r > k) return false;
    const auto& lvl = levels[static_cast<size_t>(r)];
    return std::binary_search(lvl.begin(), lvl.end(), s);
}

void Complex::sort_levels() {
    for (auto& lvl : levels) {
        std::sort(lvl.begin(), lvl.end());
        lvl.erase(std::unique(lvl.begin(), lvl.end()), lvl.end());
    }
}

bool Complex::downward_closed() const {
    if (levels.empty() || levels[0] != std::vector<std::vector<Vertex>>{{}}) return false;
    for (int r = 1; r <= k; ++r) {
        for (const auto& e : levels[static_cast<size_t>(r)]) {
            std::vector<Vertex> sub(e.begin(), e.end() - 1);
            for (size_t drop = 0; drop < e.size(); ++drop) {
                sub.clear();
                for (size_t i = 0; i < e.size(); ++i)
                    if (i != drop) sub.push_back(e[i]);
                if (!has_set(r - 1, sub)) return false;
            }
        }
    }
    return true;
}

Hypergraph Complex::top_level() const {
    Hypergraph h;
    h.n = n;
    h.edges = levels[static_cast<size_t>(k)];
    return h;
}

std::vector<long long> degree_sequence(const Complex& c) {
    std::vector<long long> out(static_cast<size_t>(c.k), 0);
    for (int r = 0; r < c.k; ++r) {
        const auto& lvl = c.levels[static_cast<size_t>(r)];
        if (lvl.empty()) { out[static_cast<size_t>(r)] = 0; continue; }
        std::map<std::vector<Vertex>, long long> deg;
        for (const auto& e : lvl) deg[e] = 0;
        for (const auto& up : c.levels[static_cast<size_t>(r + 1)]) {
            for_each_subset_of<Vertex>(up, r, [&](const std::vector<Vertex>& s) {
                auto it = deg.find(s);
                if (it != deg.end()) ++it->second;
                return true;
            });
        }
        long long best = -1;
        for (const auto& [s, d] : deg)
            if (best < 0 || d < best) best = d;
        out[static_cast<size_t>(r)] = best < 0 ? 0 : best;
    }
    return out;
}

std::vector<long long> partite_degree_sequence(const Complex& c) {
    if (!c.partite()) fail_invalid("partite degree sequence needs a partite complex");
    std::vector<long long> out(static_cast<size_t>(c.k), 0);
    for (int r = 0; r < c.k; ++r) {
        const auto& lvl = c.levels[static_cast<size_t>(r)];
        if (lvl.empty()) { out[static_cast<size_t>(r)] = 0; continue; }
        long long best = -1;
        for (const auto& e : lvl) {
            std::vector<char> touched(static_cast<size_t>(c.num_classes), 0);
            for (Vertex v : e) touched[static_cast<size_t>(c.klass[static_cast<size_t>(v)])] = 1;
            for (int cls = 0; cls < c.num_classes; ++cls) {
                if (touched[static_cast<size_t>(cls)]) continue;
                long long count = 0;
                for (Vertex v = 0; v < c.n; ++v) {
                    if (c.klass[static_cast<size_t>(v)] != cls) continue;
                    std::vector<Vertex> up = e;
                    up.insert(std::lower_bound(up.begin(), up.end(), v), v);
                    if (c.has_set(r + 1, up)) ++count;
                }
                if (best < 0 || count < best) best = count;
            }
        }
        out[static_cast<size_t>(r)] = best < 0 ? 0 : best;
    }
    return out;
}

bool degree_sequence_bound_met(const Complex& c) {
    long long base = c.n;
    std::vector<long long> deg;
    if (c.partite()) {
        std::vector<long long> sizes(static_cast<size_t>(c.num_classes), 0);
        for (int v = 0; v < c.n; ++v) ++sizes[static_cast<size_t>(c.klass[static_cast<size_t>(v)])];
        base = *std::min_element(sizes.begin(), sizes.end());
        deg = partite_degree_sequence(c);
    } else {
        deg = degree_sequence(c);
    }
    // deg_r >= (k - r) base / k, compared exactly.
    for (int r = 0; r < c.k; ++r)
        if (deg[static_cast<size_t>(r)] * c.k < static_cast<long long>(c.k - r) * base) return false;
    return true;
}

namespace {

// Match each vertex pair of a would-be clique to a distinct slice color via
// augmenting paths. adm[p] lists admissible colors for pair p.
bool pairs_colorable(const std::vector<std::vector<int>>& adm, int ncolors) {
    std::vector<int> owner(static_cast<size_t>(ncolors), -1);
    std::vector<char> seen;
    std::function<bool(int)> augment = [&](int p) -> bool {
        for (int col : adm[static_cast<size_t>(p)]) {
            if (seen[static_cast<size_t>(col)]) continue;
            seen[static_cast<size_t>(col)] = 1;
            if (owner[static_cast<size_t>(col)] < 0 || augment(owner[static_cast<size_t>(col)])) {
                owner[static_cast<size_t>(col)] = p;
                return true;
            }
        }
        return false;
    };
    for (size_t p = 0; p < adm.size(); ++p) {
        seen.assign(static_cast<size_t>(ncolors), 0);
        if (!augment(static_cast<int>(p))) return false;
    }
    return true;
}

// Does this r-set span a rainbow r-clique? Directed mode requires some
// vertex ordering whose arcs (earlier -> later) all exist with matching
// signs; undirected mode ignores signs.
bool spans_rainbow_clique(const System& slice, const std::vector<Vertex>& rset, bool directed) {
    int r = static_cast<int>(rset.size());
    if (r <= 1) return true;
    std::vector<Vertex> perm = rset;
    do {
        std::vector<std::vector<int>> adm;
        adm.reserve(static_cast<size_t>(r * (r - 1) / 2));
        bool viable = true;
        for (int i = 0; i < r && viable; ++i) {
            for (int j = i + 1; j < r && viable; ++j) {
                Vertex u = perm[static_cast<size_t>(i)], v = perm[static_cast<size_t>(j)];
                std::vector<Vertex> pair{std::min(u, v), std::max(u, v)};
                int sign = u < v ? +1 : -1;
                std::vector<int> cols;
                for (int c = 0; c < slice.m; ++c) {
                    const DKGraph& g = slice.graphs[static_cast<size_t>(c)];
                    bool ok = directed ? g.has_edge(pair, sign) : g.has_edge_any_sign(pair);
                    if (ok) cols.push_back(c);
                }
                if (cols.empty()) viable = false;
                adm.push_back(std::move(cols));
            }
        }
        if (viable && pairs_colorable(adm, slice.m)) return true;
        if (!directed) return false;  // orderings are equivalent without signs
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace

Complex clique_complex(const System& slice, bool directed) {
    int k = -1;
    for (int t = 1; t <= 16; ++t)
        if (t * (t - 1) / 2 == slice.m) { k = t; break; }
    if (k < 0) fail_invalid("clique complex: slice width must be a binomial t(t-1)/2");
    if (k == 1 && slice.m != 0) fail_internal("clique complex: width bookkeeping");
    Complex c;
    c.n = slice.n;
    c.k = k;
    c.klass = slice.klass;
    c.num_classes = slice.num_classes;
    c.levels.assign(static_cast<size_t>(k + 1), {});
    c.levels[0] = {{}};
    for (int r = 1; r <= k; ++r) {
        for_each_subset(slice.n, r, [&](const std::vector<int>& rset) {
            if (spans_rainbow_clique(slice, rset, directed))
                c.levels[static_cast<size_t>(r)].push_back(rset);
            return true;
        });
    }
    c.sort_levels();
    return c;
}

GreedyEdgeResult greedy_low_index_edge(const Complex& c, const std::vector<Vertex>& order) {
    if (static_cast<int>(order.size()) != c.n) fail_invalid("greedy edge: ranking must list every vertex");
    GreedyEdgeResult res;
    std::vector<char> used(static_cast<size_t>(c.n), 0);
    std::vector<Vertex> prefix;
    for (int level = 1; level <= c.k; ++level) {
        int pick_rank = -1;
        for (int idx = 0; idx < c.n; ++idx) {
            Vertex v = order[static_cast<size_t>(idx)];
            if (used[static_cast<size_t>(v)]) continue;
            std::vector<Vertex> cand = prefix;
            cand.insert(std::lower_bound(cand.begin(), cand.end(), v), v);
            if (c.has_set(level, cand)) {
                prefix = std::move(cand);
                used[static_cast<size_t>(v)] = 1;
                pick_rank = idx + 1;
                break;
            }
        }
        if (pick_rank < 0) {
            res.stuck_prefix = prefix;
            return res;
        }
        res.ranks.push_back(pick_rank);
    }
    res.ok = true;
    res.edge = prefix;
    return res;
}

GreedyEdgeResult greedy_low_index_edge_partite(const Complex& c,
                                               const std::vector<std::vector<Vertex>>& class_orders) {
    if (!c.partite()) fail_invalid("partite greedy edge needs a partite complex");
    if (static_cast<int>(class_orders.size()) != c.num_classes)
        fail_invalid("partite greedy edge: one ranking per class required");
    GreedyEdgeResult res;
    std::vector<Vertex> prefix;
    for (int level = 1; level <= c.k; ++level) {
        const auto& order = class_orders[static_cast<size_t>(level - 1)];
        int pick_rank = -1;
        for (size_t idx = 0; idx < order.size(); ++idx) {
            Vertex v = order[idx];
            if (c.klass[static_cast<size_t>(v)] != level - 1)
                fail_invalid("partite greedy edge: ranking for class " + std::to_string(level - 1) +
                             " contains a vertex of another class");
            std::vector<Vertex> cand = prefix;
            cand.insert(std::lower_bound(cand.begin(), cand.end(), v), v);
            if (c.has_set(level, cand)) {
                prefix = std::move(cand);
                pick_rank = static_cast<int>(idx) + 1;
                break;
            }
        }
        if (pick_rank < 0) {
            res.stuck_prefix = prefix;
            return res;
        }
        res.ranks.push_back(pick_rank);
    }
    res.ok = true;
    res.edge = prefix;
    return res;
}

DegSeqPfmResult check_degree_sequence_pfm(const Complex& c) {
    DegSeqPfmResult out;
    out.bound_met = degree_sequence_bound_met(c);
    out.pfm = has_perfect_fractional_matching(c.top_level(), c.k);
    return out;
}

}  // namespace rf
