#include "oracle/generators.hpp"

#include <algorithm>
#include <map>

#include "util/comb.hpp"
#include "util/rng.hpp"

namespace rf {

namespace {

std::vector<int> contiguous_classes(int n, int classes) {
    // As balanced as possible: the first n % classes classes get the extra vertex.
    std::vector<int> klass(static_cast<size_t>(n));
    int base = n / classes, extra = n % classes, v = 0;
    for (int c = 0; c < classes; ++c) {
        int size = base + (c < extra ? 1 : 0);
        for (int i = 0; i < size; ++i) klass[static_cast<size_t>(v++)] = c;
    }
    return klass;
}

std::vector<DEdge> complete_edges(int n, int k, bool directed, const std::vector<int>& klass) {
    std::vector<DEdge> out;
    for_each_subset(n, k, [&](const std::vector<int>& s) {
        if (!klass.empty() && klass[static_cast<size_t>(s[0])] == klass[static_cast<size_t>(s[1])])
            return true;  // partite: skip pairs inside one class
        out.push_back({s, +1});
        if (directed) out.push_back({s, -1});
        return true;
    });
    return out;
}

System from_edge_sets(int n, int k, const std::vector<std::vector<DEdge>>& per_color,
                      const std::vector<int>& klass, int classes) {
    System sys;
    sys.n = n;
    sys.k = k;
    sys.m = static_cast<int>(per_color.size());
    sys.klass = klass;
    sys.num_classes = classes;
    for (const auto& edges : per_color) {
        DKGraph g(n, k);
        for (const DEdge& e : edges) g.add_edge(e);
        g.finalize();
        sys.graphs.push_back(std::move(g));
    }
    sys.validate();
    return sys;
}

}  // namespace

System gen_complete(int n, int k, int m, bool directed) {
    std::vector<DEdge> edges = complete_edges(n, k, directed, {});
    return from_edge_sets(n, k, std::vector<std::vector<DEdge>>(static_cast<size_t>(m), edges), {}, 0);
}

System gen_complete_partite(int n, int classes, int m) {
    if (classes < 2) fail_invalid("gen_complete_partite: need at least two classes");
    std::vector<int> klass = contiguous_classes(n, classes);
    std::vector<DEdge> edges = complete_edges(n, 2, false, klass);
    return from_edge_sets(n, 2, std::vector<std::vector<DEdge>>(static_cast<size_t>(m), edges), klass, classes);
}

System gen_extremal(int t, int n) {
    if (t < 2) fail_invalid("gen_extremal: t must be at least 2");
    if (n <= 0 || n % t != 0) fail_invalid("gen_extremal: t must divide n");
    // Complete multipartite: one oversized class W = {0,...,n/t} and the
    // remaining n - n/t - 1 vertices in t-1 balanced classes. Every copy of
    // K_t meets W at most once, and there are n/t + 1 W vertices to cover.
    int wsize = n / t + 1;
    std::vector<int> cls(static_cast<size_t>(n), 0);
    int rest = n - wsize, v = wsize;
    int base = rest / (t - 1), extra = rest % (t - 1);
    for (int c = 0; c < t - 1; ++c) {
        int size = base + (c < extra ? 1 : 0);
        for (int i = 0; i < size; ++i) cls[static_cast<size_t>(v++)] = c + 1;
    }
    std::vector<DEdge> edges;
    for_each_subset(n, 2, [&](const std::vector<int>& s) {
        if (cls[static_cast<size_t>(s[0])] == cls[static_cast<size_t>(s[1])]) return true;
        edges.push_back({s, +1});
        return true;
    });
    int m = (n / t) * (t * (t - 1) / 2);
    return from_edge_sets(n, 2, std::vector<std::vector<DEdge>>(static_cast<size_t>(m), edges), {}, 0);
}

System gen_extremal_completion(int t, int n, uint64_t seed) {
    if (t < 2) fail_invalid("gen_extremal_completion: t must be at least 2");
    if (n <= 0 || n % t != 0) fail_invalid("gen_extremal_completion: t must divide n");
    int wsize = n / t + 1;
    if (wsize < 2) fail_invalid("gen_extremal_completion: W too small to complete");
    System base = gen_extremal(t, n);
    Rng rng = derive_stream(seed, "extremal_completion");
    std::vector<long long> wdeg(static_cast<size_t>(wsize), 0);
    std::vector<DEdge> added;
    DKGraph probe = base.graphs[0];
    auto all_covered = [&]() {
        for (long long d : wdeg)
            if (d == 0) return false;
        return true;
    };
    while (!all_covered()) {
        int u = rng.uniform_int(0, wsize - 1);
        int v = rng.uniform_int(0, wsize - 1);
        if (u == v) continue;
        std::vector<Vertex> pr{std::min(u, v), std::max(u, v)};
        if (probe.has_edge_any_sign(pr)) continue;
        probe.add_edge_checked({pr, +1});
        added.push_back({pr, +1});
        ++wdeg[static_cast<size_t>(u)];
        ++wdeg[static_cast<size_t>(v)];
    }
    std::vector<DEdge> edges;
    for (const DEdge& e : base.graphs[0].edges()) edges.push_back(e);
    edges.insert(edges.end(), added.begin(), added.end());
    return from_edge_sets(n, 2, std::vector<std::vector<DEdge>>(static_cast<size_t>(base.m), edges), {}, 0);
}

System gen_extremal_space(int k, int n) {
    if (k < 2) fail_invalid("gen_extremal_space: k must be at least 2");
    if (n <= 0 || n % k != 0) fail_invalid("gen_extremal_space: k must divide n");
    int wsize = n / k - 1;
    std::vector<DEdge> edges;
    for_each_subset(n, k, [&](const std::vector<int>& s) {
        if (s[0] >= wsize) return true;  // disjoint from W = {0,...,n/k-2}
        edges.push_back({s, +1});
        return true;
    });
    int m = n / k;
    return from_edge_sets(n, k, std::vector<std::vector<DEdge>>(static_cast<size_t>(m), edges), {}, 0);
}

namespace {

// Incremental per-color degree bookkeeping for the deletion pass.
struct DegreeTracker {
    const DegreeRule& rule;
    int n;
    int k;
    const std::vector<int>& klass;
    int classes;
    long long target;

    std::map<std::vector<Vertex>, long long> subset_cnt;      // standard
    std::vector<long long> outd, ind;                         // out / in / semi
    std::vector<std::vector<long long>> class_cnt;            // partite

    DegreeTracker(const DegreeRule& r, int n_, int k_, const std::vector<int>& kl, int cls,
                  long long tgt, const std::vector<DEdge>& edges)
        : rule(r), n(n_), k(k_), klass(kl), classes(cls), target(tgt) {
        switch (rule.kind) {
            case RuleKind::Standard:
                for (const DEdge& e : edges)
                    for_each_subset_of<Vertex>(e.verts, rule.d, [&](const std::vector<Vertex>& s) {
                        ++subset_cnt[s];
                        return true;
                    });
                break;
            case RuleKind::Out:
            case RuleKind::In:
            case RuleKind::Semi:
                outd.assign(static_cast<size_t>(n), 0);
                ind.assign(static_cast<size_t>(n), 0);
                for (const DEdge& e : edges) {
                    ++outd[static_cast<size_t>(e.sign > 0 ? e.verts[0] : e.verts[1])];
                    ++ind[static_cast<size_t>(e.sign > 0 ? e.verts[1] : e.verts[0])];
                }
                break;
            case RuleKind::Partite:
                class_cnt.assign(static_cast<size_t>(n), std::vector<long long>(static_cast<size_t>(classes), 0));
                for (const DEdge& e : edges) {
                    ++class_cnt[static_cast<size_t>(e.verts[0])][static_cast<size_t>(klass[static_cast<size_t>(e.verts[1])])];
                    ++class_cnt[static_cast<size_t>(e.verts[1])][static_cast<size_t>(klass[static_cast<size_t>(e.verts[0])])];
                }
                break;
        }
    }

    bool removable(const DEdge& e) const {
        switch (rule.kind) {
            case RuleKind::Standard: {
                bool ok = true;
                for_each_subset_of<Vertex>(e.verts, rule.d, [&](const std::vector<Vertex>& s) {
                    if (subset_cnt.at(s) <= target) { ok = false; return false; }
                    return true;
                });
                return ok;
            }
            case RuleKind::Out:
                return outd[static_cast<size_t>(e.sign > 0 ? e.verts[0] : e.verts[1])] > target;
            case RuleKind::In:
                return ind[static_cast<size_t>(e.sign > 0 ? e.verts[1] : e.verts[0])] > target;
            case RuleKind::Semi:
                return outd[static_cast<size_t>(e.sign > 0 ? e.verts[0] : e.verts[1])] > target &&
                       ind[static_cast<size_t>(e.sign > 0 ? e.verts[1] : e.verts[0])] > target;
            case RuleKind::Partite:
                return class_cnt[static_cast<size_t>(e.verts[0])][static_cast<size_t>(klass[static_cast<size_t>(e.verts[1])])] > target &&
                       class_cnt[static_cast<size_t>(e.verts[1])][static_cast<size_t>(klass[static_cast<size_t>(e.verts[0])])] > target;
        }
        return false;
    }

    void remove(const DEdge& e) {
        switch (rule.kind) {
            case RuleKind::Standard:
                for_each_subset_of<Vertex>(e.verts, rule.d, [&](const std::vector<Vertex>& s) {
                    --subset_cnt[s];
                    return true;
                });
                break;
            case RuleKind::Out:
            case RuleKind::In:
            case RuleKind::Semi:
                --outd[static_cast<size_t>(e.sign > 0 ? e.verts[0] : e.verts[1])];
                --ind[static_cast<size_t>(e.sign > 0 ? e.verts[1] : e.verts[0])];
                break;
            case RuleKind::Partite:
                --class_cnt[static_cast<size_t>(e.verts[0])][static_cast<size_t>(klass[static_cast<size_t>(e.verts[1])])];
                --class_cnt[static_cast<size_t>(e.verts[1])][static_cast<size_t>(klass[static_cast<size_t>(e.verts[0])])];
                break;
        }
    }
};

}  // namespace

System gen_random_min_degree(int n, int k, int m, const DegreeRule& rule, long long delta_target,
                             double delete_prob, uint64_t seed, bool directed, int partite_classes) {
    if (m < 1) fail_invalid("gen_random_min_degree: need at least one color");
    if (delete_prob < 0.0 || delete_prob > 1.0) fail_invalid("gen_random_min_degree: delete_prob outside [0,1]");
    if (rule.kind == RuleKind::Partite && partite_classes < 2)
        fail_invalid("gen_random_min_degree: partite rule needs partite_classes");
    if ((rule.kind == RuleKind::Out || rule.kind == RuleKind::In || rule.kind == RuleKind::Semi) && !directed)
        fail_invalid("gen_random_min_degree: orientation rules need a directed host");
    std::vector<int> klass;
    if (partite_classes > 0) klass = contiguous_classes(n, partite_classes);
    std::vector<DEdge> host = complete_edges(n, k, directed, klass);

    // Confirm the target is attainable at all.
    {
        DKGraph g(n, k);
        for (const DEdge& e : host) g.add_edge(e);
        g.finalize();
        long long full = min_star_degree(g, rule, klass, partite_classes);
        if (full < delta_target)
            fail_invalid("gen_random_min_degree: the complete host already sits below delta_target");
    }

    std::vector<std::vector<char>> alive(static_cast<size_t>(m),
                                         std::vector<char>(host.size(), 1));
    std::vector<std::pair<int, size_t>> walk;  // (color, edge index)
    walk.reserve(static_cast<size_t>(m) * host.size());
    for (int c = 0; c < m; ++c)
        for (size_t i = 0; i < host.size(); ++i) walk.emplace_back(c, i);
    Rng rng = derive_stream(seed, "random_min_degree");
    rng.shuffle(walk);

    std::vector<DegreeTracker> trackers;
    trackers.reserve(static_cast<size_t>(m));
    for (int c = 0; c < m; ++c)
        trackers.emplace_back(rule, n, k, klass, partite_classes, delta_target, host);

    for (const auto& [c, idx] : walk) {
        if (!rng.bernoulli(delete_prob)) continue;
        DegreeTracker& tr = trackers[static_cast<size_t>(c)];
        const DEdge& e = host[idx];
        if (!tr.removable(e)) continue;
        tr.remove(e);
        alive[static_cast<size_t>(c)][idx] = 0;
    }

    std::vector<std::vector<DEdge>> per_color(static_cast<size_t>(m));
    for (int c = 0; c < m; ++c)
        for (size_t i = 0; i < host.size(); ++i)
            if (alive[static_cast<size_t>(c)][i]) per_color[static_cast<size_t>(c)].push_back(host[i]);
    return from_edge_sets(n, k, per_color, klass, partite_classes);
}

}  // namespace rf
