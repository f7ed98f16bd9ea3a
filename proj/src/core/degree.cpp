#include "core/degree.hpp"

#include <algorithm>
#include <map>

#include "util/comb.hpp"

namespace rf {

DegreeRule DegreeRule::parse(const std::string& s) {
    DegreeRule r;
    if (s == "out") { r.kind = RuleKind::Out; r.d = 1; return r; }
    if (s == "in") { r.kind = RuleKind::In; r.d = 1; return r; }
    if (s == "semi") { r.kind = RuleKind::Semi; r.d = 1; return r; }
    if (s == "partite") { r.kind = RuleKind::Partite; r.d = 1; return r; }
    std::string head = s;
    int d = 1;
    size_t c = s.find(':');
    if (c != std::string::npos) {
        head = s.substr(0, c);
        try {
            d = std::stoi(s.substr(c + 1));
        } catch (...) {
            fail_invalid("degree rule: bad d in '" + s + "'");
        }
    }
    if (head != "standard") fail_invalid("degree rule: unknown rule '" + s + "'");
    if (d < 1) fail_invalid("degree rule: d must be positive");
    r.kind = RuleKind::Standard;
    r.d = d;
    return r;
}

std::string DegreeRule::name() const {
    switch (kind) {
        case RuleKind::Standard: return "standard:" + std::to_string(d);
        case RuleKind::Out: return "out";
        case RuleKind::In: return "in";
        case RuleKind::Semi: return "semi";
        case RuleKind::Partite: return "partite";
    }
    return "?";
}

static long long standard_min_degree(const DKGraph& g, int d) {
    if (d >= g.k()) fail_invalid("degree rule: d must be smaller than the uniformity");
    // Count, for every d-subset of every edge, how many edges contain it,
    // then minimize over all d-sets of the vertex set (absent ones count 0).
    std::map<std::vector<Vertex>, long long> counts;
    for (const DEdge& e : g.edges()) {
        for_each_subset_of<Vertex>(e.verts, d, [&](const std::vector<Vertex>& s) {
            ++counts[s];
            return true;
        });
    }
    if (binomial(g.n(), d) > static_cast<long long>(counts.size())) return 0;
    long long best = -1;
    for (const auto& [s, c] : counts)
        if (best < 0 || c < best) best = c;
    return best < 0 ? 0 : best;
}

static void out_in_degrees(const DKGraph& g, std::vector<long long>& outd, std::vector<long long>& ind) {
    outd.assign(static_cast<size_t>(g.n()), 0);
    ind.assign(static_cast<size_t>(g.n()), 0);
    for (const DEdge& e : g.edges()) {
        Vertex lo = e.verts[0], hi = e.verts[1];
        Vertex src = e.sign > 0 ? lo : hi;
        Vertex dst = e.sign > 0 ? hi : lo;
        ++outd[static_cast<size_t>(src)];
        ++ind[static_cast<size_t>(dst)];
    }
}

long long min_star_degree(const DKGraph& g, const DegreeRule& rule, const std::vector<int>& klass, int num_classes) {
    if (g.n() == 0) return 0;
    switch (rule.kind) {
        case RuleKind::Standard:
            return standard_min_degree(g, rule.d);
        case RuleKind::Out:
        case RuleKind::In:
        case RuleKind::Semi: {
            if (g.k() != 2) fail_invalid("degree rule '" + rule.name() + "' requires k = 2");
            std::vector<long long> outd, ind;
            out_in_degrees(g, outd, ind);
            long long best = -1;
            for (int v = 0; v < g.n(); ++v) {
                long long val;
                if (rule.kind == RuleKind::Out) val = outd[static_cast<size_t>(v)];
                else if (rule.kind == RuleKind::In) val = ind[static_cast<size_t>(v)];
                else val = std::min(outd[static_cast<size_t>(v)], ind[static_cast<size_t>(v)]);
                if (best < 0 || val < best) best = val;
            }
            return best;
        }
        case RuleKind::Partite: {
            if (g.k() != 2) fail_invalid("degree rule 'partite' requires k = 2");
            if (num_classes < 2 || static_cast<int>(klass.size()) != g.n())
                fail_invalid("degree rule 'partite' requires a vertex partition");
            // counts[v][c] = edges from v into class c
            std::vector<std::vector<long long>> counts(
                static_cast<size_t>(g.n()), std::vector<long long>(static_cast<size_t>(num_classes), 0));
            for (const DEdge& e : g.edges()) {
                Vertex u = e.verts[0], v = e.verts[1];
                ++counts[static_cast<size_t>(u)][static_cast<size_t>(klass[static_cast<size_t>(v)])];
                ++counts[static_cast<size_t>(v)][static_cast<size_t>(klass[static_cast<size_t>(u)])];
            }
            long long best = -1;
            for (int v = 0; v < g.n(); ++v) {
                for (int c = 0; c < num_classes; ++c) {
                    if (c == klass[static_cast<size_t>(v)]) continue;
                    long long val = counts[static_cast<size_t>(v)][static_cast<size_t>(c)];
                    if (best < 0 || val < best) best = val;
                }
            }
            return best < 0 ? 0 : best;
        }
    }
    fail_internal("unreachable degree rule");
}

long long min_star_degree(const System& sys, const DegreeRule& rule) {
    if (sys.m == 0) return 0;
    long long best = -1;
    for (const DKGraph& g : sys.graphs) {
        long long v = min_star_degree(g, rule, sys.klass, sys.num_classes);
        if (best < 0 || v < best) best = v;
    }
    return best;
}

}  // namespace rf
