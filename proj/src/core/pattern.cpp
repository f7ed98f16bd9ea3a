#include "core/pattern.hpp"

#include <vector>

namespace rf {

static int parse_int_arg(const std::string& s, const std::string& what, int lo, int hi) {
    size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (...) {
        fail_invalid("pattern: bad " + what + " '" + s + "'");
    }
    if (pos != s.size()) fail_invalid("pattern: bad " + what + " '" + s + "'");
    if (v < lo || v > hi) fail_invalid("pattern: " + what + " out of range [" + std::to_string(lo) + "," + std::to_string(hi) + "]");
    return v;
}

static void add_pair_edges(Pattern& p, const std::string& signs) {
    // Pairs (i, j), i < j, in lexicographic order. Empty signs means all '+'.
    int idx = 0;
    for (int i = 0; i < p.b; ++i) {
        for (int j = i + 1; j < p.b; ++j) {
            int sign = +1;
            if (!signs.empty()) {
                char c = signs[static_cast<size_t>(idx)];
                if (c == '+') sign = +1;
                else if (c == '-') sign = -1;
                else fail_invalid("pattern: orientation string must use only '+' and '-'");
            }
            p.tmpl.add_edge({{i, j}, sign});
            ++idx;
        }
    }
    p.tmpl.finalize();
}

Pattern Pattern::parse(const std::string& spec) {
    size_t c1 = spec.find(':');
    std::string head = c1 == std::string::npos ? spec : spec.substr(0, c1);
    std::string rest = c1 == std::string::npos ? "" : spec.substr(c1 + 1);

    Pattern p;
    p.spec = spec;
    if (head == "edge") {
        int k = parse_int_arg(rest, "uniformity", 2, kMaxUniformity);
        p.kind = PatternKind::SingleEdge;
        p.b = k;
        p.f = 1;
        p.k = k;
        p.tmpl = DKGraph(k, k);
        std::vector<Vertex> all(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) all[static_cast<size_t>(i)] = i;
        p.tmpl.add_edge({all, +1});
        p.tmpl.finalize();
    } else if (head == "clique") {
        int t = parse_int_arg(rest, "clique size", 2, 8);
        p.kind = PatternKind::Clique;
        p.b = t;
        p.f = t * (t - 1) / 2;
        p.k = 2;
        p.tmpl = DKGraph(t, 2);
        add_pair_edges(p, "");
    } else if (head == "ttour") {
        int t = parse_int_arg(rest, "tournament size", 2, 8);
        p.kind = PatternKind::TransitiveTournament;
        p.b = t;
        p.f = t * (t - 1) / 2;
        p.k = 2;
        p.directed = true;
        p.tmpl = DKGraph(t, 2);
        add_pair_edges(p, "");  // all arcs low -> high: the transitive order is 0,1,...,t-1
    } else if (head == "tour") {
        size_t c2 = rest.find(':');
        if (c2 == std::string::npos) fail_invalid("pattern: tour needs 'tour:k:SIGNS'");
        int t = parse_int_arg(rest.substr(0, c2), "tournament size", 2, 8);
        std::string signs = rest.substr(c2 + 1);
        if (static_cast<int>(signs.size()) != t * (t - 1) / 2)
            fail_invalid("pattern: tour orientation string needs one sign per vertex pair (" +
                         std::to_string(t * (t - 1) / 2) + " expected)");
        p.kind = PatternKind::Tournament;
        p.b = t;
        p.f = t * (t - 1) / 2;
        p.k = 2;
        p.directed = true;
        p.tmpl = DKGraph(t, 2);
        add_pair_edges(p, signs);
    } else if (head == "pclique") {
        int t = parse_int_arg(rest, "class count", 2, 8);
        p.kind = PatternKind::PartiteClique;
        p.b = t;
        p.f = t * (t - 1) / 2;
        p.k = 2;
        p.partite = true;
        p.tmpl = DKGraph(t, 2);
        add_pair_edges(p, "");
    } else {
        fail_invalid("pattern: unknown kind '" + head +
                     "' (expected edge:k, clique:t, ttour:k, tour:k:SIGNS, pclique:k)");
    }
    return p;
}

}  // namespace rf
