#include "lp/matching_lp.hpp"

#include <sstream>

#include "util/comb.hpp"

namespace rf {

void Hypergraph::validate() const {
    if (n < 0) fail_invalid("hypergraph: negative vertex count");
    for (const auto& e : edges) {
        if (e.empty()) fail_invalid("hypergraph: empty edge");
        if (!is_sorted_unique(e)) fail_invalid("hypergraph: edge vertices must be strictly ascending");
        if (e.front() < 0 || e.back() >= n) fail_invalid("hypergraph: vertex out of range");
    }
    for (size_t i = 1; i < edges.size(); ++i)
        if (edges[i] == edges[i - 1]) fail_invalid("hypergraph: duplicate edge");
}

Hypergraph Hypergraph::parse(const std::string& text) {
    std::istringstream in(text);
    std::string tag;
    if (!(in >> tag) || tag != "hg") fail_invalid("hypergraph parse: expected leading 'hg'");
    Hypergraph h;
    if (!(in >> h.n)) fail_invalid("hypergraph parse: bad vertex count");
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<Vertex> e;
        int v;
        while (ls >> v) e.push_back(v);
        if (!e.empty()) h.edges.push_back(std::move(e));
    }
    std::vector<std::vector<Vertex>> sorted = h.edges;
    std::sort(sorted.begin(), sorted.end());
    Hypergraph check;
    check.n = h.n;
    check.edges = sorted;
    check.validate();
    return h;
}

std::string Hypergraph::serialize() const {
    std::ostringstream out;
    out << "hg " << n << '\n';
    for (const auto& e : edges) out << join_ints(e) << '\n';
    return out.str();
}

bool check_farkas(const Hypergraph& h, const FarkasCertificate& cert) {
    if (static_cast<int>(cert.a.size()) != h.n) return false;
    Rat total(0);
    for (const Rat& v : cert.a) total += v;
    if (!(total < 0)) return false;
    for (const auto& e : h.edges) {
        Rat s(0);
        for (Vertex v : e) s += cert.a[static_cast<size_t>(v)];
        if (s < 0) return false;
    }
    return true;
}

FractionalSolution max_fractional_matching(const Hypergraph& h) {
    LinearProgram lp;
    lp.nvars = static_cast<int>(h.edges.size());
    lp.obj.assign(static_cast<size_t>(lp.nvars), Rat(1));
    lp.rows.assign(static_cast<size_t>(h.n), std::vector<Rat>(static_cast<size_t>(lp.nvars), Rat(0)));
    lp.rhs.assign(static_cast<size_t>(h.n), Rat(1));
    lp.rel.assign(static_cast<size_t>(h.n), Rel::Le);
    for (size_t j = 0; j < h.edges.size(); ++j)
        for (Vertex v : h.edges[j]) lp.rows[static_cast<size_t>(v)][j] = 1;
    LpResult r = solve_lp(lp);
    if (r.status != LpStatus::Optimal) fail_internal("matching LP must be feasible and bounded");
    FractionalSolution s;
    s.kind = SolKind::Matching;
    s.weights = std::move(r.x);
    s.value = r.value;
    return s;
}

FractionalSolution min_fractional_cover(const Hypergraph& h) {
    LinearProgram lp;
    lp.nvars = h.n;
    lp.obj.assign(static_cast<size_t>(h.n), Rat(-1));  // minimize 1.y as maximize -1.y
    lp.rows.assign(h.edges.size(), std::vector<Rat>(static_cast<size_t>(h.n), Rat(0)));
    lp.rhs.assign(h.edges.size(), Rat(1));
    lp.rel.assign(h.edges.size(), Rel::Ge);
    for (size_t i = 0; i < h.edges.size(); ++i)
        for (Vertex v : h.edges[i]) lp.rows[i][static_cast<size_t>(v)] = 1;
    LpResult r = solve_lp(lp);
    if (r.status != LpStatus::Optimal) fail_internal("cover LP must be feasible and bounded");
    FractionalSolution s;
    s.kind = SolKind::Cover;
    s.weights = std::move(r.x);
    s.value = -r.value;
    return s;
}

PfmResult has_perfect_fractional_matching(const Hypergraph& h, int b) {
    if (b < 1) fail_invalid("pfm: b must be positive");
    for (const auto& e : h.edges)
        if (static_cast<int>(e.size()) != b) fail_invalid("pfm: hypergraph is not " + std::to_string(b) + "-uniform");
    PfmResult out;
    if (h.n == 0) {
        out.has_pfm = true;
        out.sol = FractionalSolution{SolKind::Matching, {}, Rat(0)};
        out.sol.weights.assign(h.edges.size(), Rat(0));
        return out;
    }
    FractionalSolution match = max_fractional_matching(h);
    Rat target = Rat(h.n) / Rat(b);
    if (match.value == target) {
        // The optimum saturates every vertex exactly; verify.
        std::vector<Rat> sat(static_cast<size_t>(h.n), Rat(0));
        for (size_t j = 0; j < h.edges.size(); ++j)
            for (Vertex v : h.edges[j]) sat[static_cast<size_t>(v)] += match.weights[j];
        for (const Rat& s : sat)
            if (s != 1) fail_internal("pfm: optimal matching at n/b does not saturate");
        out.has_pfm = true;
        out.sol = std::move(match);
        return out;
    }
    // No perfect fractional matching. Turn the optimal cover into a witness:
    // a = y - c 1 with tau*/n < c < 1/b keeps every edge sum positive while
    // the total goes negative.
    FractionalSolution cover = min_fractional_cover(h);
    Rat c = (cover.value / Rat(h.n) + Rat(1) / Rat(b)) / Rat(2);
    FarkasCertificate cert;
    cert.a.resize(static_cast<size_t>(h.n));
    for (int v = 0; v < h.n; ++v) cert.a[static_cast<size_t>(v)] = cover.weights[static_cast<size_t>(v)] - c;
    if (!check_farkas(h, cert)) fail_internal("pfm: constructed certificate failed verification");
    out.has_pfm = false;
    out.sol = std::move(cover);
    out.cert = std::move(cert);
    return out;
}

Hypergraph to_hypergraph(const FbGraph& g) {
    Hypergraph h;
    h.n = g.m() + g.n();
    for (const FbEdge& e : g.edges()) {
        std::vector<Vertex> he;
        he.reserve(static_cast<size_t>(g.f() + g.b()));
        for (int i = 0; i < g.f(); ++i) he.push_back(e.block * g.f() + i);
        for (Vertex v : e.bset) he.push_back(g.m() + v);
        h.edges.push_back(std::move(he));
    }
    return h;
}

Hypergraph block_hypergraph(const FbGraph& g, int block) {
    Hypergraph h;
    h.n = g.n();
    for (size_t idx : g.block_edge_index(block)) h.edges.push_back(g.edges()[idx].bset);
    return h;
}

PfmResult lift_block_pfm(const FbGraph& g) {
    if (!g.strict()) fail_invalid("lift_block_pfm: reduction graph must be strict");
    return has_perfect_fractional_matching(to_hypergraph(g), g.f() + g.b());
}

}  // namespace rf
