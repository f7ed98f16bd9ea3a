#include "core/system.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "util/comb.hpp"

namespace rf {

bool System::directed() const {
    for (const DKGraph& g : graphs)
        if (g.has_minus_edge()) return true;
    return false;
}

void System::validate() const {
    if (n < 0 || n > kMaxVertices) fail_invalid("system: vertex count out of range");
    if (k < 1 || k > kMaxUniformity) fail_invalid("system: uniformity out of range");
    if (m < 0) fail_invalid("system: negative color count");
    if (static_cast<int>(graphs.size()) != m) fail_invalid("system: color count mismatch");
    for (const DKGraph& g : graphs) {
        if (g.n() != n || g.k() != k) fail_invalid("system: all colors must share n and k");
        if (!g.finalized()) fail_internal("system: graph not finalized");
    }
    if (num_classes > 0) {
        if (static_cast<int>(klass.size()) != n) fail_invalid("system: class list length mismatch");
        for (int c : klass)
            if (c < 0 || c >= num_classes) fail_invalid("system: class id out of range");
        if (k != 2) fail_invalid("system: partite mode requires k = 2");
        for (const DKGraph& g : graphs)
            for (const DEdge& e : g.edges())
                if (klass[static_cast<size_t>(e.verts[0])] == klass[static_cast<size_t>(e.verts[1])])
                    fail_invalid("system: partite edge inside one class: " + join_ints(e.verts));
    } else if (!klass.empty()) {
        fail_invalid("system: class list without partite header");
    }
}

namespace {

struct TokenStream {
    std::vector<std::string> toks;
    std::vector<int> lines;
    size_t pos = 0;

    explicit TokenStream(const std::string& text) {
        std::istringstream in(text);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            size_t hash = line.find('#');
            if (hash != std::string::npos) line.resize(hash);
            std::istringstream ls(line);
            std::string t;
            while (ls >> t) {
                toks.push_back(t);
                lines.push_back(lineno);
            }
        }
    }

    bool done() const { return pos >= toks.size(); }
    int here_line() const { return done() ? (lines.empty() ? 0 : lines.back()) : lines[pos]; }

    std::string next(const std::string& what) {
        if (done()) fail_invalid("system parse: expected " + what + " but input ended");
        return toks[pos++];
    }

    int next_int(const std::string& what) {
        std::string t = next(what);
        size_t p = 0;
        int v = 0;
        try {
            v = std::stoi(t, &p);
        } catch (...) {
            fail_invalid("system parse: line " + std::to_string(here_line()) + ": expected " + what + ", got '" + t + "'");
        }
        if (p != t.size())
            fail_invalid("system parse: line " + std::to_string(here_line()) + ": expected " + what + ", got '" + t + "'");
        return v;
    }

    std::string peek() const { return done() ? "" : toks[pos]; }
};

}  // namespace

System System::parse(const std::string& text) {
    TokenStream ts(text);
    System sys;
    sys.n = ts.next_int("vertex count");
    sys.k = ts.next_int("uniformity");
    sys.m = ts.next_int("color count");
    if (sys.n < 0 || sys.n > kMaxVertices) fail_invalid("system parse: vertex count out of range");
    if (sys.k < 1 || sys.k > kMaxUniformity) fail_invalid("system parse: uniformity out of range");
    if (sys.m < 0) fail_invalid("system parse: negative color count");

    if (ts.peek() == "partite") {
        ts.next("partite");
        sys.num_classes = ts.next_int("class count");
        if (sys.num_classes < 1) fail_invalid("system parse: class count must be positive");
        std::string kw = ts.next("classes keyword");
        if (kw != "classes") fail_invalid("system parse: expected 'classes' after partite header");
        sys.klass.resize(static_cast<size_t>(sys.n));
        for (int i = 0; i < sys.n; ++i) sys.klass[static_cast<size_t>(i)] = ts.next_int("class id");
    }

    for (int c = 0; c < sys.m; ++c) {
        std::string kw = ts.next("'color' keyword");
        if (kw != "color") fail_invalid("system parse: line " + std::to_string(ts.here_line()) + ": expected 'color', got '" + kw + "'");
        int cid = ts.next_int("color id");
        if (cid != c) fail_invalid("system parse: color sections must appear as color 0..m-1 in order; got color " + std::to_string(cid));
        DKGraph g(sys.n, sys.k);
        while (!ts.done() && ts.peek() != "color") {
            DEdge e;
            e.verts.resize(static_cast<size_t>(sys.k));
            for (int i = 0; i < sys.k; ++i) e.verts[static_cast<size_t>(i)] = ts.next_int("edge vertex");
            std::string s = ts.next("edge sign");
            if (s == "+") e.sign = +1;
            else if (s == "-") e.sign = -1;
            else fail_invalid("system parse: line " + std::to_string(ts.here_line()) + ": edge sign must be '+' or '-', got '" + s + "'");
            if (!is_sorted_unique(e.verts))
                fail_invalid("system parse: line " + std::to_string(ts.here_line()) + ": edge vertices must be strictly ascending");
            g.add_edge(std::move(e));
        }
        g.finalize();  // rejects duplicate edges
        sys.graphs.push_back(std::move(g));
    }
    if (!ts.done()) fail_invalid("system parse: trailing tokens at line " + std::to_string(ts.here_line()));
    sys.validate();
    return sys;
}

System System::read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail_io("cannot open instance file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

std::string System::serialize() const {
    std::ostringstream out;
    out << n << ' ' << k << ' ' << m;
    if (partite()) out << " partite " << num_classes;
    out << '\n';
    if (partite()) {
        out << "classes";
        for (int c : klass) out << ' ' << c;
        out << '\n';
    }
    for (int c = 0; c < m; ++c) {
        out << "color " << c << '\n';
        for (const DEdge& e : graphs[static_cast<size_t>(c)].edges())
            out << join_ints(e.verts) << ' ' << (e.sign < 0 ? '-' : '+') << '\n';
    }
    return out.str();
}

System System::slice(const std::vector<Color>& colors) const {
    System out;
    out.n = n;
    out.k = k;
    out.m = static_cast<int>(colors.size());
    out.klass = klass;
    out.num_classes = num_classes;
    for (Color c : colors) {
        if (c < 0 || c >= m) fail_invalid("slice: color out of range");
        out.graphs.push_back(graphs[static_cast<size_t>(c)]);
    }
    return out;
}

System System::induced(const std::vector<Vertex>& verts, const std::vector<Color>& colors) const {
    if (!is_sorted_unique(verts) && !verts.empty()) fail_invalid("induced: vertices must be strictly ascending");
    std::vector<int> rank(static_cast<size_t>(n), -1);
    for (size_t i = 0; i < verts.size(); ++i) {
        Vertex v = verts[i];
        if (v < 0 || v >= n) fail_invalid("induced: vertex out of range");
        rank[static_cast<size_t>(v)] = static_cast<int>(i);
    }
    System out;
    out.n = static_cast<int>(verts.size());
    out.k = k;
    out.m = static_cast<int>(colors.size());
    if (partite()) {
        out.num_classes = num_classes;
        out.klass.resize(verts.size());
        for (size_t i = 0; i < verts.size(); ++i) out.klass[i] = klass[static_cast<size_t>(verts[i])];
    }
    for (Color c : colors) {
        if (c < 0 || c >= m) fail_invalid("induced: color out of range");
        DKGraph g(out.n, k);
        for (const DEdge& e : graphs[static_cast<size_t>(c)].edges()) {
            DEdge sub;
            sub.sign = e.sign;
            bool inside = true;
            for (Vertex v : e.verts) {
                int r = rank[static_cast<size_t>(v)];
                if (r < 0) { inside = false; break; }
                sub.verts.push_back(r);
            }
            if (inside) g.add_edge(std::move(sub));
        }
        g.finalize();
        out.graphs.push_back(std::move(g));
    }
    return out;
}

}  // namespace rf
