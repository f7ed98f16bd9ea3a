#include "lp/simplex.hpp"

#include "core/types.hpp"

namespace rf {

std::string rat_str(const Rat& r) {
    return r.get_str();
}

namespace {

struct Tableau {
    int nrows = 0;
    int ncols = 0;
    std::vector<std::vector<Rat>> a;  // nrows x ncols, kept as B^{-1} A
    std::vector<Rat> b;               // B^{-1} rhs, stays >= 0
    std::vector<int> basis;           // basic variable per row
    std::vector<Rat> zrow;            // reduced costs c_B B^{-1} A - c
    Rat zval;                         // objective value at current basis

    void pivot(int pr, int pc) {
        Rat inv = 1 / a[static_cast<size_t>(pr)][static_cast<size_t>(pc)];
        auto& prow = a[static_cast<size_t>(pr)];
        for (int j = 0; j < ncols; ++j) prow[static_cast<size_t>(j)] *= inv;
        b[static_cast<size_t>(pr)] *= inv;
        for (int i = 0; i < nrows; ++i) {
            if (i == pr) continue;
            Rat factor = a[static_cast<size_t>(i)][static_cast<size_t>(pc)];
            if (factor == 0) continue;
            auto& row = a[static_cast<size_t>(i)];
            for (int j = 0; j < ncols; ++j) row[static_cast<size_t>(j)] -= factor * prow[static_cast<size_t>(j)];
            b[static_cast<size_t>(i)] -= factor * b[static_cast<size_t>(pr)];
        }
        Rat zf = zrow[static_cast<size_t>(pc)];
        if (zf != 0) {
            for (int j = 0; j < ncols; ++j) zrow[static_cast<size_t>(j)] -= zf * prow[static_cast<size_t>(j)];
            zval -= zf * b[static_cast<size_t>(pr)];
        }
        basis[static_cast<size_t>(pr)] = pc;
    }

    // Reduced costs for maximizing c . x at the current basis.
    void load_objective(const std::vector<Rat>& c) {
        zrow.assign(static_cast<size_t>(ncols), Rat(0));
        zval = 0;
        for (int j = 0; j < ncols; ++j) zrow[static_cast<size_t>(j)] = -c[static_cast<size_t>(j)];
        for (int i = 0; i < nrows; ++i) {
            Rat cb = c[static_cast<size_t>(basis[static_cast<size_t>(i)])];
            if (cb == 0) continue;
            const auto& row = a[static_cast<size_t>(i)];
            for (int j = 0; j < ncols; ++j) zrow[static_cast<size_t>(j)] += cb * row[static_cast<size_t>(j)];
            zval += cb * b[static_cast<size_t>(i)];
        }
    }

    // Bland's rule; `allowed` masks columns that may enter.
    // Returns false when the objective is unbounded above.
    bool run(const std::vector<char>& allowed) {
        while (true) {
            int enter = -1;
            for (int j = 0; j < ncols; ++j) {
                if (!allowed[static_cast<size_t>(j)]) continue;
                if (zrow[static_cast<size_t>(j)] < 0) { enter = j; break; }
            }
            if (enter < 0) return true;
            int leave = -1;
            Rat best_ratio;
            for (int i = 0; i < nrows; ++i) {
                const Rat& aij = a[static_cast<size_t>(i)][static_cast<size_t>(enter)];
                if (aij <= 0) continue;
                Rat ratio = b[static_cast<size_t>(i)] / aij;
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis[static_cast<size_t>(i)] < basis[static_cast<size_t>(leave)])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }
};

}  // namespace

LpResult solve_lp(const LinearProgram& lp) {
    int m = static_cast<int>(lp.rows.size());
    if (static_cast<int>(lp.rhs.size()) != m || static_cast<int>(lp.rel.size()) != m)
        fail_invalid("lp: inconsistent constraint arrays");
    if (static_cast<int>(lp.obj.size()) != lp.nvars) fail_invalid("lp: objective length mismatch");
    for (const auto& row : lp.rows)
        if (static_cast<int>(row.size()) != lp.nvars) fail_invalid("lp: row length mismatch");

    // Normalize to rhs >= 0, then add slack / surplus / artificial columns.
    std::vector<std::vector<Rat>> rows = lp.rows;
    std::vector<Rat> rhs = lp.rhs;
    std::vector<Rel> rel = lp.rel;
    for (int i = 0; i < m; ++i) {
        if (rhs[static_cast<size_t>(i)] < 0) {
            for (auto& v : rows[static_cast<size_t>(i)]) v = -v;
            rhs[static_cast<size_t>(i)] = -rhs[static_cast<size_t>(i)];
            if (rel[static_cast<size_t>(i)] == Rel::Le) rel[static_cast<size_t>(i)] = Rel::Ge;
            else if (rel[static_cast<size_t>(i)] == Rel::Ge) rel[static_cast<size_t>(i)] = Rel::Le;
        }
    }
    int n_slack = 0, n_art = 0;
    for (int i = 0; i < m; ++i) {
        if (rel[static_cast<size_t>(i)] != Rel::Eq) ++n_slack;
        if (rel[static_cast<size_t>(i)] != Rel::Le) ++n_art;
    }
    Tableau t;
    t.nrows = m;
    t.ncols = lp.nvars + n_slack + n_art;
    t.a.assign(static_cast<size_t>(m), std::vector<Rat>(static_cast<size_t>(t.ncols), Rat(0)));
    t.b = rhs;
    t.basis.assign(static_cast<size_t>(m), -1);
    int slack_at = lp.nvars;
    int art_at = lp.nvars + n_slack;
    std::vector<char> is_art(static_cast<size_t>(t.ncols), 0);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < lp.nvars; ++j)
            t.a[static_cast<size_t>(i)][static_cast<size_t>(j)] = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
        if (rel[static_cast<size_t>(i)] == Rel::Le) {
            t.a[static_cast<size_t>(i)][static_cast<size_t>(slack_at)] = 1;
            t.basis[static_cast<size_t>(i)] = slack_at++;
        } else if (rel[static_cast<size_t>(i)] == Rel::Ge) {
            t.a[static_cast<size_t>(i)][static_cast<size_t>(slack_at)] = -1;
            ++slack_at;
            t.a[static_cast<size_t>(i)][static_cast<size_t>(art_at)] = 1;
            is_art[static_cast<size_t>(art_at)] = 1;
            t.basis[static_cast<size_t>(i)] = art_at++;
        } else {
            t.a[static_cast<size_t>(i)][static_cast<size_t>(art_at)] = 1;
            is_art[static_cast<size_t>(art_at)] = 1;
            t.basis[static_cast<size_t>(i)] = art_at++;
        }
    }

    LpResult res;
    std::vector<char> allow_all(static_cast<size_t>(t.ncols), 1);

    if (n_art > 0) {
        // Phase 1: maximize minus the sum of artificials.
        std::vector<Rat> c1(static_cast<size_t>(t.ncols), Rat(0));
        for (int j = 0; j < t.ncols; ++j)
            if (is_art[static_cast<size_t>(j)]) c1[static_cast<size_t>(j)] = -1;
        t.load_objective(c1);
        if (!t.run(allow_all)) fail_internal("lp: phase 1 unbounded");
        if (t.zval != 0) {
            res.status = LpStatus::Infeasible;
            return res;
        }
        // Drive leftover artificials out of the basis; drop redundant rows.
        for (int i = t.nrows - 1; i >= 0; --i) {
            if (!is_art[static_cast<size_t>(t.basis[static_cast<size_t>(i)])]) continue;
            int piv = -1;
            for (int j = 0; j < t.ncols && piv < 0; ++j)
                if (!is_art[static_cast<size_t>(j)] && t.a[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0) piv = j;
            if (piv >= 0) {
                t.pivot(i, piv);
            } else {
                t.a.erase(t.a.begin() + i);
                t.b.erase(t.b.begin() + i);
                t.basis.erase(t.basis.begin() + i);
                --t.nrows;
            }
        }
    }

    // Phase 2 on the real objective, artificial columns locked out.
    std::vector<Rat> c2(static_cast<size_t>(t.ncols), Rat(0));
    for (int j = 0; j < lp.nvars; ++j) c2[static_cast<size_t>(j)] = lp.obj[static_cast<size_t>(j)];
    std::vector<char> allowed(static_cast<size_t>(t.ncols), 1);
    for (int j = 0; j < t.ncols; ++j)
        if (is_art[static_cast<size_t>(j)]) allowed[static_cast<size_t>(j)] = 0;
    t.load_objective(c2);
    if (!t.run(allowed)) {
        res.status = LpStatus::Unbounded;
        return res;
    }
    res.status = LpStatus::Optimal;
    res.value = t.zval;
    res.x.assign(static_cast<size_t>(lp.nvars), Rat(0));
    for (int i = 0; i < t.nrows; ++i) {
        int v = t.basis[static_cast<size_t>(i)];
        if (v < lp.nvars) res.x[static_cast<size_t>(v)] = t.b[static_cast<size_t>(i)];
    }
    return res;
}

}  // namespace rf
