#pragma once

// Exact rational linear programming: dense two-phase simplex over GMP
// rationals with Bland's pivoting rule, so every run terminates and two
// identical inputs pivot identically. Sized for desk-scale instances
// (hundreds of rows and columns), where exactness matters more than speed.

#include <gmpxx.h>

#include <vector>

namespace rf {

using Rat = mpq_class;

enum class Rel { Le, Eq, Ge };

struct LinearProgram {
    int nvars = 0;                       // x >= 0 throughout
    std::vector<std::vector<Rat>> rows;  // constraint coefficients
    std::vector<Rat> rhs;
    std::vector<Rel> rel;
    std::vector<Rat> obj;                // maximize obj . x
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rat value;               // obj . x at the optimum
    std::vector<Rat> x;
};

LpResult solve_lp(const LinearProgram& lp);

std::string rat_str(const Rat& r);

}  // namespace rf
