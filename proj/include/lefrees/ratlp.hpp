#pragma once

#include "lefrees/exactla.hpp"

#include <vector>

namespace lefrees {

/**
 * Exact rational simplex for problems in the form
 *     maximize c.x  subject to  A x <= b,  x >= 0,
 * with b >= 0 so that the all-slack basis is feasible (no phase 1).
 * Bland's rule for anti-cycling; all arithmetic in cpp_rational.
 */
struct LpProblem {
    std::vector<std::vector<Rational>> a;  // m x n
    std::vector<Rational> b;               // m, all >= 0
    std::vector<Rational> c;               // n
};

struct LpSolution {
    enum class Status { optimal, unbounded };
    Status status = Status::optimal;
    Rational objective = 0;
    std::vector<Rational> x;
};

LpSolution solve_lp_max(const LpProblem& problem);

}  // namespace lefrees
