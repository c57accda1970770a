#include "lefrees/ratlp.hpp"

#include <stdexcept>

namespace lefrees {

LpSolution solve_lp_max(const LpProblem& problem) {
    const std::size_t m = problem.a.size();
    const std::size_t n = problem.c.size();
    for (const auto& row : problem.a)
        if (row.size() != n) throw std::invalid_argument("solve_lp_max: ragged constraint matrix");
    if (problem.b.size() != m) throw std::invalid_argument("solve_lp_max: b size mismatch");
    for (const Rational& v : problem.b)
        if (v < 0) throw std::invalid_argument("solve_lp_max: b must be nonnegative");

    // Tableau over structural + slack variables; row 0 is the objective.
    const std::size_t width = n + m + 1;
    std::vector<std::vector<Rational>> t(m + 1, std::vector<Rational>(width, 0));
    for (std::size_t j = 0; j < n; ++j) t[0][j] = -problem.c[j];
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) t[i + 1][j] = problem.a[i][j];
        t[i + 1][n + i] = 1;
        t[i + 1][width - 1] = problem.b[i];
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    const std::size_t iteration_cap = 2000000;
    for (std::size_t iter = 0;; ++iter) {
        if (iter >= iteration_cap)
            throw std::runtime_error("solve_lp_max: iteration cap exceeded");
        // Bland: entering variable = smallest index with negative cost row.
        std::size_t enter = width;
        for (std::size_t j = 0; j + 1 < width; ++j)
            if (t[0][j] < 0) {
                enter = j;
                break;
            }
        if (enter == width) break;  // optimal
        // Leaving row: minimum ratio; ties by smallest basis variable.
        std::size_t leave = 0;
        bool found = false;
        Rational best_ratio = 0;
        for (std::size_t i = 1; i <= m; ++i) {
            if (t[i][enter] <= 0) continue;
            const Rational ratio = t[i][width - 1] / t[i][enter];
            if (!found || ratio < best_ratio ||
                (ratio == best_ratio && basis[i - 1] < basis[leave - 1])) {
                found = true;
                best_ratio = ratio;
                leave = i;
            }
        }
        if (!found) {
            LpSolution sol;
            sol.status = LpSolution::Status::unbounded;
            return sol;
        }
        // Pivot.
        const Rational piv = t[leave][enter];
        for (Rational& v : t[leave]) v /= piv;
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            const Rational f = t[i][enter];
            for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
        }
        basis[leave - 1] = enter;
    }

    LpSolution sol;
    sol.status = LpSolution::Status::optimal;
    sol.objective = t[0][width - 1];
    sol.x.assign(n, 0);
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) sol.x[basis[i]] = t[i + 1][width - 1];
    return sol;
}

}  // namespace lefrees
