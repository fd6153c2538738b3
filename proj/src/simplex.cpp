#include "initforms/simplex.hpp"

#include "initforms/errors.hpp"

#include <cstddef>

namespace initforms {

FeasibilityResult equality_feasibility(const std::vector<std::vector<Rational>>& rows,
                                       const std::vector<Rational>& rhs) {
    const std::size_t m = rows.size();
    if (rhs.size() != m) throw Error("rhs length differs from row count");
    const std::size_t n = m == 0 ? 0 : rows[0].size();
    for (const auto& row : rows)
        if (row.size() != n) throw Error("ragged constraint matrix");

    // Tableau columns: n structural, m artificial, then the rhs. Rows are
    // normalized to rhs >= 0 so the artificial basis is feasible.
    const std::size_t cols = n + m + 1;
    std::vector<std::vector<Rational>> t(m, std::vector<Rational>(cols, Rational(0)));
    std::vector<int> flipped(m, 1);
    for (std::size_t i = 0; i < m; ++i) {
        int sign = rhs[i] < 0 ? -1 : 1;
        flipped[i] = sign;
        for (std::size_t j = 0; j < n; ++j) t[i][j] = rows[i][j] * sign;
        t[i][n + i] = 1;
        t[i][cols - 1] = rhs[i] * sign;
    }

    // Phase-1 objective: minimize the sum of artificials. Reduced-cost row
    // z[j] = c_j - sum of basic-cost-weighted column entries; artificial
    // basis has cost 1 everywhere.
    std::vector<Rational> z(cols, Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
        Rational s = 0;
        for (std::size_t i = 0; i < m; ++i) s += t[i][j];
        z[j] = -s;
    }
    // artificial columns start basic with reduced cost 0 (already zeroed)

    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    auto pivot = [&](std::size_t prow, std::size_t pcol) {
        Rational inv = 1 / t[prow][pcol];
        for (std::size_t j = 0; j < cols; ++j) t[prow][j] *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == prow || t[i][pcol] == 0) continue;
            Rational f = t[i][pcol];
            for (std::size_t j = 0; j < cols; ++j) t[i][j] -= f * t[prow][j];
        }
        if (z[pcol] != 0) {
            Rational f = z[pcol];
            for (std::size_t j = 0; j < cols; ++j) z[j] -= f * t[prow][j];
        }
        basis[prow] = pcol;
    };

    while (true) {
        // Bland: entering column = smallest index with negative reduced cost.
        std::size_t enter = cols;
        for (std::size_t j = 0; j < n + m; ++j) {
            if (z[j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter == cols) break;  // optimal

        // Ratio test; ties broken by smallest basic variable index (Bland).
        std::size_t leave = m;
        Rational best_ratio = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rational ratio = t[i][cols - 1] / t[i][enter];
            if (leave == m || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        // Phase-1 objective is bounded below by 0, so a column can never be
        // unbounded here; all entries <= 0 cannot happen with z[enter] < 0.
        if (leave == m) throw Error("unbounded phase-1 column");
        pivot(leave, enter);
    }

    // Phase-1 optimum: the artificial variables still in the basis carry the
    // whole objective.
    Rational objective = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] >= n) objective += t[i][cols - 1];

    FeasibilityResult res;
    if (objective == 0) {
        res.feasible = true;
        res.point.assign(n, Rational(0));
        for (std::size_t i = 0; i < m; ++i)
            if (basis[i] < n) res.point[basis[i]] = t[i][cols - 1];
        return res;
    }

    // Infeasible: the phase-1 dual y, read off the artificial columns via
    // y_i = 1 - zcost(artificial i), satisfies yA <= 0 and y.b = objective > 0.
    res.feasible = false;
    res.farkas.assign(m, Rational(0));
    for (std::size_t i = 0; i < m; ++i) res.farkas[i] = (1 - z[n + i]) * flipped[i];
    return res;
}

}  // namespace initforms
