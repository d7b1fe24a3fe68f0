#pragma once

// Dense tableau simplex over exact rationals, Bland's rule, so termination is
// guaranteed and results carry no rounding. Standard form only:
//
//     maximize c.y   subject to  A y <= b,  y >= 0,  b >= 0
//
// which is all the dual-norm computation needs (slack variables give an
// immediate feasible basis when b >= 0).

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace greedylab {

struct lp_result {
    rational value;
    std::vector<rational> solution;
    int pivots = 0;
};

inline lp_result simplex_maximize(const std::vector<std::vector<rational>>& a,
                                  const std::vector<rational>& b,
                                  const std::vector<rational>& c) {
    const std::size_t m = a.size();
    const std::size_t n = c.size();
    if (b.size() != m) throw std::invalid_argument("simplex: |b| != rows");
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("simplex: ragged constraint matrix");
    for (const auto& bi : b)
        if (bi < rational(0)) throw std::invalid_argument("simplex: requires b >= 0");

    const std::size_t cols = n + m + 1; // structural + slack + rhs
    std::vector<std::vector<rational>> t(m + 1, std::vector<rational>(cols, rational(0)));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
        t[i][n + i] = rational(1);
        t[i][cols - 1] = b[i];
    }
    for (std::size_t j = 0; j < n; ++j) t[m][j] = -c[j];

    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    int pivots = 0;
    for (;;) {
        // Bland: entering = lowest column with negative reduced cost.
        std::size_t enter = cols;
        for (std::size_t j = 0; j + 1 < cols; ++j) {
            if (t[m][j] < rational(0)) { enter = j; break; }
        }
        if (enter == cols) break; // optimal

        // Ratio test; ties broken by lowest basis variable (Bland).
        std::size_t leave = m;
        rational best(0);
        for (std::size_t i = 0; i < m; ++i) {
            if (!(rational(0) < t[i][enter])) continue;
            rational ratio = t[i][cols - 1] / t[i][enter];
            if (leave == m || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) throw std::logic_error("simplex: unbounded objective");

        rational piv = t[leave][enter];
        for (auto& v : t[leave]) v /= piv;
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == leave) continue;
            rational f = t[i][enter];
            if (f == rational(0)) continue;
            for (std::size_t j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
        }
        basis[leave] = enter;
        ++pivots;
    }

    lp_result out;
    out.pivots = pivots;
    out.value = t[m][cols - 1];
    out.solution.assign(n, rational(0));
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) out.solution[basis[i]] = t[i][cols - 1];
    return out;
}

} // namespace greedylab
