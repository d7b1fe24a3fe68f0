#pragma once

// Exact dual norm on the spreading-family space:
//
//     ||z||* = max { <z, y> : ||y|| <= 1 }
//
// The primal unit ball is cut out by |sum_{i in A} eps_i y_i| <= ... no: by
// sum_{i in A} |y_i| <= 1 for every family set A, so for z with nonnegative
// coordinates an optimal y can be taken coordinatewise nonnegative (flipping
// a sign never decreases <z, y> and keeps feasibility). That collapses the
// sign patterns: solve
//
//     max sum |z_i| y_i   s.t.  sum_{i in A} y_i <= 1 for maximal A,  y >= 0
//
// and recover the witness by re-applying sgn(z_i). Constraints from
// non-maximal family sets are pointwise implied (y >= 0), so only
// inclusion-maximal members enter the LP; the optimum is re-verified against
// the full family afterwards as a guard.

#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include "index_set.hpp"
#include "norms.hpp"
#include "rational.hpp"
#include "simplex.hpp"
#include "sparse_vector.hpp"

namespace greedylab {

// All family sets of the spreading space within [1, window]: for each level
// factorial f <= window, every nonempty A with |A| <= f and min A >= f.
inline std::vector<index_set> spreading_family_sets(int window) {
    std::vector<index_set> out;
    for (int f : spreading_levels(window)) {
        std::vector<int> pool;
        for (int i = f; i <= window; ++i) pool.push_back(i);
        const std::size_t p = pool.size();
        // subsets of pool with size in [1, f]
        for (unsigned long mask = 1; mask < (1ul << p); ++mask) {
            if (__builtin_popcountl(mask) > f) continue;
            std::vector<int> ids;
            for (std::size_t k = 0; k < p; ++k)
                if (mask & (1ul << k)) ids.push_back(pool[k]);
            out.push_back(index_set(ids));
        }
    }
    // dedupe across levels (a set can qualify at several levels)
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline std::vector<index_set> inclusion_maximal(const std::vector<index_set>& sets) {
    std::vector<index_set> out;
    for (const auto& a : sets) {
        bool dominated = false;
        for (const auto& b : sets) {
            if (a.size() < b.size() && a.intersect(b).size() == a.size()) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(a);
    }
    return out;
}

struct dual_norm_result {
    rational value;
    sparse_vector<rational> witness; // feasible y attaining <z, y> = value
    int lp_rows = 0;
    int pivots = 0;
};

inline dual_norm_result dual_norm_polyhedral(const spreading_engine<rational>& space,
                                            const sparse_vector<rational>& z) {
    const int n = space.structural_window();
    if (!z.empty() && z.support().max() > n)
        throw std::out_of_range("dual norm: support exceeds window");

    dual_norm_result res;
    if (z.empty()) return res;

    auto family = spreading_family_sets(n);
    auto maximal = inclusion_maximal(family);

    std::vector<std::vector<rational>> a;
    std::vector<rational> b, c(static_cast<std::size_t>(n), rational(0));
    for (const auto& s : maximal) {
        std::vector<rational> row(static_cast<std::size_t>(n), rational(0));
        for (int i : s) row[static_cast<std::size_t>(i - 1)] = rational(1);
        a.push_back(std::move(row));
        b.push_back(rational(1));
    }
    for (auto& [i, v] : z) c[static_cast<std::size_t>(i - 1)] = abs(v);

    lp_result lp = simplex_maximize(a, b, c);

    // Guard: the maximal-set reduction must leave the optimum feasible for
    // every family set.
    for (const auto& s : family) {
        rational sum(0);
        for (int i : s) sum += lp.solution[static_cast<std::size_t>(i - 1)];
        if (rational(1) < sum) throw std::logic_error("dual norm: reduced LP optimum infeasible");
    }

    res.value = lp.value;
    res.lp_rows = static_cast<int>(a.size());
    res.pivots = lp.pivots;
    std::vector<std::pair<int, rational>> entries;
    for (int i = 1; i <= n; ++i) {
        rational yi = lp.solution[static_cast<std::size_t>(i - 1)];
        if (yi == rational(0)) continue;
        if (z.coef(i).sgn() < 0) yi = -yi;
        entries.emplace_back(i, yi);
    }
    res.witness = sparse_vector<rational>(entries);
    return res;
}

} // namespace greedylab
