#pragma once

// Thresholding greedy machinery: the greedy ordering (largest modulus first,
// lowest index inside a tie), the m-term greedy set / approximant / residual,
// and enumeration of every tie-consistent greedy set.
//
// A "greedy set of size m" must contain every index whose modulus is strictly
// above the m-th largest and is completed from the tied level. The canonical
// choice takes the lowest tied indices; greedy_sets() lists all completions
// (capped, with an exact total so callers can tell when the cap bit).
//
// Float mode groups moduli with the tolerance knob, so near-equal magnitudes
// behave as honest ties instead of an arbitrary bit-level order.

#include <stdexcept>
#include <vector>

#include "index_set.hpp"
#include "scalar.hpp"
#include "sparse_vector.hpp"

namespace greedylab {

// Support indices grouped by modulus, groups in descending modulus order,
// each group ascending by index. Adjacent-equal chaining keeps the float
// grouping deterministic.
template <class R>
std::vector<std::vector<int>> modulus_groups(const sparse_vector<R>& x, double tol = default_tol_eq) {
    std::vector<std::pair<R, int>> items;
    for (auto& [i, c] : x) items.emplace_back(scalar_ops<R>::abs(c), i);
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return b.first < a.first;
        return a.second < b.second;
    });
    std::vector<std::vector<int>> groups;
    for (std::size_t k = 0; k < items.size(); ++k) {
        if (k == 0 || !scalar_ops<R>::eq(items[k].first, items[k - 1].first, tol))
            groups.emplace_back();
        groups.back().push_back(items[k].second);
    }
    for (auto& g : groups) std::sort(g.begin(), g.end());
    return groups;
}

// Full greedy ordering rho: modulus descending, index ascending within ties.
template <class R>
std::vector<int> greedy_order(const sparse_vector<R>& x, double tol = default_tol_eq) {
    std::vector<int> out;
    for (auto& g : modulus_groups(x, tol))
        for (int i : g) out.push_back(i);
    return out;
}

template <class R>
struct greedy_run {
    index_set lambda;            // greedy set Lambda_m
    int alpha = 0;               // min Lambda_m
    int beta = 0;                // max Lambda_m
    sparse_vector<R> approximant; // G_m(x) = P_Lambda x
    sparse_vector<R> residual;    // x - G_m(x)
};

template <class R>
greedy_run<R> run_from_set(const sparse_vector<R>& x, const index_set& lambda) {
    greedy_run<R> r;
    r.lambda = lambda;
    r.alpha = lambda.min();
    r.beta = lambda.max();
    r.approximant = project(x, lambda);
    r.residual = sub(x, r.approximant);
    return r;
}

// Canonical m-term greedy step (lowest-index tie policy).
template <class R>
greedy_run<R> greedy_step(const sparse_vector<R>& x, int m, double tol = default_tol_eq) {
    if (m < 1) throw std::invalid_argument("greedy_step: m must be >= 1");
    if (static_cast<std::size_t>(m) > x.support_size())
        throw std::invalid_argument("greedy_step: m exceeds support size");
    std::vector<int> order = greedy_order(x, tol);
    return run_from_set(x, index_set(std::vector<int>(order.begin(), order.begin() + m)));
}

inline unsigned long long binomial_clamped(std::size_t n, std::size_t k,
                                           unsigned long long clamp_at = 1ull << 62) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned long long r = 1;
    for (std::size_t j = 1; j <= k; ++j) {
        if (r > clamp_at / (n - k + j)) return clamp_at;
        r = r * (n - k + j) / j;
        if (r >= clamp_at) return clamp_at;
    }
    return r;
}

struct greedy_choice_set {
    std::vector<index_set> lambdas; // every tie-consistent greedy set, or the first `cap`
    bool complete = true;
    unsigned long long total = 0;   // exact count (clamped at 2^62)
};

// All greedy sets of size m: the strictly-above-threshold block plus each
// k-subset of the tied level, in lexicographic order of the tied indices.
template <class R>
greedy_choice_set greedy_sets(const sparse_vector<R>& x, int m, std::size_t cap = 64,
                              double tol = default_tol_eq) {
    if (m < 1) throw std::invalid_argument("greedy_sets: m must be >= 1");
    if (static_cast<std::size_t>(m) > x.support_size())
        throw std::invalid_argument("greedy_sets: m exceeds support size");

    auto groups = modulus_groups(x, tol);
    std::vector<int> mandatory;
    std::size_t g = 0;
    while (g < groups.size() &&
           mandatory.size() + groups[g].size() <= static_cast<std::size_t>(m)) {
        for (int i : groups[g]) mandatory.push_back(i);
        ++g;
        if (mandatory.size() == static_cast<std::size_t>(m)) break;
    }

    greedy_choice_set out;
    if (mandatory.size() == static_cast<std::size_t>(m)) {
        out.lambdas.push_back(index_set(mandatory));
        out.total = 1;
        return out;
    }

    const std::vector<int>& tied = groups[g];
    std::size_t k = static_cast<std::size_t>(m) - mandatory.size();
    out.total = binomial_clamped(tied.size(), k);

    // lexicographic k-combinations of `tied`
    std::vector<std::size_t> pick(k);
    for (std::size_t j = 0; j < k; ++j) pick[j] = j;
    for (;;) {
        if (out.lambdas.size() >= cap) {
            out.complete = false;
            break;
        }
        std::vector<int> ids = mandatory;
        for (std::size_t j : pick) ids.push_back(tied[j]);
        out.lambdas.push_back(index_set(ids));

        // advance
        std::size_t j = k;
        while (j > 0) {
            --j;
            if (pick[j] + (k - j) < tied.size()) {
                ++pick[j];
                for (std::size_t t = j + 1; t < k; ++t) pick[t] = pick[t - 1] + 1;
                break;
            }
            if (j == 0) { j = k + 1; break; }
        }
        if (j == k + 1 || k == 0) break;
    }
    if (k == 0) out.total = 1;
    return out;
}

// Coordinatewise truncation T_lambda: caps each modulus at lambda, keeping
// signs. Zero or negative level would erase signs, so it is rejected.
template <class R>
sparse_vector<R> truncate(const sparse_vector<R>& x, const R& level) {
    if (!(R(0) < level)) throw std::domain_error("truncate: level must be > 0");
    std::vector<typename sparse_vector<R>::entry> out;
    out.reserve(x.support_size());
    for (auto& [i, c] : x) {
        if (scalar_ops<R>::abs(c) <= level) out.emplace_back(i, c);
        else out.emplace_back(i, c < R(0) ? -level : level);
    }
    return sparse_vector<R>(std::move(out));
}

} // namespace greedylab
