#pragma once

// Constant estimators. Two honesty levels, and every estimate says which one
// it carries:
//
//   window_exact         exact supremum over an exhaustively enumerated finite
//                        window (set-pair constants, structural facts)
//   witness_lower_bound  best ratio seen over sampled vectors; a certified
//                        lower bound of a constant quantified over all x
//
// Claim coefficients built from witness lower bounds are flagged downstream:
// an inequality verified against an underestimated constant proves less.
//
// Also here: the one-sided projection errors ("sigma tilde") that partially
// greedy bounds compare against, computed by exhaustive weighted-subset search
// left of alpha_m / right of beta_m.

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "index_set.hpp"
#include "norms.hpp"
#include "rational.hpp"
#include "scalar.hpp"
#include "sign_pattern.hpp"
#include "sparse_vector.hpp"
#include "tga.hpp"
#include "weights.hpp"

namespace greedylab {

enum class bound_kind { window_exact, witness_lower_bound };

inline const char* to_string(bound_kind k) {
    return k == bound_kind::window_exact ? "window_exact" : "witness_lower_bound";
}

template <class R>
struct constant_estimate {
    std::string name;
    R value{0};
    bound_kind kind = bound_kind::witness_lower_bound;
    int window = 0; // examined index window; 0 when structural / not applicable
    nlohmann::ordered_json witness; // structured, string-valued, replayable
    unsigned long long seed = 0;
};

// --- one-sided projection errors ---------------------------------------------

template <class R>
struct sigma_result {
    R value{0};
    index_set best_set;   // minimizing A
    greedy_run<R> run;    // the canonical greedy step the side is relative to
    long sets_examined = 0;
};

namespace detail {

// min ||x - P_A x|| over A subseteq candidates with w(A) <= budget.
// Candidates are walked lightest-first: once the running weight plus the next
// candidate over-runs the budget, no heavier candidate fits either, so the
// node closes as a leaf.
template <class R>
void sigma_search(const norm_engine<R>& space, const weight_sequence& w,
                  const sparse_vector<R>& x,
                  const std::vector<int>& cands, const rational& budget,
                  sigma_result<R>& out) {
    std::vector<int> chosen;
    std::function<void(std::size_t, rational)> walk = [&](std::size_t i, rational wsum) {
        if (i == cands.size() || wsum + w.at(cands[i]) > budget) {
            index_set a(chosen);
            R err = space.norm(sub(x, project(x, a)));
            ++out.sets_examined;
            if (out.sets_examined == 1 || err < out.value) {
                out.value = err;
                out.best_set = a;
            }
            return;
        }
        walk(i + 1, wsum); // exclude cands[i]
        chosen.push_back(cands[i]);
        walk(i + 1, wsum + w.at(cands[i]));
        chosen.pop_back();
    };
    walk(0, rational(0));
}

template <class R>
sigma_result<R> sigma_sided(const norm_engine<R>& space, const weight_sequence& w,
                            const sparse_vector<R>& x, int m, bool left,
                            double tol) {
    sigma_result<R> out;
    out.run = greedy_step(x, m, tol);
    rational budget = w.weight_of(out.run.lambda);

    std::vector<int> cands;
    for (auto& [i, c] : x) {
        if (left ? i < out.run.alpha : i > out.run.beta) cands.push_back(i);
    }
    if (cands.size() > 24)
        throw std::invalid_argument("sigma: admissible index pool too large for exhaustive search");
    std::sort(cands.begin(), cands.end(), [&](int a, int b) {
        rational wa = w.at(a), wb = w.at(b);
        if (wa != wb) return wa < wb;
        return a < b;
    });
    detail::sigma_search(space, w, x, cands, budget, out);
    return out;
}

} // namespace detail

// sigma-tilde over sets strictly left of alpha_m, weight budget w(Lambda_m).
// The empty set is always admissible, so the value is <= ||x||.
template <class R>
sigma_result<R> sigma_left(const norm_engine<R>& space, const weight_sequence& w,
                           const sparse_vector<R>& x, int m, double tol = default_tol_eq) {
    return detail::sigma_sided(space, w, x, m, true, tol);
}

// Mirror image: sets strictly right of beta_m.
template <class R>
sigma_result<R> sigma_right(const norm_engine<R>& space, const weight_sequence& w,
                            const sparse_vector<R>& x, int m, double tol = default_tol_eq) {
    return detail::sigma_sided(space, w, x, m, false, tol);
}

// --- set-pair constants (exact over a window) ----------------------------------

enum class pair_relation { any, left_of, right_of, disjoint };

inline const char* to_string(pair_relation r) {
    switch (r) {
        case pair_relation::any: return "any";
        case pair_relation::left_of: return "left_of";
        case pair_relation::right_of: return "right_of";
        case pair_relation::disjoint: return "disjoint";
    }
    return "?";
}

namespace detail {

template <class R>
struct mask_tables {
    std::vector<R> norm;        // ||1_A|| by bitmask over [1, n]
    std::vector<rational> wt;   // w(A) by bitmask
};

template <class R>
mask_tables<R> build_mask_tables(const norm_engine<R>& space, const weight_sequence& w, int n) {
    mask_tables<R> t;
    const std::size_t total = std::size_t(1) << n;
    t.norm.resize(total, R(0));
    t.wt.resize(total, rational(0));
    for (std::size_t mask = 1; mask < total; ++mask) {
        std::size_t low = mask & (~mask + 1);
        int idx = __builtin_ctzl(mask) + 1;
        t.wt[mask] = t.wt[mask ^ low] + w.at(idx);
        std::vector<int> ids;
        for (int i = 0; i < n; ++i)
            if (mask & (std::size_t(1) << i)) ids.push_back(i + 1);
        t.norm[mask] = space.norm(indicator<R>(index_set(ids)));
    }
    return t;
}

inline index_set set_of_mask(std::size_t mask) {
    std::vector<int> ids;
    for (int i = 0; mask; ++i, mask >>= 1)
        if (mask & 1) ids.push_back(i + 1);
    return index_set(ids);
}

} // namespace detail

// sup ||1_A|| / ||1_B|| over nonempty A, B within [1, window] subject to
// w(A) <= w(B) and the positional relation (A left of B, B left of A,
// disjointness, or none). Exhaustive, so the result is window-exact.
template <class R>
constant_estimate<R> set_pair_constant(const norm_engine<R>& space, const weight_sequence& w,
                                       pair_relation rel, int window,
                                       const std::string& name,
                                       bool equal_size_only = false) {
    int n = effective_window(space, window);
    if (n < 1 || n > 16)
        throw std::invalid_argument("set_pair_constant: window must lie in [1, 16]");
    auto tables = detail::build_mask_tables(space, w, n);
    const std::size_t total = std::size_t(1) << n;

    constant_estimate<R> out;
    out.name = name;
    out.kind = bound_kind::window_exact;
    out.window = n;

    std::size_t best_a = 0, best_b = 0;
    bool have = false;
    auto consider = [&](std::size_t ma, std::size_t mb) {
        if (equal_size_only && __builtin_popcountl(ma) != __builtin_popcountl(mb)) return;
        if (tables.wt[mb] < tables.wt[ma]) return;
        if (!have || out.value * tables.norm[mb] < tables.norm[ma]) {
            out.value = tables.norm[ma] / tables.norm[mb];
            best_a = ma;
            best_b = mb;
            have = true;
        }
    };

    if (rel == pair_relation::disjoint) {
        for (std::size_t ma = 1; ma < total; ++ma) {
            std::size_t rest = (total - 1) & ~ma;
            for (std::size_t mb = rest; mb; mb = (mb - 1) & rest) consider(ma, mb);
        }
    } else if (rel == pair_relation::any) {
        for (std::size_t ma = 1; ma < total; ++ma)
            for (std::size_t mb = 1; mb < total; ++mb) consider(ma, mb);
    } else {
        // strict order: every bit of the left mask below every bit of the right
        for (std::size_t ma = 1; ma < total; ++ma) {
            int hi = 64 - __builtin_clzl(ma); // 1-based index of max element
            if (hi >= n) continue;
            std::size_t rest = (total - 1) & ~((std::size_t(1) << hi) - 1);
            for (std::size_t mb = rest; mb; mb = (mb - 1) & rest) {
                if (rel == pair_relation::left_of) consider(ma, mb);
                else consider(mb, ma);
            }
        }
    }

    if (!have) {
        // the weight condition admits no pair on this window (e.g. geometric
        // weights where every right tail is lighter than any single element):
        // the comparison holds vacuously, any constant works, report 1
        out.value = R(1);
        out.kind = bound_kind::window_exact;
        out.witness["note"] = "vacuous: no admissible pair on this window";
        return out;
    }
    out.witness["A"] = detail::set_of_mask(best_a).str();
    out.witness["B"] = detail::set_of_mask(best_b).str();
    out.witness["norm_A"] = scalar_ops<R>::str(tables.norm[best_a]);
    out.witness["norm_B"] = scalar_ops<R>::str(tables.norm[best_b]);
    return out;
}

// --- sign-pattern comparison instances (Property (A) style) ---------------------

template <class R>
struct propA_instance {
    sparse_vector<R> x;
    index_set a, b;
    sign_pattern eps, eta;
    R t{0};
};

enum class propA_variant { full, left, right };

inline const char* to_string(propA_variant v) {
    switch (v) {
        case propA_variant::full: return "full";
        case propA_variant::left: return "left";
        case propA_variant::right: return "right";
    }
    return "?";
}

// Hypotheses shared by all variants: t >= max |x_i|, t > 0, supports of the
// comparison blocks avoid supp(x), w(A) <= w(B). Variant adds the position of
// A against B.
template <class R>
bool propA_valid(const weight_sequence& w, propA_variant variant,
                 const propA_instance<R>& inst) {
    if (!(R(0) < inst.t)) return false;
    if (inst.t < inst.x.max_modulus()) return false;
    index_set both = inst.a.unite(inst.b);
    if (!inst.x.support().disjoint_with(both)) return false;
    if (w.weight_of(inst.b) < w.weight_of(inst.a)) return false;
    if (variant == propA_variant::left && !inst.a.strictly_left_of(inst.b)) return false;
    if (variant == propA_variant::right && !inst.b.strictly_left_of(inst.a)) return false;
    if (inst.x.empty() && inst.b.empty()) return false; // degenerate 0/0
    return true;
}

template <class R>
std::pair<R, R> propA_sides(const norm_engine<R>& space, const propA_instance<R>& inst) {
    sparse_vector<R> lhs = inst.a.empty()
        ? inst.x
        : add(inst.x, signed_indicator(inst.a, inst.eps, inst.t));
    sparse_vector<R> rhs = inst.b.empty()
        ? inst.x
        : add(inst.x, signed_indicator(inst.b, inst.eta, inst.t));
    return {space.norm(lhs), space.norm(rhs)};
}

struct instance_stats {
    long valid = 0;
    long rejected = 0;
};

template <class R>
nlohmann::ordered_json propA_witness_json(const propA_instance<R>& inst) {
    nlohmann::ordered_json j;
    j["x"] = inst.x.encode();
    j["A"] = inst.a.str();
    j["B"] = inst.b.str();
    j["eps_neg"] = inst.eps.negatives().str();
    j["eta_neg"] = inst.eta.negatives().str();
    j["t"] = scalar_ops<R>::str(inst.t);
    return j;
}

// Best ratio ||x + t 1_{eps A}|| / ||x + t 1_{eta B}|| over the supplied
// instances; invalid instances are counted and skipped.
template <class R>
constant_estimate<R> property_A_lower_bound(const norm_engine<R>& space, const weight_sequence& w,
                                            propA_variant variant,
                                            const std::vector<propA_instance<R>>& instances,
                                            const std::string& name,
                                            instance_stats* stats = nullptr) {
    constant_estimate<R> out;
    out.name = name;
    out.kind = bound_kind::witness_lower_bound;
    bool have = false;
    for (const auto& inst : instances) {
        if (!propA_valid(w, variant, inst)) {
            if (stats) ++stats->rejected;
            continue;
        }
        auto [lhs, rhs] = propA_sides(space, inst);
        if (stats) ++stats->valid;
        if (!(R(0) < rhs)) continue; // x = 0 with B empty is filtered; guard anyway
        if (!have || out.value * rhs < lhs) {
            out.value = lhs / rhs;
            out.witness = propA_witness_json(inst);
            have = true;
        }
    }
    if (!have) out.value = R(0);
    return out;
}

// --- vector-quantified constants (witness lower bounds) --------------------------

// sup ||P_Lambda x|| / ||x|| over vectors, every m, every tie-consistent
// greedy set (capped per (x, m); skipped completions are tallied).
template <class R>
constant_estimate<R> quasi_greedy_lower_bound(const norm_engine<R>& space,
                                              const std::vector<sparse_vector<R>>& xs,
                                              std::size_t choice_cap = 64,
                                              double tol = default_tol_eq,
                                              unsigned long long* choices_skipped = nullptr) {
    constant_estimate<R> out;
    out.name = "quasi_greedy";
    out.kind = bound_kind::witness_lower_bound;
    bool have = false;
    for (const auto& x : xs) {
        if (x.empty()) continue;
        R nx = space.norm(x);
        if (!(R(0) < nx)) continue;
        for (int m = 1; m <= static_cast<int>(x.support_size()); ++m) {
            auto choices = greedy_sets(x, m, choice_cap, tol);
            if (!choices.complete && choices_skipped)
                *choices_skipped += choices.total - choices.lambdas.size();
            for (const auto& lam : choices.lambdas) {
                R ng = space.norm(project(x, lam));
                if (!have || out.value * nx < ng) {
                    out.value = ng / nx;
                    out.witness["x"] = x.encode();
                    out.witness["m"] = std::to_string(m);
                    out.witness["lambda"] = lam.str();
                    have = true;
                }
            }
        }
    }
    return out;
}

// sup ||x - G_m x|| / sigma_side(x, m) over vectors and m, canonical greedy
// step. A zero denominator can only happen with a zero residual; that pair is
// skipped (0/0 carries no information).
template <class R>
constant_estimate<R> partially_greedy_lower_bound(const norm_engine<R>& space,
                                                  const weight_sequence& w, bool left,
                                                  const std::vector<sparse_vector<R>>& xs,
                                                  double tol = default_tol_eq) {
    constant_estimate<R> out;
    out.name = left ? "partially_greedy_left" : "partially_greedy_right";
    out.kind = bound_kind::witness_lower_bound;
    bool have = false;
    for (const auto& x : xs) {
        for (int m = 1; m <= static_cast<int>(x.support_size()); ++m) {
            auto sig = left ? sigma_left(space, w, x, m, tol) : sigma_right(space, w, x, m, tol);
            R resid = space.norm(sig.run.residual);
            if (!(R(0) < sig.value)) {
                if (R(0) < resid)
                    throw std::logic_error("sigma vanished under a nonzero residual");
                continue;
            }
            if (!have || out.value * sig.value < resid) {
                out.value = resid / sig.value;
                out.witness["x"] = x.encode();
                out.witness["m"] = std::to_string(m);
                out.witness["sigma_set"] = sig.best_set.str();
                have = true;
            }
        }
    }
    return out;
}

// Basis constant sup_N ||P_{[1,N]} x|| / ||x||. For a 1-unconditional norm
// dropping coordinates cannot increase the norm, so the constant is exactly 1.
// Otherwise: exhaustive {-1,0,1} coefficient grid over the window, then a
// deterministic halve/double refinement around the best grid point.
template <class R>
constant_estimate<R> basis_constant(const norm_engine<R>& space, int window = 10,
                                    double tol = default_tol_eq) {
    constant_estimate<R> out;
    out.name = "basis";
    if (space.one_unconditional()) {
        out.value = R(1);
        out.kind = bound_kind::window_exact;
        out.witness["note"] = "one-unconditional: coordinate projections are contractions";
        return out;
    }
    int n = effective_window(space, window);
    if (n > 12) n = 12;
    out.kind = bound_kind::witness_lower_bound;
    out.window = n;

    sparse_vector<R> best_x;
    int best_prefix = 0;
    bool have = false;
    auto consider = [&](const sparse_vector<R>& x) {
        if (x.empty()) return;
        R nx = space.norm(x);
        if (!(R(0) < nx)) return;
        for (int p = 1; p <= x.support().max(); ++p) {
            R np = space.norm(project(x, index_set::interval(1, p)));
            if (!have || out.value * nx < np) {
                out.value = np / nx;
                best_x = x;
                best_prefix = p;
                have = true;
            }
        }
    };

    std::vector<typename sparse_vector<R>::entry> cur;
    std::function<void(int)> grid = [&](int i) {
        if (i > n) {
            consider(sparse_vector<R>(cur));
            return;
        }
        grid(i + 1);
        for (int s : {1, -1}) {
            cur.emplace_back(i, scalar_ops<R>::from_int(s));
            grid(i + 1);
            cur.pop_back();
        }
    };
    grid(1);

    // local refinement: halve/double one coordinate at a time while it helps
    if (have) {
        for (int round = 0; round < 3; ++round) {
            sparse_vector<R> base = best_x;
            for (auto& [i, c] : base) {
                for (long num : {1L, 4L}) {
                    sparse_vector<R> cand = base.with_coef(i, c * scalar_ops<R>::from_ratio(num, 2));
                    consider(cand);
                }
            }
        }
    }
    if (have) {
        out.witness["x"] = best_x.encode();
        out.witness["prefix"] = std::to_string(best_prefix);
    }
    return out;
}

} // namespace greedylab
