#pragma once

// Deterministic instance streams. Each stream interleaves layers round-robin:
// exhaustive structured layers first in each cycle (small signed indicators,
// coefficient grids, disjoint set pairs, window-edge pairs), then a seeded
// random layer that never runs dry. Same (window, seed) means the same
// sequence, element for element, in either arithmetic mode: every generated
// coefficient is dyadic (sign * mantissa/8 * 2^e with mantissa in {1,3,5,7}),
// so exact and float runs see the same numbers.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "constants.hpp"
#include "index_set.hpp"
#include "scalar.hpp"
#include "sign_pattern.hpp"
#include "sparse_vector.hpp"

namespace greedylab {

namespace detail {

// negatives on the 1st/3rd/5th... (phase 0) or 2nd/4th... (phase 1) elements
inline sign_pattern alternating_signs(const index_set& a, int phase) {
    std::vector<int> neg;
    int k = 0;
    for (int i : a) {
        if ((k & 1) == phase) neg.push_back(i);
        ++k;
    }
    return sign_pattern(index_set(neg));
}

inline sign_pattern sign_variant(const index_set& a, int variant) {
    if (variant == 0) return sign_pattern();
    return alternating_signs(a, variant - 1);
}

inline index_set random_subset(std::mt19937_64& rng, int window, int size) {
    std::vector<int> ids;
    while (static_cast<int>(ids.size()) < size) {
        int i = 1 + static_cast<int>(rng() % static_cast<unsigned long long>(window));
        if (std::find(ids.begin(), ids.end(), i) == ids.end()) ids.push_back(i);
    }
    return index_set(ids);
}

template <class R>
R dyadic_coef(std::mt19937_64& rng) {
    static const long mants[] = {1, 3, 5, 7};
    long mant = mants[rng() % 4];
    int e = static_cast<int>(rng() % 7); // 2^0 .. 2^6 over denominator 8
    long sign = (rng() & 1) ? 1 : -1;
    return scalar_ops<R>::from_ratio(sign * (mant << e), 8);
}

inline sign_pattern random_signs(std::mt19937_64& rng, const index_set& a) {
    std::vector<int> neg;
    for (int i : a)
        if (rng() & 1) neg.push_back(i);
    return sign_pattern(index_set(neg));
}

} // namespace detail

// --- vectors --------------------------------------------------------------------

template <class R>
class vector_stream {
public:
    vector_stream(int window, unsigned long long seed)
        : window_(window), rng_(seed ^ 0x9E3779B97F4A7C15ull) {
        if (window < 1) throw std::invalid_argument("vector_stream: window must be >= 1");
        int w0 = window < 12 ? window : 12;
        mask_end_ = (std::size_t(1) << w0) - 1;

        int glim = window < 16 ? window : 16;
        for (int len = 2; len <= 4; ++len)
            for (int k = 1; k + len - 1 <= glim; ++k)
                grid_supports_.push_back(index_set::interval(k, k + len - 1));
        for (auto scatter : {std::vector<int>{1, 2, 4, 8}, {1, 3, 6, 10}, {2, 5, 9, 12}}) {
            std::vector<int> in;
            for (int i : scatter)
                if (i <= window) in.push_back(i);
            if (in.size() >= 2) grid_supports_.push_back(index_set(in));
        }
    }

    // Never fails: the random layer is inexhaustible.
    sparse_vector<R> next() {
        for (;;) {
            int turn = turn_;
            turn_ = (turn_ + 1) % 3;
            if (turn == 0) {
                auto v = indicators_next();
                if (v) return *v;
            } else if (turn == 1) {
                auto v = grid_next();
                if (v) return *v;
            } else {
                return random_next();
            }
        }
    }

private:
    std::optional<sparse_vector<R>> indicators_next() {
        if (mask_ > mask_end_) return std::nullopt;
        std::vector<int> ids;
        for (int i = 0; i < 12; ++i)
            if (mask_ & (std::size_t(1) << i)) ids.push_back(i + 1);
        index_set a(ids);
        sparse_vector<R> v = signed_indicator(a, detail::sign_variant(a, variant_), R(1));
        if (++variant_ == 3) {
            variant_ = 0;
            ++mask_;
        }
        return v;
    }

    std::optional<sparse_vector<R>> grid_next() {
        static const std::pair<long, long> values[] = {
            {1, 1}, {-1, 1}, {1, 2}, {-1, 2}, {2, 1}, {-2, 1}};
        while (gs_ < grid_supports_.size()) {
            const index_set& s = grid_supports_[gs_];
            if (!odo_live_) {
                odo_.assign(s.size(), 0);
                odo_live_ = true;
            }
            std::vector<typename sparse_vector<R>::entry> es;
            std::size_t k = 0;
            for (int i : s) {
                auto [num, den] = values[odo_[k++]];
                es.emplace_back(i, scalar_ops<R>::from_ratio(num, den));
            }
            // advance odometer
            std::size_t d = 0;
            while (d < odo_.size() && ++odo_[d] == 6) {
                odo_[d] = 0;
                ++d;
            }
            if (d == odo_.size()) {
                odo_live_ = false;
                ++gs_;
            }
            return sparse_vector<R>(es);
        }
        return std::nullopt;
    }

    sparse_vector<R> random_next() {
        int smax = window_ < 8 ? window_ : 8;
        int s = 1 + static_cast<int>(rng_() % static_cast<unsigned long long>(smax));
        index_set supp = detail::random_subset(rng_, window_, s);
        std::vector<typename sparse_vector<R>::entry> es;
        for (int i : supp) es.emplace_back(i, detail::dyadic_coef<R>(rng_));
        return sparse_vector<R>(es);
    }

    int window_;
    std::mt19937_64 rng_;
    std::size_t mask_ = 1, mask_end_;
    int variant_ = 0;
    std::vector<index_set> grid_supports_;
    std::size_t gs_ = 0;
    std::vector<int> odo_;
    bool odo_live_ = false;
    int turn_ = 0;
};

template <class R>
std::vector<sparse_vector<R>> take_vectors(vector_stream<R>& s, std::size_t n) {
    std::vector<sparse_vector<R>> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(s.next());
    return out;
}

// --- sign-pattern comparison tuples ------------------------------------------------

template <class R>
class propA_stream {
public:
    propA_stream(int window, unsigned long long seed, bool with_growth_family = false)
        : window_(window), rng_(seed ^ 0xD1B54A32D192ED03ull) {
        if (window < 1) throw std::invalid_argument("propA_stream: window must be >= 1");

        // window-edge pairs: far-left against far-right blocks, both orders.
        // These pin down the extreme comparison ratios a window supports.
        std::vector<index_set> lows, highs;
        if (window >= 2) {
            lows = {index_set{1}, index_set::interval(1, std::min(2, window)),
                    index_set::interval(1, std::min(4, window))};
            highs = {index_set{window}};
            if (window >= 3) highs.push_back(index_set::interval(window - 1, window));
            if (window >= 5) highs.push_back(index_set::interval(window - 3, window));
            for (const auto& lo : lows)
                for (const auto& hi : highs) {
                    if (!lo.disjoint_with(hi)) continue;
                    edge_pairs_.emplace_back(lo, hi);
                    edge_pairs_.emplace_back(hi, lo);
                }
        }

        w1_ = window < 8 ? window : 8;
        if (with_growth_family)
            for (int n = 2; 4 * n <= window; n += 2) growth_ns_.push_back(n);
    }

    propA_instance<R> next() {
        for (;;) {
            int turn = turn_;
            turn_ = (turn_ + 1) % 4;
            if (turn == 0) {
                auto v = edge_next();
                if (v) return *v;
            } else if (turn == 1) {
                auto v = pairs_next();
                if (v) return *v;
            } else if (turn == 2) {
                auto v = growth_next();
                if (v) return *v;
            } else {
                return random_next();
            }
        }
    }

    // The two-block family whose comparison ratio grows linearly with n:
    // x = -1 on the odd indices of [2n+1, 4n-1], A = [n+1, 2n], B = the even
    // indices of [2n+2, 4n], t = 1.
    static propA_instance<R> growth_instance(int n) {
        propA_instance<R> inst;
        inst.a = index_set::interval(n + 1, 2 * n);
        std::vector<int> bs, xs;
        for (int i = 2 * n + 2; i <= 4 * n; i += 2) bs.push_back(i);
        for (int i = 2 * n + 1; i <= 4 * n - 1; i += 2) xs.push_back(i);
        inst.b = index_set(bs);
        std::vector<typename sparse_vector<R>::entry> es;
        for (int i : xs) es.emplace_back(i, scalar_ops<R>::from_int(-1));
        inst.x = sparse_vector<R>(es);
        inst.t = R(1);
        return inst;
    }

private:
    std::optional<propA_instance<R>> edge_next() {
        if (edge_idx_ >= edge_pairs_.size()) return std::nullopt;
        auto& [a, b] = edge_pairs_[edge_idx_];
        propA_instance<R> inst;
        inst.a = a;
        inst.b = b;
        inst.eps = detail::sign_variant(a, edge_variant_);
        inst.eta = detail::sign_variant(b, edge_variant_ == 0 ? 0 : 3 - edge_variant_);
        inst.t = R(1);
        if (++edge_variant_ == 3) {
            edge_variant_ = 0;
            ++edge_idx_;
        }
        return inst;
    }

    // all ordered pairs of disjoint nonempty subsets of [1, w1]
    std::optional<propA_instance<R>> pairs_next() {
        const std::size_t total = std::size_t(1) << w1_;
        while (pair_ma_ < total) {
            if (pair_mb_ == 0) {
                // start submask walk over the complement of ma
                pair_rest_ = (total - 1) & ~pair_ma_;
                pair_mb_ = pair_rest_;
                if (pair_mb_ == 0) {
                    ++pair_ma_;
                    continue;
                }
            }
            propA_instance<R> inst;
            inst.a = detail::set_of_mask(pair_ma_);
            inst.b = detail::set_of_mask(pair_mb_);
            inst.eps = detail::sign_variant(inst.a, pair_variant_);
            inst.eta = detail::sign_variant(inst.b, pair_variant_);
            inst.t = R(1);
            if (++pair_variant_ == 3) {
                pair_variant_ = 0;
                pair_mb_ = (pair_mb_ - 1) & pair_rest_;
                if (pair_mb_ == 0) ++pair_ma_;
            }
            return inst;
        }
        return std::nullopt;
    }

    std::optional<propA_instance<R>> growth_next() {
        if (growth_idx_ >= growth_ns_.size()) return std::nullopt;
        return growth_instance(growth_ns_[growth_idx_++]);
    }

    propA_instance<R> random_next() {
        static const int shapes[][3] = {{0, 1, 1}, {1, 1, 1}, {0, 1, 2}, {2, 2, 2},
                                        {1, 1, 4}, {0, 2, 3}, {2, 1, 1}, {3, 2, 2},
                                        {1, 1, 6}, {2, 3, 3}};
        const int* sh = shapes[shape_idx_];
        shape_idx_ = (shape_idx_ + 1) % 10;
        int sx = sh[0], sa = sh[1], sb = sh[2];
        int need = sx + sa + sb;
        if (need > window_) { sx = 0; sa = 1; sb = std::min(1, window_ - 1); need = sa + sb + sx; }

        index_set pool = detail::random_subset(rng_, window_, need);
        std::vector<int> ids = pool.indices();

        propA_instance<R> inst;
        int mode = mode_idx_;
        mode_idx_ = (mode_idx_ + 1) % 3;
        std::vector<int> as, bs, xs;
        if (mode == 0) { // A low block, B high block
            as.assign(ids.begin(), ids.begin() + sa);
            bs.assign(ids.end() - sb, ids.end());
            xs.assign(ids.begin() + sa, ids.begin() + sa + sx);
        } else if (mode == 1) { // B low, A high
            bs.assign(ids.begin(), ids.begin() + sb);
            as.assign(ids.end() - sa, ids.end());
            xs.assign(ids.begin() + sb, ids.begin() + sb + sx);
        } else { // interleaved by parity of position
            for (int k = 0; k < need; ++k) {
                if (static_cast<int>(as.size()) < sa && (k & 1) == 0) as.push_back(ids[k]);
                else if (static_cast<int>(bs.size()) < sb) bs.push_back(ids[k]);
                else if (static_cast<int>(xs.size()) < sx) xs.push_back(ids[k]);
                else as.push_back(ids[k]);
            }
        }
        inst.a = index_set(as);
        inst.b = index_set(bs);
        std::vector<typename sparse_vector<R>::entry> es;
        for (int i : xs) es.emplace_back(i, detail::dyadic_coef<R>(rng_));
        inst.x = sparse_vector<R>(es);
        inst.eps = detail::random_signs(rng_, inst.a);
        inst.eta = detail::random_signs(rng_, inst.b);
        if (inst.x.empty()) {
            static const std::pair<long, long> ts[] = {{1, 1}, {1, 2}, {2, 1}};
            inst.t = scalar_ops<R>::from_ratio(ts[t_idx_].first, ts[t_idx_].second);
            t_idx_ = (t_idx_ + 1) % 3;
        } else {
            inst.t = (rng_() & 1) ? inst.x.max_modulus()
                                  : inst.x.max_modulus() * scalar_ops<R>::from_int(2);
        }
        return inst;
    }

    int window_;
    std::mt19937_64 rng_;
    std::vector<std::pair<index_set, index_set>> edge_pairs_;
    std::size_t edge_idx_ = 0;
    int edge_variant_ = 0;
    int w1_;
    std::size_t pair_ma_ = 1, pair_mb_ = 0, pair_rest_ = 0;
    int pair_variant_ = 0;
    std::vector<int> growth_ns_;
    std::size_t growth_idx_ = 0;
    int shape_idx_ = 0, mode_idx_ = 0, t_idx_ = 0;
    int turn_ = 0;
};

// --- signed index sets ---------------------------------------------------------

template <class R>
class set_stream {
public:
    set_stream(int window, unsigned long long seed)
        : window_(window), rng_(seed ^ 0xA24BAED4963EE407ull) {
        if (window < 1) throw std::invalid_argument("set_stream: window must be >= 1");
        int w0 = window < 10 ? window : 10;
        mask_end_ = (std::size_t(1) << w0) - 1;
    }

    std::pair<index_set, sign_pattern> next() {
        if (mask_ <= mask_end_ && (turn_ = !turn_)) {
            std::vector<int> ids;
            for (int i = 0; i < 10; ++i)
                if (mask_ & (std::size_t(1) << i)) ids.push_back(i + 1);
            index_set a(ids);
            sign_pattern s = detail::sign_variant(a, variant_);
            if (++variant_ == 3) {
                variant_ = 0;
                ++mask_;
            }
            return {a, s};
        }
        int size = 1 + static_cast<int>(rng_() % static_cast<unsigned long long>(std::min(window_, 8)));
        index_set a = detail::random_subset(rng_, window_, size);
        return {a, detail::random_signs(rng_, a)};
    }

private:
    int window_;
    std::mt19937_64 rng_;
    std::size_t mask_ = 1, mask_end_;
    int variant_ = 0;
    bool turn_ = false;
};

} // namespace greedylab
