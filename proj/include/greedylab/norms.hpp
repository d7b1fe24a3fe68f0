#pragma once

// Norm engines. Each engine is a sequence-space norm on finitely supported
// vectors together with the structural facts claim checks key on
// (1-unconditionality, whether the basis vectors have norm one, structural
// index cap). Four families ship; a registry hook accepts user specs.
//
//   lp           ||x|| = (sum |x_i|^p)^(1/p), p in [1, inf]
//   modular      ||x|| = inf{ l > 0 : sum (|x_i|/l)^{p_i} <= 1 }, p_i strictly
//                increasing naturals; float mode only (the infimum is
//                typically irrational, e.g. (1+sqrt5)/2 for e_1+e_2, p=(1,2))
//   spreading    ||x|| = max over family sets A of sum_{i in A} |x_i| where A
//                ranges over { |A| <= n!, min A >= n! } within a window [1,N]
//   partial_sum  ||x|| = max_N |sum_{i<=N} a_i x_i|, a = (1,1,2,2,3,3,...);
//                not 1-unconditional and ||e_k|| = a_k, so not normalized
//
// Exact mode refuses engines whose values are irrational (modular, lp with
// p not in {1, inf}).

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "scalar.hpp"
#include "sparse_vector.hpp"

namespace greedylab {

template <class R>
class norm_engine {
public:
    virtual ~norm_engine() = default;

    virtual R norm(const sparse_vector<R>& x) const = 0;
    virtual std::string name() const = 0;
    // Structural max index; 0 means unbounded.
    virtual int structural_window() const = 0;
    virtual bool one_unconditional() const = 0;
    virtual bool normalized_basis() const = 0;
};

template <class R>
int effective_window(const norm_engine<R>& e, int requested) {
    int s = e.structural_window();
    if (s == 0) return requested;
    return std::min(s, requested);
}

// --- lp ---------------------------------------------------------------------

template <class R>
class lp_engine final : public norm_engine<R> {
public:
    // p_num/p_den > 0 encodes finite p >= 1; is_inf overrides.
    lp_engine(rational p, bool is_inf) : p_(std::move(p)), inf_(is_inf) {
        if (!inf_ && p_ < rational(1))
            throw std::invalid_argument("lp: p must satisfy p >= 1");
        if constexpr (scalar_ops<R>::exact) {
            if (!inf_ && p_ != rational(1))
                throw std::invalid_argument("lp: exact mode supports p in {1, inf} only");
        }
    }

    R norm(const sparse_vector<R>& x) const override {
        if (x.empty()) return R(0);
        if (inf_) return x.max_modulus();
        if (p_ == rational(1)) {
            R s(0);
            for (auto& [i, c] : x) s += scalar_ops<R>::abs(c);
            return s;
        }
        if constexpr (!scalar_ops<R>::exact) {
            if (p_ == rational(2)) {
                // plain square/sqrt so independent recomputations agree bitwise
                double s = 0;
                for (auto& [i, c] : x) s += c * c;
                return std::sqrt(s);
            }
            double p = p_.to_double();
            double s = 0;
            for (auto& [i, c] : x) s += std::pow(std::fabs(c), p);
            return std::pow(s, 1.0 / p);
        } else {
            throw std::logic_error("lp: unreachable exact branch");
        }
    }

    std::string name() const override { return inf_ ? "lp:inf" : "lp:" + p_.str(); }
    int structural_window() const override { return 0; }
    bool one_unconditional() const override { return true; }
    bool normalized_basis() const override { return true; }

private:
    rational p_;
    bool inf_;
};

// --- modular ------------------------------------------------------------------

class modular_engine final : public norm_engine<double> {
public:
    explicit modular_engine(std::vector<int> exponents, double tol = default_tol_modular)
        : ps_(std::move(exponents)), tol_(tol) {
        if (ps_.empty()) throw std::invalid_argument("modular: empty exponent list");
        for (std::size_t k = 0; k < ps_.size(); ++k) {
            if (ps_[k] < 1) throw std::invalid_argument("modular: exponents are naturals >= 1");
            if (k && ps_[k] <= ps_[k - 1])
                throw std::invalid_argument("modular: exponents must be strictly increasing");
        }
    }

    // Bisection with provable brackets.  Let M = max |x_i|, s = |supp x|.
    //   g(M)   >= 1  since the maximal term alone contributes 1;
    //   g(M*s) <= 1  since each term is <= (1/s)^{p_i} <= 1/s.
    // g is continuous and nonincreasing, so we shrink hi until
    // g(hi) lands in [1 - 10*tol, 1].
    double norm(const sparse_vector<double>& x) const override {
        if (x.empty()) return 0.0;
        if (x.support().max() > static_cast<int>(ps_.size()))
            throw std::out_of_range("modular: support exceeds exponent list");
        double m = x.max_modulus();
        if (x.support_size() == 1) return m;
        double lo = m;
        double hi = m * static_cast<double>(x.support_size());
        if (g(x, lo) <= 1.0) return lo;
        for (int iter = 0; iter < 200; ++iter) {
            if (g(x, hi) >= 1.0 - 10.0 * tol_) break;
            double mid = 0.5 * (lo + hi);
            if (g(x, mid) <= 1.0) hi = mid;
            else lo = mid;
        }
        return hi;
    }

    double modular_sum(const sparse_vector<double>& x, double lambda) const { return g(x, lambda); }

    std::string name() const override {
        std::string s = "modular:p=";
        for (std::size_t k = 0; k < ps_.size(); ++k) {
            if (k) s += ",";
            s += std::to_string(ps_[k]);
        }
        return s;
    }
    int structural_window() const override { return static_cast<int>(ps_.size()); }
    bool one_unconditional() const override { return true; }
    bool normalized_basis() const override { return true; }

private:
    double g(const sparse_vector<double>& x, double lambda) const {
        double s = 0;
        for (auto& [i, c] : x) s += std::pow(std::fabs(c) / lambda, static_cast<double>(ps_[i - 1]));
        return s;
    }

    std::vector<int> ps_;
    double tol_;
};

// --- spreading family ---------------------------------------------------------

inline std::vector<int> spreading_levels(int window) {
    std::vector<int> fs;
    long f = 1;
    for (int n = 1; f <= window; ++n) {
        fs.push_back(static_cast<int>(f));
        f *= (n + 1);
    }
    return fs;
}

template <class R>
class spreading_engine final : public norm_engine<R> {
public:
    explicit spreading_engine(int window) : n_(window), levels_(spreading_levels(window)) {
        if (window < 1) throw std::invalid_argument("spreading: window must be >= 1");
    }

    // Per level with factorial f: the best set is the top-f moduli among
    // indices >= f, so the norm is a max of top-k partial sums.
    R norm(const sparse_vector<R>& x) const override {
        if (x.empty()) return R(0);
        if (x.support().max() > n_)
            throw std::out_of_range("spreading: support exceeds window");
        R best(0);
        std::vector<R> mods;
        for (int f : levels_) {
            mods.clear();
            for (auto& [i, c] : x)
                if (i >= f) mods.push_back(scalar_ops<R>::abs(c));
            if (mods.empty()) continue;
            std::sort(mods.begin(), mods.end(), [](const R& a, const R& b) { return b < a; });
            R s(0);
            std::size_t take = std::min<std::size_t>(mods.size(), static_cast<std::size_t>(f));
            for (std::size_t k = 0; k < take; ++k) s += mods[k];
            if (best < s) best = s;
        }
        return best;
    }

    const std::vector<int>& levels() const { return levels_; }

    std::string name() const override { return "spreading:N=" + std::to_string(n_); }
    int structural_window() const override { return n_; }
    bool one_unconditional() const override { return true; }
    bool normalized_basis() const override { return true; }

private:
    int n_;
    std::vector<int> levels_;
};

// --- partial-sum space ----------------------------------------------------------

inline long partial_sum_coefficient(int i) { return (i + 1) / 2; }

template <class R>
class partial_sum_engine final : public norm_engine<R> {
public:
    partial_sum_engine() = default;

    // Partial sums change only at support points; the sup over all prefixes
    // is the max |S| right after each support index.
    R norm(const sparse_vector<R>& x) const override {
        R s(0), best(0);
        for (auto& [i, c] : x) {
            s += c * scalar_ops<R>::from_int(partial_sum_coefficient(i));
            R a = scalar_ops<R>::abs(s);
            if (best < a) best = a;
        }
        return best;
    }

    std::string name() const override { return "partial_sum"; }
    int structural_window() const override { return 0; }
    bool one_unconditional() const override { return false; }
    bool normalized_basis() const override { return false; }
};

// --- factory + registry ---------------------------------------------------------

template <class R>
using engine_maker = std::function<std::unique_ptr<norm_engine<R>>(const nlohmann::json&)>;

template <class R>
std::map<std::string, engine_maker<R>>& engine_registry() {
    static std::map<std::string, engine_maker<R>> reg;
    return reg;
}

template <class R>
void register_engine(const std::string& space, engine_maker<R> maker) {
    engine_registry<R>()[space] = std::move(maker);
}

inline long factorial_of(int n) {
    long f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

template <class R>
std::unique_ptr<norm_engine<R>> make_engine(const nlohmann::json& spec) {
    if (!spec.is_object() || !spec.contains("space"))
        throw std::invalid_argument("space spec: expected {\"space\": ...}");
    std::string space = spec.at("space").get<std::string>();

    if (space == "lp") {
        const auto& p = spec.at("p");
        if (p.is_string()) {
            std::string ps = p.get<std::string>();
            if (ps == "inf" || ps == "infinity")
                return std::make_unique<lp_engine<R>>(rational(0), true);
            return std::make_unique<lp_engine<R>>(rational::parse(ps), false);
        }
        if (p.is_number_integer())
            return std::make_unique<lp_engine<R>>(rational(p.get<long>()), false);
        return std::make_unique<lp_engine<R>>(rational::parse(scalar_ops<double>::str(p.get<double>())), false);
    }
    if (space == "modular") {
        if constexpr (scalar_ops<R>::exact) {
            throw std::invalid_argument("modular: requires float mode (values are irrational)");
        } else {
            std::vector<int> ps = spec.at("p").get<std::vector<int>>();
            double tol = spec.value("tol", default_tol_modular);
            return std::make_unique<modular_engine>(std::move(ps), tol);
        }
    }
    if (space == "spreading") {
        int window = 0;
        if (spec.contains("N")) {
            window = spec.at("N").get<int>();
        } else if (spec.contains("n_max")) {
            int nm = spec.at("n_max").get<int>();
            if (nm < 1 || nm > 12) throw std::invalid_argument("spreading: n_max out of range");
            window = static_cast<int>(2 * factorial_of(nm));
        } else {
            throw std::invalid_argument("spreading: need N or n_max");
        }
        return std::make_unique<spreading_engine<R>>(window);
    }
    if (space == "partial_sum") {
        return std::make_unique<partial_sum_engine<R>>();
    }
    auto& reg = engine_registry<R>();
    auto it = reg.find(space);
    if (it != reg.end()) return it->second(spec);
    throw std::invalid_argument("space spec: unknown space '" + space + "'");
}

// Shorthand: "lp:2" | "lp:inf" | "modular:1,2,3,4" | "spreading:3" (max level)
//          | "spreading:N=12" | "partial_sum".
inline nlohmann::json space_spec_from_shorthand(const std::string& s) {
    auto colon = s.find(':');
    std::string head = colon == std::string::npos ? s : s.substr(0, colon);
    std::string rest = colon == std::string::npos ? "" : s.substr(colon + 1);
    nlohmann::json j;
    j["space"] = head;
    if (head == "lp") {
        if (rest == "inf" || rest == "infinity") j["p"] = "inf";
        else j["p"] = rest;
    } else if (head == "modular") {
        std::vector<int> ps;
        std::stringstream ss(rest);
        std::string item;
        while (std::getline(ss, item, ',')) ps.push_back(std::stoi(item));
        j["p"] = ps;
    } else if (head == "spreading") {
        if (rest.rfind("N=", 0) == 0) j["N"] = std::stoi(rest.substr(2));
        else j["n_max"] = std::stoi(rest);
    } else if (head == "partial_sum") {
        // no parameters
    } else if (colon != std::string::npos) {
        j["arg"] = rest;
    }
    return j;
}

} // namespace greedylab
