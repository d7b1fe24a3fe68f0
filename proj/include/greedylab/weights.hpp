#pragma once

// Weight sequences w = (w_n), strictly positive. Weights are exact rational
// data regardless of the arithmetic mode: budget comparisons w(A) <= w(B)
// must not wobble, so they are always decided exactly and converted to the
// working scalar only when a weight enters a norm-level computation.
//
// Kinds and their closed-form tail facts (used by claim hypotheses):
//   constant c        : inf = sup = limsup = c, sum diverges
//   explicit + tail t : w_1..w_k listed, w_n = t beyond; limsup = t, sum diverges
//   geometric r       : w_n = r^(n-1); r<1: summable, limsup 0; r>1: sup infinite
//   harmonic          : w_n = 1/n; sup 1, limsup 0, sum diverges
//
// Shorthand: "unit" | "constant:<q>" | "harmonic" | "geometric:<q>"
//          | "explicit:<q>,<q>,...;tail=<q>"  (alias "table:" for "explicit:")

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "index_set.hpp"
#include "rational.hpp"
#include "scalar.hpp"

namespace greedylab {

enum class weight_kind { constant, explicit_tail, geometric, harmonic };

class weight_sequence {
public:
    static weight_sequence constant(rational c) {
        weight_sequence w;
        w.kind_ = weight_kind::constant;
        w.param_ = require_positive(std::move(c));
        return w;
    }

    static weight_sequence unit() { return constant(rational(1)); }

    static weight_sequence harmonic() {
        weight_sequence w;
        w.kind_ = weight_kind::harmonic;
        return w;
    }

    static weight_sequence geometric(rational ratio) {
        weight_sequence w;
        w.kind_ = weight_kind::geometric;
        w.param_ = require_positive(std::move(ratio));
        return w;
    }

    static weight_sequence explicit_tail(std::vector<rational> head, rational tail) {
        weight_sequence w;
        w.kind_ = weight_kind::explicit_tail;
        for (auto& h : head) require_positive(h);
        w.head_ = std::move(head);
        w.param_ = require_positive(std::move(tail));
        return w;
    }

    weight_kind kind() const { return kind_; }

    rational at(int n) const {
        if (n < 1) throw std::out_of_range("weight_sequence: indices are 1-based");
        switch (kind_) {
            case weight_kind::constant: return param_;
            case weight_kind::harmonic: return rational(1, n);
            case weight_kind::geometric: return rational::pow(param_, n - 1);
            case weight_kind::explicit_tail:
                if (static_cast<std::size_t>(n) <= head_.size()) return head_[n - 1];
                return param_;
        }
        throw std::logic_error("weight_sequence: bad kind");
    }

    rational weight_of(const index_set& a) const {
        rational s(0);
        for (int i : a) s += at(i);
        return s;
    }

    template <class R>
    R value(int n) const {
        return scalar_ops<R>::from_rational(at(n));
    }

    // --- closed-form tail facts ------------------------------------------

    // inf_n w_n; 0 encodes an infimum of 0 that is approached, not attained.
    rational inf_over_all() const {
        switch (kind_) {
            case weight_kind::constant: return param_;
            case weight_kind::harmonic: return rational(0);
            case weight_kind::geometric: return param_ < rational(1) ? rational(0) : rational(1);
            case weight_kind::explicit_tail: {
                rational m = param_;
                for (auto& h : head_)
                    if (h < m) m = h;
                return m;
            }
        }
        throw std::logic_error("weight_sequence: bad kind");
    }

    bool sup_finite() const {
        return !(kind_ == weight_kind::geometric && param_ > rational(1));
    }

    // Meaningful only when sup_finite().
    rational sup_over_all() const {
        switch (kind_) {
            case weight_kind::constant: return param_;
            case weight_kind::harmonic: return rational(1);
            case weight_kind::geometric:
                if (param_ > rational(1)) throw std::logic_error("weight_sequence: sup is infinite");
                return rational(1);
            case weight_kind::explicit_tail: {
                rational m = param_;
                for (auto& h : head_)
                    if (h > m) m = h;
                return m;
            }
        }
        throw std::logic_error("weight_sequence: bad kind");
    }

    rational limsup() const {
        switch (kind_) {
            case weight_kind::constant: return param_;
            case weight_kind::harmonic: return rational(0);
            case weight_kind::geometric:
                if (param_ < rational(1)) return rational(0);
                if (param_ == rational(1)) return rational(1);
                throw std::logic_error("weight_sequence: limsup is infinite");
            case weight_kind::explicit_tail: return param_;
        }
        throw std::logic_error("weight_sequence: bad kind");
    }

    bool limsup_finite() const {
        return !(kind_ == weight_kind::geometric && param_ > rational(1));
    }

    bool sum_finite() const {
        return kind_ == weight_kind::geometric && param_ < rational(1);
    }

    bool tends_to_zero() const {
        return kind_ == weight_kind::harmonic ||
               (kind_ == weight_kind::geometric && param_ < rational(1));
    }

    bool inf_positive() const { return inf_over_all() > rational(0); }

    // Exact sum of the full tail (n, infinity); only for summable kinds.
    rational tail_sum_from(int n) const {
        if (!sum_finite()) throw std::logic_error("weight_sequence: tail sum diverges");
        // geometric: sum_{k>=n} r^(k-1) = r^(n-1) / (1-r)
        return rational::pow(param_, n - 1) / (rational(1) - param_);
    }

    std::string name() const {
        switch (kind_) {
            case weight_kind::constant:
                return param_ == rational(1) ? "unit" : "constant:" + param_.str();
            case weight_kind::harmonic: return "harmonic";
            case weight_kind::geometric: return "geometric:" + param_.str();
            case weight_kind::explicit_tail: {
                std::string s = "explicit:";
                for (std::size_t i = 0; i < head_.size(); ++i) {
                    if (i) s += ",";
                    s += head_[i].str();
                }
                return s + ";tail=" + param_.str();
            }
        }
        throw std::logic_error("weight_sequence: bad kind");
    }

    static weight_sequence parse(const std::string& spec) {
        if (spec == "unit") return unit();
        if (spec == "harmonic") return harmonic();
        auto colon = spec.find(':');
        std::string head = colon == std::string::npos ? spec : spec.substr(0, colon);
        std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
        if (head == "constant") return constant(rational::parse(rest));
        if (head == "geometric") return geometric(rational::parse(rest));
        if (head == "explicit" || head == "table") {
            auto semi = rest.find(';');
            if (semi == std::string::npos || rest.substr(semi + 1, 5) != "tail=")
                throw std::invalid_argument("weight_sequence: expected 'explicit:a,b,...;tail=t'");
            std::vector<rational> hs;
            std::stringstream ss(rest.substr(0, semi));
            std::string item;
            while (std::getline(ss, item, ',')) hs.push_back(rational::parse(item));
            return explicit_tail(std::move(hs), rational::parse(rest.substr(semi + 6)));
        }
        throw std::invalid_argument("weight_sequence: unknown spec '" + spec + "'");
    }

private:
    static rational require_positive(rational q) {
        if (!(q > rational(0))) throw std::domain_error("weight_sequence: weights must be > 0");
        return q;
    }

    weight_kind kind_ = weight_kind::constant;
    rational param_ = rational(1);
    std::vector<rational> head_;
};

} // namespace greedylab
