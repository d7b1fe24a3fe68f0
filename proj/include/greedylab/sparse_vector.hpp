#pragma once

// Finitely supported coefficient vectors over 1-based indices. Entries are
// kept sorted by index and zero coefficients are never stored, so equality is
// structural. Transformations return new values.
//
// Text form: comma-separated "index:value" with indices ascending, value in
// the scalar's canonical form ("3", "-5/2" exact; "0.5" float). decode()
// accepts any order, rejects duplicates, drops explicit zeros.

#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "index_set.hpp"
#include "scalar.hpp"
#include "sign_pattern.hpp"

namespace greedylab {

template <class R>
class sparse_vector {
public:
    using entry = std::pair<int, R>;

    sparse_vector() = default;

    explicit sparse_vector(std::vector<entry> entries) {
        std::sort(entries.begin(), entries.end(),
                  [](const entry& a, const entry& b) { return a.first < b.first; });
        for (auto& [i, c] : entries) {
            if (i < 1) throw std::out_of_range("sparse_vector: indices are 1-based");
            if (!e_.empty() && e_.back().first == i)
                throw std::invalid_argument("sparse_vector: duplicate index " + std::to_string(i));
            if (!(c == R(0))) e_.emplace_back(i, std::move(c));
        }
    }

    bool empty() const { return e_.empty(); }
    std::size_t support_size() const { return e_.size(); }

    R coef(int i) const {
        auto it = std::lower_bound(e_.begin(), e_.end(), i,
                                   [](const entry& a, int key) { return a.first < key; });
        if (it != e_.end() && it->first == i) return it->second;
        return R(0);
    }

    index_set support() const {
        std::vector<int> idx;
        idx.reserve(e_.size());
        for (auto& [i, c] : e_) idx.push_back(i);
        return index_set(std::move(idx));
    }

    // sup_j |coef(j)|; zero for the empty vector.
    R max_modulus() const {
        R m(0);
        for (auto& [i, c] : e_) {
            R a = scalar_ops<R>::abs(c);
            if (m < a) m = a;
        }
        return m;
    }

    auto begin() const { return e_.begin(); }
    auto end() const { return e_.end(); }
    const std::vector<entry>& entries() const { return e_; }

    sparse_vector with_coef(int i, R v) const {
        std::vector<entry> out;
        out.reserve(e_.size() + 1);
        bool placed = false;
        for (auto& [j, c] : e_) {
            if (j == i) {
                if (!(v == R(0))) out.emplace_back(i, v);
                placed = true;
            } else {
                out.emplace_back(j, c);
            }
        }
        if (!placed && !(v == R(0))) out.emplace_back(i, std::move(v));
        return from_sorted_candidate(std::move(out));
    }

    friend bool operator==(const sparse_vector& a, const sparse_vector& b) { return a.e_ == b.e_; }
    friend bool operator!=(const sparse_vector& a, const sparse_vector& b) { return !(a.e_ == b.e_); }

    std::string encode() const {
        std::string s;
        for (std::size_t k = 0; k < e_.size(); ++k) {
            if (k) s += ",";
            s += std::to_string(e_[k].first) + ":" + scalar_ops<R>::str(e_[k].second);
        }
        return s;
    }

    static sparse_vector decode(const std::string& text) {
        std::vector<entry> out;
        if (text.empty()) return sparse_vector();
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            auto colon = item.find(':');
            if (colon == std::string::npos)
                throw std::invalid_argument("sparse_vector: entry '" + item + "' lacks ':'");
            int idx = 0;
            try {
                std::size_t used = 0;
                idx = std::stoi(item.substr(0, colon), &used);
                if (used != colon) throw std::invalid_argument("");
            } catch (...) {
                throw std::invalid_argument("sparse_vector: bad index in '" + item + "'");
            }
            out.emplace_back(idx, scalar_ops<R>::parse(item.substr(colon + 1)));
        }
        return sparse_vector(std::move(out));
    }

private:
    static sparse_vector from_sorted_candidate(std::vector<entry> sorted) {
        sparse_vector v;
        v.e_ = std::move(sorted);
        return v;
    }

    template <class S>
    friend sparse_vector<S> add(const sparse_vector<S>&, const sparse_vector<S>&);

    std::vector<entry> e_;
};

template <class R>
sparse_vector<R> add(const sparse_vector<R>& x, const sparse_vector<R>& y) {
    std::vector<typename sparse_vector<R>::entry> out;
    auto a = x.begin();
    auto b = y.begin();
    while (a != x.end() || b != y.end()) {
        if (b == y.end() || (a != x.end() && a->first < b->first)) {
            out.emplace_back(*a++);
        } else if (a == x.end() || b->first < a->first) {
            out.emplace_back(*b++);
        } else {
            R s = a->second + b->second;
            if (!(s == R(0))) out.emplace_back(a->first, std::move(s));
            ++a;
            ++b;
        }
    }
    return sparse_vector<R>(std::move(out));
}

template <class R>
sparse_vector<R> scale(const sparse_vector<R>& x, const R& c) {
    std::vector<typename sparse_vector<R>::entry> out;
    if (c == R(0)) return sparse_vector<R>();
    out.reserve(x.support_size());
    for (auto& [i, v] : x) out.emplace_back(i, v * c);
    return sparse_vector<R>(std::move(out));
}

template <class R>
sparse_vector<R> negate(const sparse_vector<R>& x) {
    return scale(x, R(-1));
}

template <class R>
sparse_vector<R> sub(const sparse_vector<R>& x, const sparse_vector<R>& y) {
    return add(x, negate(y));
}

// Coordinate projection P_A.
template <class R>
sparse_vector<R> project(const sparse_vector<R>& x, const index_set& a) {
    std::vector<typename sparse_vector<R>::entry> out;
    for (auto& [i, v] : x)
        if (a.contains(i)) out.emplace_back(i, v);
    return sparse_vector<R>(std::move(out));
}

// t * 1_{eps A}. Rejects t <= 0: a signed indicator's height is positive by
// definition and a zero height silently collapses supports.
template <class R>
sparse_vector<R> signed_indicator(const index_set& a, const sign_pattern& eps, const R& t) {
    if (!(R(0) < t)) throw std::domain_error("signed_indicator: height t must be > 0");
    std::vector<typename sparse_vector<R>::entry> out;
    out.reserve(a.size());
    for (int i : a) out.emplace_back(i, eps.sign(i) > 0 ? t : -t);
    return sparse_vector<R>(std::move(out));
}

template <class R>
sparse_vector<R> indicator(const index_set& a) {
    return signed_indicator(a, sign_pattern(), R(1));
}

} // namespace greedylab
