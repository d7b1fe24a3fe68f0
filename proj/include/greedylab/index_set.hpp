#pragma once

// Finite sets of 1-based basis indices, kept sorted ascending. The "A < B"
// order used throughout means max(A) < min(B); empty sets compare left and
// right of everything, matching how the empty projection set is always
// admissible.

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace greedylab {

class index_set {
public:
    index_set() = default;

    explicit index_set(std::vector<int> xs) : v_(std::move(xs)) {
        std::sort(v_.begin(), v_.end());
        v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
        if (!v_.empty() && v_.front() < 1)
            throw std::out_of_range("index_set: indices are 1-based");
    }

    index_set(std::initializer_list<int> xs) : index_set(std::vector<int>(xs)) {}

    // Closed interval [lo, hi]; empty when hi < lo.
    static index_set interval(int lo, int hi) {
        index_set r;
        if (lo < 1) throw std::out_of_range("index_set: indices are 1-based");
        for (int i = lo; i <= hi; ++i) r.v_.push_back(i);
        return r;
    }

    std::size_t size() const { return v_.size(); }
    bool empty() const { return v_.empty(); }

    bool contains(int i) const {
        return std::binary_search(v_.begin(), v_.end(), i);
    }

    int min() const {
        if (v_.empty()) throw std::logic_error("index_set: min of empty set");
        return v_.front();
    }
    int max() const {
        if (v_.empty()) throw std::logic_error("index_set: max of empty set");
        return v_.back();
    }

    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }
    const std::vector<int>& indices() const { return v_; }

    index_set unite(const index_set& o) const {
        std::vector<int> out;
        std::set_union(v_.begin(), v_.end(), o.v_.begin(), o.v_.end(), std::back_inserter(out));
        return wrap(std::move(out));
    }
    index_set intersect(const index_set& o) const {
        std::vector<int> out;
        std::set_intersection(v_.begin(), v_.end(), o.v_.begin(), o.v_.end(), std::back_inserter(out));
        return wrap(std::move(out));
    }
    index_set setminus(const index_set& o) const {
        std::vector<int> out;
        std::set_difference(v_.begin(), v_.end(), o.v_.begin(), o.v_.end(), std::back_inserter(out));
        return wrap(std::move(out));
    }

    bool disjoint_with(const index_set& o) const {
        auto a = v_.begin();
        auto b = o.v_.begin();
        while (a != v_.end() && b != o.v_.end()) {
            if (*a < *b) ++a;
            else if (*b < *a) ++b;
            else return false;
        }
        return true;
    }

    // max(this) < min(other); vacuously true around empty sets.
    bool strictly_left_of(const index_set& o) const {
        if (v_.empty() || o.v_.empty()) return true;
        return v_.back() < o.v_.front();
    }

    friend bool operator==(const index_set& a, const index_set& b) { return a.v_ == b.v_; }
    friend bool operator!=(const index_set& a, const index_set& b) { return a.v_ != b.v_; }
    friend bool operator<(const index_set& a, const index_set& b) { return a.v_ < b.v_; }

    std::string str() const {
        std::string s = "{";
        for (std::size_t i = 0; i < v_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(v_[i]);
        }
        return s + "}";
    }

    // Inverse of str(); also accepts bare "1,2,5" and ranges "3-7".
    static index_set parse(const std::string& text) {
        std::string t = text;
        if (!t.empty() && t.front() == '{') {
            if (t.back() != '}') throw std::invalid_argument("index_set: unbalanced braces");
            t = t.substr(1, t.size() - 2);
        }
        std::vector<int> xs;
        std::size_t pos = 0;
        while (pos < t.size()) {
            std::size_t comma = t.find(',', pos);
            std::string item = t.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            pos = comma == std::string::npos ? t.size() : comma + 1;
            if (item.empty()) throw std::invalid_argument("index_set: empty item in '" + text + "'");
            auto dash = item.find('-');
            try {
                if (dash != std::string::npos && dash > 0) {
                    int lo = std::stoi(item.substr(0, dash));
                    int hi = std::stoi(item.substr(dash + 1));
                    for (int i = lo; i <= hi; ++i) xs.push_back(i);
                } else {
                    xs.push_back(std::stoi(item));
                }
            } catch (const std::invalid_argument&) {
                throw std::invalid_argument("index_set: bad item '" + item + "'");
            }
        }
        return index_set(std::move(xs));
    }

private:
    static index_set wrap(std::vector<int> sorted) {
        index_set r;
        r.v_ = std::move(sorted);
        return r;
    }

    std::vector<int> v_;
};

} // namespace greedylab
