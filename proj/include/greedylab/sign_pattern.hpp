#pragma once

// Sign choice on a set of indices. Only the -1 positions are stored; every
// index not listed carries +1, so the default pattern is all-plus.

#include <string>

#include "index_set.hpp"

namespace greedylab {

class sign_pattern {
public:
    sign_pattern() = default;
    explicit sign_pattern(index_set negatives) : neg_(std::move(negatives)) {}

    int sign(int i) const { return neg_.contains(i) ? -1 : +1; }
    const index_set& negatives() const { return neg_; }
    bool all_plus() const { return neg_.empty(); }

    friend bool operator==(const sign_pattern& a, const sign_pattern& b) { return a.neg_ == b.neg_; }

    std::string str() const { return "-" + neg_.str(); }

private:
    index_set neg_;
};

} // namespace greedylab
