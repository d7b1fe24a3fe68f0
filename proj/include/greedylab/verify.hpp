#pragma once

// Worked-example reproduction. Each check recomputes a value the library
// must hit exactly (rational engines) or within the bisection tolerance
// (modular engine) and reports expected vs actual.

#include <cmath>
#include <string>
#include <vector>

#include "dual_norm.hpp"
#include "norms.hpp"
#include "sparse_vector.hpp"

namespace greedylab {

struct example_check {
    std::string name;
    bool pass = false;
    std::string expected;
    std::string actual;
};

inline example_check make_check(std::string name, const rational& expected, const rational& actual) {
    return {std::move(name), expected == actual, expected.str(), actual.str()};
}

// block indicators in the spreading-family space: the left block of the
// two-block window has norm (n-1)!, the right block has norm n!
inline std::vector<example_check> example_spreading_indicators() {
    std::vector<example_check> out;
    for (int n : {2, 3}) {
        int half = factorial_of(n);
        spreading_engine<rational> space(2 * half);
        rational left = space.norm(indicator<rational>(index_set::interval(1, half)));
        rational right = space.norm(indicator<rational>(index_set::interval(half + 1, 2 * half)));
        out.push_back(make_check("spreading n=" + std::to_string(n) + " left block",
                                 rational(factorial_of(n - 1)), left));
        out.push_back(make_check("spreading n=" + std::to_string(n) + " right block",
                                 rational(half), right));
    }
    return out;
}

// dual norms on the n=2 window: the two block functionals separate the
// blocks at values 2 and 1
inline std::vector<example_check> example_dual_values() {
    spreading_engine<rational> space(4);
    std::vector<example_check> out;
    auto r1 = dual_norm_polyhedral(space, indicator<rational>(index_set::interval(1, 2)));
    auto r2 = dual_norm_polyhedral(space, indicator<rational>(index_set::interval(3, 4)));
    out.push_back(make_check("dual norm of 1_{1,2}", rational(2), r1.value));
    out.push_back(make_check("dual norm of 1_{3,4}", rational(1), r2.value));
    example_check rows;
    rows.name = "dual LP constraint count";
    rows.expected = "<= 30";
    rows.actual = std::to_string(std::max(r1.lp_rows, r2.lp_rows));
    rows.pass = r1.lp_rows <= 30 && r2.lp_rows <= 30;
    out.push_back(rows);
    return out;
}

// the two-sided comparison family on the running-sum space: the dip vector
// plus the left block reaches (n/2)(3n/2+1) while the same vector plus the
// interleaved right block stays at 2n
inline std::vector<example_check> example_partial_sum_growth() {
    std::vector<example_check> out;
    partial_sum_engine<rational> space;
    for (int n : {2, 4, 6, 8}) {
        std::vector<sparse_vector<rational>::entry> dips;
        for (int i = 2 * n + 1; i <= 4 * n - 1; i += 2) dips.emplace_back(i, rational(-1));
        sparse_vector<rational> x(dips);

        sparse_vector<rational> with_a =
            add(x, indicator<rational>(index_set::interval(n + 1, 2 * n)));
        std::vector<int> evens;
        for (int i = 2 * n + 2; i <= 4 * n; i += 2) evens.push_back(i);
        sparse_vector<rational> with_b = add(x, indicator<rational>(index_set(evens)));

        rational expect_a = rational(n, 2) * (rational(3 * n, 2) + 1);
        out.push_back(make_check("running-sum n=" + std::to_string(n) + " left side",
                                 expect_a, space.norm(with_a)));
        out.push_back(make_check("running-sum n=" + std::to_string(n) + " right side",
                                 rational(2 * n), space.norm(with_b)));
    }
    return out;
}

// modular space with increasing exponents: indicators get cheaper to the
// right (reverse comparison holds with constant 1), and norm(e_1 + e_2)
// solves t^2 = t + 1, the golden ratio
inline std::vector<example_check> example_modular_checks() {
    std::vector<int> ps;
    for (int i = 1; i <= 8; ++i) ps.push_back(i);
    modular_engine space(ps);

    std::vector<example_check> out;
    double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    double got = space.norm(sparse_vector<double>({{1, 1.0}, {2, 1.0}}));
    example_check golden;
    golden.name = "modular golden ratio norm(e_1 + e_2)";
    golden.expected = "1.6180339887498949";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", got);
    golden.actual = buf;
    golden.pass = std::fabs(got - phi) < 1e-9;
    out.push_back(golden);

    // enumerate disjoint pairs B strictly left of A with |A| <= |B|,
    // indicator norms cached per mask
    std::vector<double> nm(1 << 8, 0.0);
    for (int m = 1; m < (1 << 8); ++m)
        nm[m] = space.norm(indicator<double>(detail::set_of_mask(static_cast<unsigned long long>(m))));
    long pairs = 0, violations = 0;
    for (int mb = 1; mb < (1 << 8); ++mb) {
        int hib = 32 - __builtin_clz(static_cast<unsigned>(mb));
        for (int ma = 1; ma < (1 << 8); ++ma) {
            if (ma & ((1 << hib) - 1)) continue; // A must sit right of all of B
            if (__builtin_popcount(static_cast<unsigned>(ma)) >
                __builtin_popcount(static_cast<unsigned>(mb)))
                continue;
            ++pairs;
            if (nm[ma] > nm[mb] + 1e-9) ++violations;
        }
    }
    example_check mono;
    mono.name = "modular right-of comparison (|A| <= |B|, B left of A)";
    mono.expected = "0 violations";
    mono.actual = std::to_string(violations) + " violations over " + std::to_string(pairs) +
                  " pairs";
    mono.pass = violations == 0 && pairs > 0;
    out.push_back(mono);
    return out;
}

struct examples_report {
    std::vector<example_check> checks;
    bool all_pass = true;
};

inline examples_report reproduce_examples() {
    examples_report rep;
    auto append = [&](std::vector<example_check> v) {
        for (auto& c : v) {
            rep.all_pass = rep.all_pass && c.pass;
            rep.checks.push_back(std::move(c));
        }
    };
    append(example_spreading_indicators());
    append(example_dual_values());
    append(example_partial_sum_growth());
    append(example_modular_checks());
    return rep;
}

} // namespace greedylab
