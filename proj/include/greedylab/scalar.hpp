#pragma once

// Arithmetic mode policy. Everything numeric is templated on the scalar R:
// `rational` gives exact arithmetic, `double` gives float64 where every
// threshold/tie comparison funnels through one tolerance knob (tol_eq).

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "rational.hpp"

namespace greedylab {

inline constexpr double default_tol_eq = 1e-12;
inline constexpr double default_tol_modular = 1e-12;

template <class R>
inline R scalar_max(const R& a, const R& b) { return b < a ? a : b; }

template <class R>
struct scalar_ops;

template <>
struct scalar_ops<rational> {
    static constexpr bool exact = true;

    static const char* mode_name() { return "exact"; }

    static bool eq(const rational& a, const rational& b, double) { return a == b; }
    static bool leq(const rational& a, const rational& b, double) { return a <= b; }
    static bool lt(const rational& a, const rational& b, double) { return a < b; }
    static bool is_zero(const rational& a, double) { return a.sgn() == 0; }

    static rational abs(const rational& a) { return a.sgn() < 0 ? -a : a; }
    static rational from_int(long n) { return rational(n); }
    static rational from_ratio(long num, long den) { return rational(num, den); }
    static rational from_rational(const rational& q) { return q; }
    static double to_double(const rational& a) { return a.to_double(); }

    static rational parse(const std::string& s) { return rational::parse(s); }
    static std::string str(const rational& a) { return a.str(); }
};

template <>
struct scalar_ops<double> {
    static constexpr bool exact = false;

    static const char* mode_name() { return "float"; }

    static bool eq(double a, double b, double tol) { return std::fabs(a - b) <= tol; }
    static bool leq(double a, double b, double tol) { return a <= b + tol; }
    static bool lt(double a, double b, double tol) { return a < b - tol; }
    static bool is_zero(double a, double tol) { return std::fabs(a) <= tol; }

    static double abs(double a) { return std::fabs(a); }
    static double from_int(long n) { return static_cast<double>(n); }
    static double from_ratio(long num, long den) { return static_cast<double>(num) / static_cast<double>(den); }
    static double from_rational(const rational& q) { return q.to_double(); }
    static double to_double(double a) { return a; }

    static double parse(const std::string& s) {
        char* end = nullptr;
        double v = std::strtod(s.c_str(), &end);
        if (end == nullptr || *end != '\0' || end == s.c_str())
            throw std::invalid_argument("float scalar: bad number '" + s + "'");
        return v;
    }

    // %.17g round-trips every double and is stable across runs of one build.
    static std::string str(double a) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", a);
        return std::string(buf);
    }
};

} // namespace greedylab
