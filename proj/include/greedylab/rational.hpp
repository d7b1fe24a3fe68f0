#pragma once

// Exact rational scalar. Thin value wrapper over GMP's mpq_class so the rest
// of the library owns parsing, canonical text form and ordering, while GMP
// supplies arbitrary-precision arithmetic (simplex pivots blow through any
// fixed-width fraction).

#include <gmpxx.h>

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

namespace greedylab {

class rational {
public:
    rational() : v_(0) {}
    rational(int n) : v_(n) {}
    rational(long n) : v_(n) {}
    rational(long num, long den) : v_(num, den) {
        if (den == 0) throw std::domain_error("rational: zero denominator");
        v_.canonicalize();
    }
    explicit rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    // Accepts "p", "p/q" and plain decimals ("-5.25" -> -21/4).
    static rational parse(const std::string& s) {
        if (s.empty()) throw std::invalid_argument("rational: empty string");
        auto slash = s.find('/');
        if (slash != std::string::npos) {
            mpz_class num = parse_int(s.substr(0, slash));
            mpz_class den = parse_int(s.substr(slash + 1));
            if (den == 0) throw std::domain_error("rational: zero denominator");
            mpq_class q(num, den);
            q.canonicalize();
            return rational(std::move(q));
        }
        auto dot = s.find('.');
        if (dot != std::string::npos) {
            std::string digits = s.substr(0, dot) + s.substr(dot + 1);
            std::size_t frac_len = s.size() - dot - 1;
            if (frac_len == 0) throw std::invalid_argument("rational: bad decimal '" + s + "'");
            mpz_class num = parse_int(digits);
            mpz_class den = 1;
            for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
            mpq_class q(num, den);
            q.canonicalize();
            return rational(std::move(q));
        }
        return rational(mpq_class(parse_int(s)));
    }

    // Canonical form: "p" when the denominator is 1, else "p/q".
    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    double to_double() const { return v_.get_d(); }

    rational operator-() const { return rational(mpq_class(-v_)); }
    rational& operator+=(const rational& o) { v_ += o.v_; return *this; }
    rational& operator-=(const rational& o) { v_ -= o.v_; return *this; }
    rational& operator*=(const rational& o) { v_ *= o.v_; return *this; }
    rational& operator/=(const rational& o) {
        if (o.v_ == 0) throw std::domain_error("rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend rational operator+(rational a, const rational& b) { a += b; return a; }
    friend rational operator-(rational a, const rational& b) { a -= b; return a; }
    friend rational operator*(rational a, const rational& b) { a *= b; return a; }
    friend rational operator/(rational a, const rational& b) { a /= b; return a; }

    friend bool operator==(const rational& a, const rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const rational& a, const rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const rational& a, const rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const rational& a, const rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const rational& a, const rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const rational& a, const rational& b) { return a.v_ >= b.v_; }

    int sgn() const { return ::sgn(v_); }

    friend rational abs(const rational& a) { return rational(mpq_class(::abs(a.v_))); }

    static rational pow(const rational& base, int e) {
        if (e == 0) return rational(1);
        if (e < 0) return rational(1) / pow(base, -e);
        rational acc(1), b = base;
        int k = e;
        while (k > 0) {
            if (k & 1) acc *= b;
            b *= b;
            k >>= 1;
        }
        return acc;
    }

    const mpq_class& raw() const { return v_; }

private:
    static mpz_class parse_int(const std::string& t) {
        if (t.empty()) throw std::invalid_argument("rational: empty integer part");
        std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
        if (i == t.size()) throw std::invalid_argument("rational: bad integer '" + t + "'");
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9')
                throw std::invalid_argument("rational: bad integer '" + t + "'");
        return mpz_class(t);
    }

    mpq_class v_;
};

inline const rational& max(const rational& a, const rational& b) { return a < b ? b : a; }
inline const rational& min(const rational& a, const rational& b) { return b < a ? b : a; }

} // namespace greedylab
