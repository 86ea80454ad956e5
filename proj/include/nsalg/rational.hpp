#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "nsalg/errors.hpp"

namespace nsalg {

/// Exact rational scalar, always in lowest terms with positive denominator.
/// Backed by GMP so long straightening chains never overflow.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {} // NOLINT(google-explicit-constructor)
    Rational(long num, long den) {
        if (den == 0) throw DomainError("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw DomainError("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    /// Parses "p" or "p/q" with an optional leading minus. Throws ParseError.
    static Rational from_string(std::string_view s);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DomainError("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

private:
    explicit Rational(mpq_class q) : v_(std::move(q)) {}
    mpq_class v_;
};

inline Rational Rational::from_string(std::string_view s) {
    if (s.empty()) throw ParseError("malformed rational: empty string");
    std::size_t pos = 0;
    bool neg = false;
    if (s[pos] == '-') { neg = true; ++pos; }
    auto read_digits = [&](std::string_view what) {
        std::size_t start = pos;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
        if (pos == start)
            throw ParseError("malformed rational: expected digits in '" + std::string(s) +
                             "' (" + std::string(what) + ")");
        return std::string(s.substr(start, pos - start));
    };
    std::string num = read_digits("numerator");
    std::string den = "1";
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        den = read_digits("denominator");
    }
    if (pos != s.size()) throw ParseError("malformed rational: trailing characters in '" + std::string(s) + "'");
    mpz_class n(num), d(den);
    if (d == 0) throw ParseError("malformed rational: zero denominator in '" + std::string(s) + "'");
    if (neg) n = -n;
    return Rational(n, d);
}

} // namespace nsalg
