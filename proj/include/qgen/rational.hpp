#ifndef QGEN_RATIONAL_HPP
#define QGEN_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace qgen {

using Int = mpz_class;

/// Exact rational scalar. Always canonical: gcd(|num|, den) = 1, den > 0.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {} // NOLINT(google-explicit-constructor)
    Rational(const Int& n) : v_(n) {}                     // NOLINT(google-explicit-constructor)
    Rational(const Int& num, const Int& den) : v_(num, den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Int(num), Int(den)) {}

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    double to_double() const { return v_.get_d(); }

    /// "n" when integral, otherwise "n/d".
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_str();
    }

    /// Accepts "a/b", plain integers, and decimal literals ("0.5" -> 1/2).
    static Rational parse(const std::string& text);

    /// Exact value of a finite double (every double is a dyadic rational).
    static Rational from_double(double x) {
        Rational r;
        r.v_ = mpq_class(x);
        return r;
    }

    Rational operator-() const { Rational r; r.v_ = -v_; return r; }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class v_;
};

inline Rational pow(const Rational& base, unsigned long e) {
    Int n, d;
    mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), e);
    return Rational(n, d);
}

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Rational Rational::parse(const std::string& text) {
    std::string t = text;
    if (!t.empty() && t.front() == '+') t.erase(0, 1);
    if (t.empty()) throw std::invalid_argument("Rational::parse: empty string");
    // base 10 throughout; GMP's default base 0 would read leading zeros as octal
    auto slash = t.find('/');
    if (slash != std::string::npos) {
        Int n(t.substr(0, slash), 10), d(t.substr(slash + 1), 10);
        if (d == 0) throw std::domain_error("Rational::parse: zero denominator");
        return Rational(n, d);
    }
    auto dot = t.find('.');
    if (dot == std::string::npos) return Rational(Int(t, 10));
    // decimal literal: shift the point into a power-of-ten denominator
    std::string digits = t.substr(0, dot) + t.substr(dot + 1);
    std::size_t frac_len = t.size() - dot - 1;
    if (digits.empty() || digits == "-")
        throw std::invalid_argument("Rational::parse: malformed decimal '" + text + "'");
    Int num(digits, 10);
    Int den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    return Rational(num, den);
}

} // namespace qgen

#endif
