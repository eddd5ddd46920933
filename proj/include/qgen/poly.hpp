#ifndef QGEN_POLY_HPP
#define QGEN_POLY_HPP

#include <qgen/rational.hpp>

#include <algorithm>
#include <cassert>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

namespace qgen {

/// Dense univariate polynomial over Rational, coefficients in ascending
/// degree. Canonical: no trailing zeros; the zero polynomial is empty.
class PolyQ {
public:
    PolyQ() = default;
    PolyQ(std::initializer_list<Rational> cs) : c_(cs) { normalize(); }
    explicit PolyQ(std::vector<Rational> cs) : c_(std::move(cs)) { normalize(); }
    explicit PolyQ(const Rational& c) { if (!c.is_zero()) c_.push_back(c); }

    static PolyQ var() { return PolyQ{Rational(0), Rational(1)}; }          // q
    static PolyQ monomial(const Rational& c, std::size_t k) {
        if (c.is_zero()) return {};
        std::vector<Rational> v(k + 1);
        v[k] = c;
        return PolyQ(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
    const Rational& lc() const { assert(!c_.empty()); return c_.back(); }

    bool is_monic() const { return !c_.empty() && c_.back() == Rational(1); }
    bool is_one() const { return c_.size() == 1 && c_[0] == Rational(1); }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    double eval_double(double x) const {
        double acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_double();
        return acc;
    }

    PolyQ derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Rational> d(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Rational(static_cast<long>(k));
        return PolyQ(std::move(d));
    }

    /// q -> q^d, spreading coefficients.
    PolyQ subst_pow(unsigned long d) const {
        assert(d >= 1);
        if (is_zero() || d == 1) return *this;
        std::vector<Rational> v(static_cast<std::size_t>(degree()) * d + 1);
        for (std::size_t k = 0; k < c_.size(); ++k) v[k * d] = c_[k];
        return PolyQ(std::move(v));
    }

    PolyQ operator-() const {
        PolyQ r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend PolyQ operator+(const PolyQ& a, const PolyQ& b) {
        std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
        return PolyQ(std::move(v));
    }
    friend PolyQ operator-(const PolyQ& a, const PolyQ& b) { return a + (-b); }
    friend PolyQ operator*(const PolyQ& a, const PolyQ& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        }
        return PolyQ(std::move(v));
    }
    friend PolyQ operator*(const PolyQ& a, const Rational& s) {
        if (s.is_zero()) return {};
        PolyQ r = a;
        for (auto& c : r.c_) c *= s;
        return r;
    }
    friend PolyQ operator*(const Rational& s, const PolyQ& a) { return a * s; }

    PolyQ& operator+=(const PolyQ& o) { *this = *this + o; return *this; }
    PolyQ& operator-=(const PolyQ& o) { *this = *this - o; return *this; }
    PolyQ& operator*=(const PolyQ& o) { *this = *this * o; return *this; }

    friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.c_ == b.c_; }
    friend bool operator!=(const PolyQ& a, const PolyQ& b) { return !(a == b); }

    /// Euclidean division over the field Q: *this = q*den + r, deg r < deg den.
    std::pair<PolyQ, PolyQ> divrem(const PolyQ& den) const {
        if (den.is_zero()) throw std::domain_error("PolyQ: division by zero polynomial");
        PolyQ rem = *this;
        if (rem.degree() < den.degree()) return {PolyQ{}, rem};
        std::vector<Rational> q(rem.c_.size() - den.c_.size() + 1, Rational(0));
        const Rational inv_lc = Rational(1) / den.lc();
        while (!rem.is_zero() && rem.degree() >= den.degree()) {
            const std::size_t shift = rem.degree() - den.degree();
            const Rational f = rem.lc() * inv_lc;
            q[shift] = f;
            for (std::size_t i = 0; i < den.c_.size(); ++i) rem.c_[shift + i] -= f * den.c_[i];
            rem.normalize();
        }
        return {PolyQ(std::move(q)), rem};
    }

    /// Exact quotient; throws if the division leaves a remainder.
    PolyQ divexact(const PolyQ& den) const {
        auto [q, r] = divrem(den);
        if (!r.is_zero()) throw std::domain_error("PolyQ: inexact division");
        return q;
    }

    bool divides(const PolyQ& num) const { return num.divrem(*this).second.is_zero(); }

    std::string str(const std::string& var = "q") const;

private:
    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

inline PolyQ pow(const PolyQ& base, unsigned long e) {
    PolyQ r{Rational(1)};
    PolyQ b = base;
    while (e > 0) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

/// Unique positive rational c with p = c * P, P integer with content 1.
/// The primitive part keeps the sign of p's coefficients.
inline Rational content(const PolyQ& p) {
    if (p.is_zero()) return Rational(0);
    Int l(1), g(0);
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    for (const auto& c : p.coeffs()) {
        Int scaled = c.num() * (l / c.den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_mpz_t());
    }
    return Rational(g, l);
}

/// Integer-coefficient image p / content(p).
inline std::vector<Int> primitive_int(const PolyQ& p, const Rational& cont) {
    std::vector<Int> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        // c / cont is an exact integer by construction of the content
        Int t = c.num() * cont.den();
        const Int d = c.den() * cont.num();
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), d.get_mpz_t());
        v.push_back(std::move(t));
    }
    return v;
}

namespace detail {

inline void strip_int(std::vector<Int>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

inline Int int_content(const std::vector<Int>& v) {
    Int g(0);
    for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

inline void divexact_scalar(std::vector<Int>& v, const Int& d) {
    for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
}

/// Pseudo-remainder: lc(v)^(deg u - deg v + 1) * u  mod  v.
inline std::vector<Int> prem(std::vector<Int> u, const std::vector<Int>& v) {
    const Int& d = v.back();
    long e = static_cast<long>(u.size()) - static_cast<long>(v.size()) + 1;
    while (!u.empty() && u.size() >= v.size()) {
        const Int top = u.back();
        const std::size_t shift = u.size() - v.size();
        for (auto& c : u) c *= d;
        for (std::size_t i = 0; i < v.size(); ++i) u[shift + i] -= top * v[i];
        strip_int(u);
        --e;
    }
    if (e > 0) {
        Int scale;
        mpz_pow_ui(scale.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(e));
        for (auto& c : u) c *= scale;
    }
    return u;
}

inline Int int_pow(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

/// Subresultant PRS (Knuth 4.6.1, Algorithm C) on primitive integer inputs.
inline std::vector<Int> subresultant_gcd(std::vector<Int> u, std::vector<Int> v) {
    if (u.size() < v.size()) u.swap(v);
    Int g(1), h(1);
    while (true) {
        const unsigned long delta = static_cast<unsigned long>(u.size() - v.size());
        std::vector<Int> r = prem(u, v);
        if (r.empty()) break;
        if (r.size() == 1) return {Int(1)};
        u = std::move(v);
        v = std::move(r);
        divexact_scalar(v, g * int_pow(h, delta));
        g = u.back();
        if (delta <= 1)
            h = int_pow(g, delta) * int_pow(h, 1 - delta);
        else
            mpz_divexact(h.get_mpz_t(), int_pow(g, delta).get_mpz_t(), int_pow(h, delta - 1).get_mpz_t());
    }
    divexact_scalar(v, int_content(v));
    if (v.back() < 0)
        for (auto& c : v) c = -c;
    return v;
}

} // namespace detail

/// Primitive gcd over Q[q], positive leading coefficient; gcd(0,0) = 0.
inline PolyQ poly_gcd(const PolyQ& a, const PolyQ& b) {
    auto to_primitive = [](const PolyQ& p) {
        auto v = primitive_int(p, content(p));
        if (v.back() < 0)
            for (auto& c : v) c = -c;
        return v;
    };
    if (a.is_zero() && b.is_zero()) return {};
    if (a.is_zero() || b.is_zero()) {
        auto v = to_primitive(a.is_zero() ? b : a);
        std::vector<Rational> r(v.begin(), v.end());
        return PolyQ(std::move(r));
    }
    auto g = detail::subresultant_gcd(to_primitive(a), to_primitive(b));
    std::vector<Rational> r(g.begin(), g.end());
    return PolyQ(std::move(r));
}

inline std::string PolyQ::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long k = degree(); k >= 0; --k) {
        const Rational& c = c_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        const Rational a = qgen::abs(c);
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        const bool unit = (a == Rational(1));
        if (k == 0) {
            os << a.str();
        } else {
            if (!unit) os << a.str() << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

} // namespace qgen

#endif
