#ifndef QGEN_RATFUNC_HPP
#define QGEN_RATFUNC_HPP

#include <qgen/errors.hpp>
#include <qgen/poly.hpp>

#include <string>
#include <utility>
#include <vector>

namespace qgen {

/// Reduced rational function in q over the rationals.
/// Canonical form: gcd(num, den) = 1, den monic; zero is 0/1.
class RatFuncQ {
public:
    RatFuncQ() : num_(), den_{Rational(1)} {}
    RatFuncQ(const Rational& c) : num_(c), den_{Rational(1)} {} // NOLINT(google-explicit-constructor)
    RatFuncQ(long c) : RatFuncQ(Rational(c)) {}                 // NOLINT(google-explicit-constructor)
    RatFuncQ(PolyQ num, PolyQ den) { reduce_from(std::move(num), std::move(den)); }
    explicit RatFuncQ(PolyQ num) : num_(std::move(num)), den_{Rational(1)} {}

    static RatFuncQ var() { return RatFuncQ(PolyQ::var()); }

    const PolyQ& num() const { return num_; }
    const PolyQ& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    bool has_pole_at(const Rational& q0) const { return den_.eval(q0).is_zero(); }

    /// Exact value num(q0)/den(q0); throws pole_error at a denominator root.
    Rational eval(const Rational& q0) const {
        const Rational d = den_.eval(q0);
        if (d.is_zero()) throw pole_error("RatFuncQ: pole at q = " + q0.str());
        return num_.eval(q0) / d;
    }

    /// q -> q^d. Substitution preserves coprimality and a monic denominator;
    /// the result is re-reduced regardless.
    RatFuncQ subst_qpow(unsigned long d) const {
        if (d == 0) throw std::domain_error("RatFuncQ::subst_qpow: d must be >= 1");
        if (d == 1) return *this;
        return RatFuncQ(num_.subst_pow(d), den_.subst_pow(d));
    }

    RatFuncQ operator-() const {
        RatFuncQ r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RatFuncQ operator+(const RatFuncQ& a, const RatFuncQ& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const PolyQ g = poly_gcd(a.den_, b.den_);
        const PolyQ bd = b.den_.divexact(g);
        return RatFuncQ(a.num_ * bd + b.num_ * a.den_.divexact(g), a.den_ * bd);
    }
    friend RatFuncQ operator-(const RatFuncQ& a, const RatFuncQ& b) { return a + (-b); }

    friend RatFuncQ operator*(const RatFuncQ& a, const RatFuncQ& b) {
        if (a.is_zero() || b.is_zero()) return {};
        // cross-reduce; the factors stay pairwise coprime, so only the
        // denominator needs re-monicizing
        const PolyQ g1 = poly_gcd(a.num_, b.den_);
        const PolyQ g2 = poly_gcd(b.num_, a.den_);
        RatFuncQ r;
        r.num_ = a.num_.divexact(g1) * b.num_.divexact(g2);
        r.den_ = a.den_.divexact(g2) * b.den_.divexact(g1);
        r.make_den_monic();
        return r;
    }

    friend RatFuncQ operator/(const RatFuncQ& a, const RatFuncQ& b) {
        if (b.is_zero()) throw std::domain_error("RatFuncQ: division by zero");
        RatFuncQ inv;
        inv.num_ = b.den_;
        inv.den_ = b.num_;
        inv.make_den_monic();
        return a * inv;
    }

    RatFuncQ& operator+=(const RatFuncQ& o) { *this = *this + o; return *this; }
    RatFuncQ& operator-=(const RatFuncQ& o) { *this = *this - o; return *this; }
    RatFuncQ& operator*=(const RatFuncQ& o) { *this = *this * o; return *this; }
    RatFuncQ& operator/=(const RatFuncQ& o) { *this = *this / o; return *this; }

    friend bool operator==(const RatFuncQ& a, const RatFuncQ& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFuncQ& a, const RatFuncQ& b) { return !(a == b); }

    /// "num" when the denominator is 1, else "(num)/(den)".
    std::string str(const std::string& var = "q") const {
        if (is_polynomial()) return num_.str(var);
        return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
    }

private:
    void reduce_from(PolyQ num, PolyQ den) {
        if (den.is_zero()) throw std::domain_error("RatFuncQ: zero denominator");
        if (num.is_zero()) {
            num_ = {};
            den_ = PolyQ{Rational(1)};
            return;
        }
        const PolyQ g = poly_gcd(num, den);
        num_ = (g.degree() > 0 || g.lc() != Rational(1)) ? num.divexact(g) : std::move(num);
        den_ = (g.degree() > 0 || g.lc() != Rational(1)) ? den.divexact(g) : std::move(den);
        make_den_monic();
    }

    void make_den_monic() {
        const Rational lead = den_.lc();
        if (lead != Rational(1)) {
            const Rational inv = Rational(1) / lead;
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }

    PolyQ num_;
    PolyQ den_;
};

inline RatFuncQ pow(const RatFuncQ& base, unsigned long e) {
    RatFuncQ r(Rational(1));
    RatFuncQ b = base;
    while (e > 0) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

/// Canonical serialization split: f = scale * N / D with N, D integer
/// polynomials that are jointly primitive and scale the common content.
struct JointContentForm {
    std::vector<Int> num;
    std::vector<Int> den;
    Rational scale;
};

inline JointContentForm joint_content_form(const RatFuncQ& f) {
    if (f.is_zero()) return {{}, {Int(1)}, Rational(1)};
    Int l(1);
    for (const auto& c : f.num().coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    for (const auto& c : f.den().coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    Int g(0);
    auto fold = [&](const PolyQ& p) {
        for (const auto& c : p.coeffs()) {
            Int scaled = c.num() * (l / c.den());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_mpz_t());
        }
    };
    fold(f.num());
    fold(f.den());
    const Rational scale(g, l);
    return {primitive_int(f.num(), scale), primitive_int(f.den(), scale), scale};
}

} // namespace qgen

#endif
