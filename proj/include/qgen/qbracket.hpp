#ifndef QGEN_QBRACKET_HPP
#define QGEN_QBRACKET_HPP

#include <qgen/ratfunc.hpp>
#include <qgen/series.hpp>

#include <cmath>

namespace qgen {

/// [x]_q = (1 - q^x) / (1 - q) for real x, q in (0,1).
inline double qbracket(double x, double q) {
    check_q_domain(q);
    return (1.0 - std::pow(q, x)) / (1.0 - q);
}

/// 1 + q + ... + q^{m-1} as a polynomial; 0 for m = 0.
inline PolyQ qbracket_poly(unsigned m) {
    std::vector<Rational> v(m, Rational(1));
    return PolyQ(std::move(v));
}

/// [m]_q as an exact rational function (already polynomial).
struct QBracketSym {
    unsigned m;
    RatFuncQ value;
};

inline QBracketSym qbracket_sym(unsigned m) { return {m, RatFuncQ(qbracket_poly(m))}; }

/// [m]_{-q} = (1 - (-q)^m) / (1 + q), reduced.
inline RatFuncQ qbracket_neg_sym(unsigned m) {
    std::vector<Rational> num(m + 1);
    num[0] = 1;
    if (m > 0) num[m] = (m % 2 == 0) ? Rational(-1) : Rational(1);
    else num[0] = 0; // 1 - (-q)^0
    return RatFuncQ(PolyQ(std::move(num)), PolyQ{Rational(1), Rational(1)});
}

/// [m]_{-q} evaluated numerically for integer m >= 0.
inline double qbracket_neg(double m, double q) {
    check_q_domain(q);
    const double sign = (std::fmod(m, 2.0) == 0.0) ? 1.0 : -1.0;
    return (1.0 - sign * std::pow(q, m)) / (1.0 + q);
}

} // namespace qgen

#endif
