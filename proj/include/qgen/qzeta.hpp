#ifndef QGEN_QZETA_HPP
#define QGEN_QZETA_HPP

#include <qgen/qgenocchi.hpp>
#include <qgen/series.hpp>

#include <cmath>
#include <complex>
#include <limits>

namespace qgen {

using Complex = std::complex<double>;

/// Evaluation site for the zeta-type series. The series converges for every
/// complex s thanks to the q^m factor, and internally any x > 0 is accepted;
/// the (0,1] restriction of the definition is enforced at the CLI boundary.
struct ZetaPoint {
    Complex s;
    double x = 1.0;
    double q = 0.5;

    void validate() const {
        check_q_domain(q);
        if (!(x > 0.0)) throw std::domain_error("ZetaPoint: x must be positive");
    }
};

/// Residue class a (mod F) selecting the partial sum; F odd, 0 <= a < F.
struct PartialSpec {
    unsigned a = 0;
    unsigned F = 1;

    void validate() const {
        if (F % 2 == 0 || F == 0) throw std::domain_error("PartialSpec: F must be odd");
        if (a >= F) throw std::domain_error("PartialSpec: a must satisfy 0 <= a < F");
    }
};

namespace detail {

inline Complex cpow_pos(double base, const Complex& expo) {
    // principal branch on a positive real base
    return std::exp(expo * std::log(base));
}

inline double zeta_term_envelope(double x, double reach, double sigma) {
    // sup of base^{-sigma} over base in [x, x + reach]
    return std::max(std::pow(x, -sigma), std::pow(x + reach, -sigma));
}

} // namespace detail

/// zeta_q(s, x) = [2]_q sum_m (-1)^m q^m (x + [m]_q)^{-s}, truncated with the
/// rigorous tail bound [2]_q q^{M+1}/(1-q) * max(x^{-Re s}, (x+1/(1-q))^{-Re s}).
inline SeriesResultC zeta_q(const ZetaPoint& pt, const SeriesConfig& cfg = {}) {
    pt.validate();
    cfg.validate();
    const double q = pt.q;
    const double reach = 1.0 / (1.0 - q);
    const double envelope = detail::zeta_term_envelope(pt.x, reach, pt.s.real());
    const double two_q = 1.0 + q;
    NeumaierSumC acc;
    double qm = 1.0;
    double bracket = 0.0;
    double sign = 1.0;
    for (long m = 0; m < cfg.max_terms; ++m) {
        acc.add(sign * qm * detail::cpow_pos(pt.x + bracket, -pt.s));
        const double tail = two_q * envelope * qm * q * reach;
        if (tail <= cfg.tol) return {two_q * acc.value(), tail, m + 1};
        bracket += qm;
        qm *= q;
        sign = -sign;
    }
    throw truncation_error("zeta_q: term budget exhausted", two_q * envelope * qm * reach,
                           cfg.max_terms);
}

/// | zeta_q(-n, x) - G_{n+1,q}(x)/(n+1) |, the interpolation property.
/// At s = -n the zeta series has exact rational terms, so the truncated sum
/// is carried exactly and only the tail bound separates the two sides.
inline double interpolation_residual(unsigned n, const Rational& x, const Rational& q,
                                     const SeriesConfig& cfg = {}) {
    const Rational series = qgenocchi_series_exact(n, x, q, cfg).value;
    const Rational exact = qgenocchi_poly_sym(n + 1).poly.eval(q, x) /
                           Rational(static_cast<long>(n) + 1);
    return std::fabs((series - exact).to_double());
}

/// H_q(s, x : a, F): the zeta-type series restricted to m == a (mod F) with
/// m > 0 honored literally (a = 0 starts at m = F).
inline SeriesResultC partial_zeta_q(const ZetaPoint& pt, const PartialSpec& spec,
                                    const SeriesConfig& cfg = {}) {
    pt.validate();
    spec.validate();
    cfg.validate();
    const double q = pt.q;
    const double reach = 1.0 / (1.0 - q);
    const double envelope = detail::zeta_term_envelope(pt.x, reach, pt.s.real());
    const double two_q = 1.0 + q;
    const double ratio_f = std::pow(q, static_cast<double>(spec.F));
    NeumaierSumC acc;
    unsigned long m = (spec.a == 0) ? spec.F : spec.a;
    long terms = 0;
    while (terms < cfg.max_terms) {
        const double bracket = qbracket(static_cast<double>(m), q);
        const double qm = std::pow(q, static_cast<double>(m));
        const double sign = (m % 2 == 0) ? 1.0 : -1.0;
        acc.add(sign * qm * detail::cpow_pos(pt.x + bracket, -pt.s));
        ++terms;
        const double tail = two_q * envelope * qm * ratio_f / (1.0 - ratio_f);
        if (tail <= cfg.tol) return {two_q * acc.value(), tail, terms};
        m += spec.F;
    }
    throw truncation_error("partial_zeta_q: term budget exhausted",
                           two_q * envelope * std::pow(q, static_cast<double>(m)) / (1.0 - ratio_f),
                           cfg.max_terms);
}

/// Reduced form of the partial sum,
///   (-1)^a q^{a(1-s)} [2]_q / ([F]_q^s [2]_{q^F}) * zeta_{q^F}(s, (x+[a]_q)/(q^a [F]_q)),
/// under the same m > 0 convention as the partial sum (the a = 0 class drops
/// the m = 0 term from both sides).
inline SeriesResultC partial_zeta_reduced(const ZetaPoint& pt, const PartialSpec& spec,
                                          const SeriesConfig& cfg = {}) {
    pt.validate();
    spec.validate();
    const double q = pt.q;
    const double qa = std::pow(q, static_cast<double>(spec.a));
    const double bracket_a = qbracket(static_cast<double>(spec.a), q);
    const double bracket_f = qbracket(static_cast<double>(spec.F), q);
    const double qf = std::pow(q, static_cast<double>(spec.F));
    const double shifted_x = (pt.x + bracket_a) / (qa * bracket_f);
    const SeriesResultC inner = zeta_q({pt.s, shifted_x, qf}, cfg);
    const double par = (spec.a % 2 == 0) ? 1.0 : -1.0;
    const Complex factor = par * detail::cpow_pos(q, static_cast<double>(spec.a) * (1.0 - pt.s)) *
                           (1.0 + q) /
                           (detail::cpow_pos(bracket_f, pt.s) * (1.0 + qf));
    Complex value = factor * inner.value;
    if (spec.a == 0) value -= (1.0 + q) * detail::cpow_pos(pt.x, -pt.s);
    return {value, std::abs(factor) * inner.bound, inner.terms};
}

/// |LHS - RHS| of the reduction theorem, both sides via this module.
inline double reduction_residual(const ZetaPoint& pt, const PartialSpec& spec,
                                 const SeriesConfig& cfg = {}) {
    const SeriesResultC lhs = partial_zeta_q(pt, spec, cfg);
    const SeriesResultC rhs = partial_zeta_reduced(pt, spec, cfg);
    return std::abs(lhs.value - rhs.value);
}

/// s = -n corollary of the reduction theorem with an exact right-hand side:
///   H_q(-n, x : a, F) = (-1)^a q^{a(n+1)} [2]_q [F]_q^n / [2]_{q^F}
///                       * G_{n+1,q^F}((x+[a]_q)/(q^a [F]_q)) / (n+1).
/// Returns |numeric partial sum - exact corollary value|.
inline double reduction_corollary_residual(unsigned n, const Rational& x, const Rational& q,
                                           const PartialSpec& spec, const SeriesConfig& cfg = {}) {
    spec.validate();
    const Rational qa = pow(q, spec.a);
    const Rational qf = pow(q, spec.F);
    auto bracket_exact = [&](unsigned m) {
        Rational acc(0), p(1);
        for (unsigned i = 0; i < m; ++i) {
            acc += p;
            p *= q;
        }
        return acc;
    };
    const Rational shifted_x = (x + bracket_exact(spec.a)) / (qa * bracket_exact(spec.F));
    const QXPoly poly_f = qgenocchi_poly_sym(n + 1).poly.subst_qpow(spec.F);
    Rational rhs = poly_f.eval(q, shifted_x) / Rational(static_cast<long>(n) + 1);
    rhs *= pow(q, spec.a * (n + 1)) * (Rational(1) + q) * pow(bracket_exact(spec.F), n) /
           (Rational(1) + qf);
    if (spec.a % 2 == 1) rhs = -rhs;
    if (spec.a == 0) rhs -= (Rational(1) + q) * pow(x, n); // m = 0 term, m > 0 convention
    const ZetaPoint pt{Complex(-static_cast<double>(n), 0.0), x.to_double(), q.to_double()};
    const SeriesResultC lhs = partial_zeta_q(pt, spec, cfg);
    return std::abs(lhs.value - Complex(rhs.to_double(), 0.0));
}

namespace detail {

/// Chebyshev-weight acceleration of sum_k (-1)^k a_k (Cohen, Rodriguez
/// Villegas, Zagier style).
template <typename TermFn>
Complex crvz_accelerate(TermFn&& term, int degree) {
    double d = std::pow(3.0 + std::sqrt(8.0), degree);
    d = (d + 1.0 / d) / 2.0;
    double b = -1.0;
    double c = -d;
    NeumaierSumC acc;
    for (int k = 0; k < degree; ++k) {
        c = b - c;
        acc.add(c * term(k));
        b *= (k + degree) * (k - degree) / ((k + 0.5) * (k + 1.0));
    }
    return acc.value() / d;
}

/// The same scheme in exact arithmetic for polynomial terms a_k = (x+k)^p.
/// The normalizer d = ((3+sqrt 8)^n + (3-sqrt 8)^n)/2 is the integer T_n(3)
/// and the b-recurrence stays rational, so no rounding enters at all; this
/// is what reaches the regularized value at negative integer s cleanly.
inline Rational crvz_accelerate_exact(const Rational& x, unsigned p, int degree) {
    Int d_prev(1), d(3); // T_0(3), T_1(3)
    for (int k = 1; k < degree; ++k) {
        Int next = 6 * d - d_prev;
        d_prev = d;
        d = next;
    }
    if (degree == 0) d = 1;
    Rational b(-1);
    Rational c = -Rational(d);
    Rational acc(0);
    for (int k = 0; k < degree; ++k) {
        c = b - c;
        acc += c * pow(x + Rational(k), p);
        b *= Rational(Int(2L * (k + degree)) * Int(k - degree),
                      Int(2L * k + 1) * Int(k + 1));
    }
    return acc / Rational(d);
}

} // namespace detail

/// Classical Genocchi zeta 2 sum_m (-1)^m (x+m)^{-s} by convergence
/// acceleration; degrees are raised until two runs agree within tol.
/// Negative integer s switches to the exact-weight variant, everything else
/// runs in doubles with detection of the rounding floor.
inline SeriesResultC genocchi_zeta_classical(const Complex& s, double x,
                                             const SeriesConfig& cfg = {}) {
    if (!(x > 0.0)) throw std::domain_error("genocchi_zeta_classical: x must be positive");
    cfg.validate();

    const bool neg_int_s = s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real());
    if (neg_int_s) {
        const auto p = static_cast<unsigned>(-s.real());
        const Rational xr = Rational::from_double(x);
        Rational prev = detail::crvz_accelerate_exact(xr, p, 16);
        long evals = 16;
        for (int degree = 24; degree <= 128; degree += 8) {
            const Rational cur = detail::crvz_accelerate_exact(xr, p, degree);
            evals += degree;
            const double gap = std::fabs((cur - prev).to_double()) * 2.0;
            if (gap <= cfg.tol) return {Complex(2.0 * cur.to_double(), 0.0), gap, evals};
            prev = cur;
        }
        throw truncation_error("genocchi_zeta_classical: acceleration degree exhausted",
                               std::fabs((prev).to_double()), evals);
    }

    auto term = [&](int k) { return detail::cpow_pos(x + k, -s); };
    Complex prev = 2.0 * detail::crvz_accelerate(term, 8);
    long evals = 8;
    double best_gap = std::numeric_limits<double>::infinity();
    int rises = 0;
    for (int degree = 16; degree <= 300; degree += degree / 2) {
        const Complex cur = 2.0 * detail::crvz_accelerate(term, degree);
        evals += degree;
        const double gap = std::abs(cur - prev);
        if (gap <= cfg.tol) return {cur, gap, evals};
        if (gap < best_gap) {
            best_gap = gap;
            rises = 0;
        } else if (++rises >= 2) {
            break; // rounding floor: gaps stopped improving
        }
        prev = cur;
    }
    throw truncation_error("genocchi_zeta_classical: acceleration degree exhausted", best_gap,
                           evals);
}

} // namespace qgen

#endif
