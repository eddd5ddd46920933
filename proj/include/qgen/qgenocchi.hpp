#ifndef QGEN_QGENOCCHI_HPP
#define QGEN_QGENOCCHI_HPP

#include <qgen/classical.hpp>
#include <qgen/qbracket.hpp>
#include <qgen/qxpoly.hpp>
#include <qgen/series.hpp>

#include <cmath>
#include <mutex>
#include <optional>
#include <vector>

namespace qgen {

/// G_{n,q} as an exact rational function of q. Pole-free at q = 1 in
/// reduced form; its value there is the classical G_n.
struct QGenocchiNumber {
    unsigned n;
    RatFuncQ value;
};

/// G_{n,q}(x): degree n-1 in x with leading coefficient n (n >= 1),
/// constant coefficient G_{n,q}; the zero polynomial for n = 0.
struct QGenocchiPoly {
    unsigned n;
    QXPoly poly;
};

namespace detail {

/// Shared exact machinery for the explicit formula: the alternating inner
/// sums S_k = sum_j C(k,j) (-1)^j / (1+q^{j+1}) kept as an unreduced
/// numerator/denominator pair, plus memoized numbers and polynomials.
/// One reduction per emitted coefficient.
class ExplicitFormulaTables {
public:
    static ExplicitFormulaTables& instance() {
        static ExplicitFormulaTables t;
        return t;
    }

    RatFuncQ number(unsigned n) {
        std::lock_guard<std::mutex> lock(mu_);
        return number_locked(n);
    }

    QXPoly poly(unsigned n) {
        std::lock_guard<std::mutex> lock(mu_);
        if (polys_.size() <= n) polys_.resize(n + 1);
        if (polys_[n]) return *polys_[n];
        QXPoly p;
        if (n > 0) {
            const unsigned m = n - 1;
            std::vector<RatFuncQ> cs(m + 1);
            for (unsigned k = 0; k <= m; ++k)
                cs[m - k] = coefficient_locked(n, m, k);
            p = QXPoly(std::move(cs));
        }
        polys_[n] = p;
        return p;
    }

private:
    RatFuncQ number_locked(unsigned n) {
        if (numbers_.size() <= n) numbers_.resize(n + 1);
        if (numbers_[n]) return *numbers_[n];
        RatFuncQ g;
        if (n > 0) g = coefficient_locked(n, n - 1, n - 1);
        if (g.den().eval(Rational(1)).is_zero())
            throw std::logic_error("q-Genocchi number has a pole at q = 1 after reduction");
        numbers_[n] = g;
        return g;
    }

    /// Coefficient of x^{m-k} in G_{n,q}(x), m = n-1:
    ///   n * C(m,k) * (1+q) * N_k / ((1-q)^k * D_k).
    RatFuncQ coefficient_locked(unsigned n, unsigned m, unsigned k) {
        ensure_inner(k);
        const PolyQ one_minus_q{Rational(1), Rational(-1)};
        PolyQ num = Rational(Int(static_cast<long>(n)) * binomial(m, k)) *
                    (one_plus_qpow(1) * inner_num_[k]);
        PolyQ den = pow(one_minus_q, k) * pref_[k + 1];
        return RatFuncQ(std::move(num), std::move(den));
    }

    static PolyQ one_plus_qpow(unsigned j) {
        std::vector<Rational> v(j + 1);
        v[0] = 1;
        v[j] = 1;
        return PolyQ(std::move(v));
    }

    void ensure_inner(unsigned k) {
        while (pref_.size() <= k + 1) {
            const unsigned i = static_cast<unsigned>(pref_.size()) - 1;
            pref_.push_back(pref_[i] * one_plus_qpow(i + 1));
        }
        if (inner_num_.size() > k && !inner_num_[k].is_zero()) return;
        if (inner_num_.size() <= k) inner_num_.resize(k + 1);
        // suffix products of (1+q^{j+1}) for j in (k downto 0)
        std::vector<PolyQ> suf(k + 2);
        suf[k + 1] = PolyQ{Rational(1)};
        for (long j = k; j >= 0; --j)
            suf[static_cast<std::size_t>(j)] =
                one_plus_qpow(static_cast<unsigned>(j) + 1) * suf[static_cast<std::size_t>(j) + 1];
        PolyQ acc;
        for (unsigned j = 0; j <= k; ++j) {
            Rational c{binomial(k, j)};
            if (j % 2 == 1) c = -c;
            acc += c * (pref_[j] * suf[j + 1]);
        }
        inner_num_[k] = std::move(acc);
    }

    std::mutex mu_;
    std::vector<PolyQ> pref_{PolyQ{Rational(1)}}; // pref_[i] = prod_{j<i} (1+q^{j+1})
    std::vector<PolyQ> inner_num_;                // N_k
    std::vector<std::optional<RatFuncQ>> numbers_;
    std::vector<std::optional<QXPoly>> polys_;
};

} // namespace detail

/// Exact G_{n,q} from the explicit formula specialized at x = 0.
inline QGenocchiNumber qgenocchi_number_sym(unsigned n) {
    return {n, detail::ExplicitFormulaTables::instance().number(n)};
}

/// Exact G_{n,q}(x) from the explicit double-sum formula.
inline QGenocchiPoly qgenocchi_poly_sym(unsigned n) {
    return {n, detail::ExplicitFormulaTables::instance().poly(n)};
}

/// Umbral addition formula: G_{n,q}(x) = sum_k C(n,k) G_{k,q} x^{n-k},
/// assembled from precomputed numbers for indices 0..n.
inline QGenocchiPoly addition_expand(unsigned n, const std::vector<QGenocchiNumber>& numbers) {
    for (unsigned k = 0; k <= n; ++k) {
        if (k >= numbers.size() || numbers[k].n != k)
            throw std::domain_error("addition_expand: numbers must hold indices 0.." +
                                    std::to_string(n));
    }
    if (n == 0) return {0, QXPoly{}};
    std::vector<RatFuncQ> cs(n); // degree <= n-1 since G_{0,q} = 0
    for (unsigned k = 1; k <= n; ++k)
        cs[n - k] = RatFuncQ(Rational(binomial(n, k))) * numbers[k].value;
    return {n, QXPoly(std::move(cs))};
}

/// Partial sum of G_{n+1,q}(x)/(n+1) = [2]_q sum_m (-1)^m q^m (x+[m]_q)^n with
/// the rigorous tail bound [2]_q q^{M+1}/(1-q) (|x|+1/(1-q))^n.
inline SeriesResult qgenocchi_eval_series(unsigned n, double x, double q,
                                          const SeriesConfig& cfg = {}) {
    check_q_domain(q);
    cfg.validate();
    const double reach = 1.0 / (1.0 - q);
    const double two_q = 1.0 + q;
    const double mag = std::pow(std::fabs(x) + reach, static_cast<double>(n));
    NeumaierSum acc;
    double qm = 1.0;      // q^m
    double bracket = 0.0; // [m]_q
    double sign = 1.0;
    for (long m = 0; m < cfg.max_terms; ++m) {
        acc.add(sign * qm * std::pow(x + bracket, static_cast<double>(n)));
        const double tail = two_q * mag * qm * q * reach; // q^{m+1}/(1-q) scaled
        if (tail <= cfg.tol) return {two_q * acc.value(), tail, m + 1};
        bracket += qm;
        qm *= q;
        sign = -sign;
    }
    const double best = two_q * mag * qm * reach;
    throw truncation_error("qgenocchi_eval_series: term budget exhausted", best, cfg.max_terms);
}

struct ExactSeriesResult {
    Rational value;
    double bound = 0;
    long terms = 0;
};

/// The same partial sum with every term kept as an exact rational, so the
/// reported tail bound is the entire error. On grids like q = 9/10, n = 10
/// the terms reach ~1e9 and double rounding alone would swamp a 1e-10
/// tolerance; this evaluator is what tight cross-checks compare against.
inline ExactSeriesResult qgenocchi_series_exact(unsigned n, const Rational& x, const Rational& q,
                                                const SeriesConfig& cfg = {}) {
    if (!(q > Rational(0)) || !(q < Rational(1)))
        throw std::domain_error("q must lie in the open interval (0,1)");
    cfg.validate();
    const double qd = q.to_double();
    const double reach = 1.0 / (1.0 - qd);
    const double two_q = 1.0 + qd;
    const double mag = std::pow(std::fabs(x.to_double()) + reach, static_cast<double>(n));
    Rational acc(0), qm(1), bracket(0);
    double qm_d = 1.0;
    bool negative = false;
    for (long m = 0; m < cfg.max_terms; ++m) {
        const Rational term = qm * pow(x + bracket, n);
        acc += negative ? -term : term;
        const double tail = two_q * mag * qm_d * qd * reach;
        if (tail <= cfg.tol) return {(Rational(1) + q) * acc, tail, m + 1};
        bracket += qm;
        qm *= q;
        qm_d *= qd;
        negative = !negative;
    }
    throw truncation_error("qgenocchi_series_exact: term budget exhausted",
                           two_q * mag * qm_d * reach, cfg.max_terms);
}

/// Exponential form of the generating function,
/// F_q(x;t) = [2]_q t sum_m (-1)^m q^m e^{(x+[m]_q)t}, truncated rigorously.
inline SeriesResult generating_function_eval(double x, double t, double q,
                                             const SeriesConfig& cfg = {}) {
    check_q_domain(q);
    cfg.validate();
    if (t == 0.0) return {0.0, 0.0, 0};
    const double reach = 1.0 / (1.0 - q);
    const double two_q = 1.0 + q;
    const double mag = std::exp((std::fabs(x) + reach) * std::fabs(t)) * std::fabs(t);
    NeumaierSum acc;
    double qm = 1.0;
    double bracket = 0.0;
    double sign = 1.0;
    for (long m = 0; m < cfg.max_terms; ++m) {
        acc.add(sign * qm * std::exp((x + bracket) * t));
        const double tail = two_q * mag * qm * q * reach;
        if (tail <= cfg.tol) return {two_q * t * acc.value(), tail, m + 1};
        bracket += qm;
        qm *= q;
        sign = -sign;
    }
    const double best = two_q * mag * qm * reach;
    throw truncation_error("generating_function_eval: term budget exhausted", best, cfg.max_terms);
}

/// Exact q -> 1 specialization; recovers the classical number.
inline Rational q_to_1_limit(const QGenocchiNumber& g) {
    if (g.value.has_pole_at(Rational(1)))
        throw std::logic_error("q_to_1_limit: reduced form has a pole at q = 1");
    return g.value.eval(Rational(1));
}

/// Exact q -> 1 specialization of every coefficient; recovers G_n(x).
inline PolyQ q_to_1_limit(const QGenocchiPoly& g) { return g.poly.eval_coeffs(Rational(1)); }

/// LHS - RHS of the multiplication identity
///   G_{n+1,q}(x) = ([d]_q^n/[d]_{-q}) sum_{a<d} (-1)^a q^{a(n+1)}
///                  G_{n+1,q^d}((x+[a]_q)/(q^a [d]_q)),
/// as an exact polynomial; identically zero when the identity holds.
inline QXPoly multiplication_check(unsigned n, unsigned d) {
    if (d == 0 || d % 2 == 0)
        throw std::domain_error("multiplication_check: d must be odd and >= 1");
    const QXPoly lhs = qgenocchi_poly_sym(n + 1).poly;
    const QXPoly sub = lhs.subst_qpow(d); // G_{n+1,q^d}(x)
    const RatFuncQ d_q(qbracket_poly(d));
    const RatFuncQ pref = pow(d_q, n) / qbracket_neg_sym(d);
    QXPoly acc;
    for (unsigned a = 0; a < d; ++a) {
        const RatFuncQ denom(PolyQ::monomial(Rational(1), a) * qbracket_poly(d)); // q^a [d]_q
        const RatFuncQ alpha = RatFuncQ(1L) / denom;
        const RatFuncQ beta = RatFuncQ(qbracket_poly(a)) / denom;
        RatFuncQ weight(PolyQ::monomial(Rational(1), a * (n + 1))); // q^{a(n+1)}
        if (a % 2 == 1) weight = -weight;
        acc += weight * sub.compose_affine(alpha, beta);
    }
    return lhs - pref * acc;
}

} // namespace qgen

#endif
