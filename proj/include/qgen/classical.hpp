#ifndef QGEN_CLASSICAL_HPP
#define QGEN_CLASSICAL_HPP

#include <qgen/poly.hpp>

#include <mutex>
#include <vector>

namespace qgen {

namespace detail {

/// Grow-only cache filled by a sequential recurrence; exclusive access
/// makes the fill idempotent under concurrent callers.
class SequenceCache {
public:
    template <typename Step>
    Rational get(unsigned n, Step&& step) {
        std::lock_guard<std::mutex> lock(mu_);
        while (values_.size() <= n) values_.push_back(step(values_));
        return values_[n];
    }

private:
    std::mutex mu_;
    std::vector<Rational> values_;
};

} // namespace detail

/// Bernoulli numbers, B_1 = -1/2 convention, from the defining recurrence
/// sum_{k=0}^{n} C(n+1,k) B_k = 0 (n >= 1) with B_0 = 1.
inline Rational bernoulli(unsigned n) {
    static detail::SequenceCache cache;
    return cache.get(n, [](const std::vector<Rational>& prev) {
        const unsigned m = static_cast<unsigned>(prev.size());
        if (m == 0) return Rational(1);
        Rational acc(0);
        for (unsigned k = 0; k < m; ++k) acc += Rational(binomial(m + 1, k)) * prev[k];
        return -acc / Rational(static_cast<long>(m) + 1);
    });
}

/// Genocchi numbers through G_{2n} = 2(1 - 2^{2n}) B_{2n}.
inline Rational genocchi_via_bernoulli(unsigned n) {
    if (n == 0) return Rational(0);
    if (n == 1) return Rational(1);
    if (n % 2 == 1) return Rational(0);
    Int two_n;
    mpz_ui_pow_ui(two_n.get_mpz_t(), 2, n);
    return Rational(2) * Rational(Int(1 - two_n)) * bernoulli(n);
}

/// Genocchi numbers from the recurrence 2 G_n + sum_{k<n} C(n,k) G_k = 2[n=1].
inline Rational genocchi_via_recurrence(unsigned n) {
    static detail::SequenceCache cache;
    return cache.get(n, [](const std::vector<Rational>& prev) {
        const unsigned m = static_cast<unsigned>(prev.size());
        if (m == 0) return Rational(0);
        Rational acc(0);
        for (unsigned k = 0; k < m; ++k) acc += Rational(binomial(m, k)) * prev[k];
        Rational rhs = (m == 1) ? Rational(2) : Rational(0);
        return (rhs - acc) / Rational(2);
    });
}

/// G_n(x) = sum_k C(n,k) G_k x^{n-k}; the zero polynomial for n = 0.
inline PolyQ genocchi_poly(unsigned n) {
    std::vector<Rational> cs(n == 0 ? 0 : n); // degree <= n-1 since G_0 = 0
    for (unsigned k = 1; k <= n; ++k)
        cs[n - k] = Rational(binomial(n, k)) * genocchi_via_recurrence(k);
    return PolyQ(std::move(cs));
}

/// zeta(1 - n) = -B_n / n for n >= 1.
inline Rational riemann_neg(unsigned n) {
    if (n == 0) throw std::domain_error("riemann_neg: n must be >= 1 (s = 1 is a pole)");
    return -bernoulli(n) / Rational(static_cast<long>(n));
}

} // namespace qgen

#endif
