#ifndef QGEN_FERMINT_HPP
#define QGEN_FERMINT_HPP

#include <qgen/series.hpp>

#include <cmath>
#include <concepts>
#include <stdexcept>

namespace qgen {

/// Finite truncation depth p^N for the alternating-weight integral sums.
struct DepthConfig {
    unsigned p = 3; // odd prime
    unsigned N = 8;

    static constexpr unsigned long budget = 10000000; // p^N summation guard

    unsigned long point_count() const {
        if (p < 3 || p % 2 == 0 || !is_prime(p))
            throw std::domain_error("DepthConfig: p must be an odd prime");
        if (N < 1) throw std::domain_error("DepthConfig: N must be >= 1");
        unsigned long count = 1;
        for (unsigned i = 0; i < N; ++i) {
            if (count > budget / p)
                throw std::domain_error("DepthConfig: p^N exceeds the summation budget");
            count *= p;
        }
        return count;
    }

    static bool is_prime(unsigned long v) {
        if (v < 2) return false;
        for (unsigned long f = 2; f * f <= v; ++f)
            if (v % f == 0) return false;
        return true;
    }
};

/// Smallest depth with q^(p^N) < eps, within the summation budget.
inline DepthConfig depth_for(double q, double eps, unsigned p = 3) {
    check_q_domain(q);
    DepthConfig d{p, 1};
    while (true) {
        const double pn = std::pow(static_cast<double>(p), static_cast<double>(d.N));
        if (std::pow(q, pn) < eps) return d;
        ++d.N;
        d.point_count(); // throws once the budget is crossed
    }
}

/// S_N = (1/[p^N]_{-q}) sum_{y<p^N} f(y) (-q)^y. For q in (0,1) this tends,
/// as N grows, to [2]_q sum_m (-1)^m q^m f(m).
template <std::invocable<double> F>
double fermionic_sum(F&& f, double q, const DepthConfig& depth) {
    check_q_domain(q);
    const unsigned long count = depth.point_count();
    NeumaierSum acc;
    double w = 1.0; // (-q)^y
    for (unsigned long y = 0; y < count; ++y) {
        acc.add(f(static_cast<double>(y)) * w);
        w *= -q;
        if (w == 0.0) break; // remaining weights underflow to exact zeros
    }
    // [p^N]_{-q} = (1 + q^{p^N}) / (1 + q) for odd p^N
    const double normalizer = (1.0 + std::pow(q, static_cast<double>(count))) / (1.0 + q);
    return acc.value() / normalizer;
}

/// Residual of the integral equation q I(f(.+1)) + I(f) = [2]_q f(0) at
/// finite depth; tends to 0 as N grows.
template <std::invocable<double> F>
double integral_equation_residual(F&& f, double q, const DepthConfig& depth) {
    const double shifted = fermionic_sum([&](double y) { return f(y + 1.0); }, q, depth);
    const double plain = fermionic_sum(f, q, depth);
    return std::fabs(q * shifted + plain - (1.0 + q) * f(0.0));
}

} // namespace qgen

#endif
