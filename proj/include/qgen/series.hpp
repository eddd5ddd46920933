#ifndef QGEN_SERIES_HPP
#define QGEN_SERIES_HPP

#include <qgen/errors.hpp>

#include <cmath>
#include <complex>
#include <stdexcept>

namespace qgen {

/// Truncation policy for the numeric series evaluators. q is restricted to
/// the open interval (0,1) throughout.
struct SeriesConfig {
    double tol = 1e-12;
    long max_terms = 1000000;

    void validate() const {
        if (!(tol > 0)) throw std::domain_error("SeriesConfig: tol must be positive");
        if (max_terms < 1) throw std::domain_error("SeriesConfig: max_terms must be >= 1");
    }
};

struct SeriesResult {
    double value = 0;
    double bound = 0; // rigorous tail bound achieved
    long terms = 0;
};

struct SeriesResultC {
    std::complex<double> value{0, 0};
    double bound = 0;
    long terms = 0;
};

inline void check_q_domain(double q) {
    if (!(q > 0.0) || !(q < 1.0))
        throw std::domain_error("q must lie in the open interval (0,1)");
}

/// Neumaier compensated accumulator.
class NeumaierSum {
public:
    void add(double t) {
        const double s = sum_ + t;
        if (std::fabs(sum_) >= std::fabs(t))
            comp_ += (sum_ - s) + t;
        else
            comp_ += (t - s) + sum_;
        sum_ = s;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0;
    double comp_ = 0;
};

class NeumaierSumC {
public:
    void add(const std::complex<double>& t) {
        re_.add(t.real());
        im_.add(t.imag());
    }
    std::complex<double> value() const { return {re_.value(), im_.value()}; }

private:
    NeumaierSum re_;
    NeumaierSum im_;
};

} // namespace qgen

#endif
