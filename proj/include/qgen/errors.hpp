#ifndef QGEN_ERRORS_HPP
#define QGEN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qgen {

/// Evaluation of a rational function at a root of its denominator.
class pole_error : public std::domain_error {
public:
    explicit pole_error(const std::string& what) : std::domain_error(what) {}
};

/// A truncated series hit its term budget before meeting the tolerance.
/// Carries the best rigorous tail bound achieved.
class truncation_error : public std::runtime_error {
public:
    truncation_error(const std::string& what, double best_bound, long terms)
        : std::runtime_error(what), best_bound_(best_bound), terms_(terms) {}

    double best_bound() const noexcept { return best_bound_; }
    long terms() const noexcept { return terms_; }

private:
    double best_bound_;
    long terms_;
};

} // namespace qgen

#endif
