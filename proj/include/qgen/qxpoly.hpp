#ifndef QGEN_QXPOLY_HPP
#define QGEN_QXPOLY_HPP

#include <qgen/ratfunc.hpp>

#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace qgen {

/// Polynomial in x whose coefficients are rational functions of q.
/// Canonical: trailing zero coefficients stripped.
class QXPoly {
public:
    QXPoly() = default;
    explicit QXPoly(std::vector<RatFuncQ> cs) : c_(std::move(cs)) { normalize(); }
    explicit QXPoly(const RatFuncQ& c) { if (!c.is_zero()) c_.push_back(c); }

    static QXPoly var() { return QXPoly(std::vector<RatFuncQ>{RatFuncQ(0L), RatFuncQ(1L)}); }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<RatFuncQ>& coeffs() const { return c_; }
    RatFuncQ coeff(std::size_t k) const { return k < c_.size() ? c_[k] : RatFuncQ(); }

    QXPoly operator-() const {
        QXPoly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend QXPoly operator+(const QXPoly& a, const QXPoly& b) {
        std::vector<RatFuncQ> v(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
        return QXPoly(std::move(v));
    }
    friend QXPoly operator-(const QXPoly& a, const QXPoly& b) { return a + (-b); }

    friend QXPoly operator*(const QXPoly& a, const QXPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<RatFuncQ> v(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        }
        return QXPoly(std::move(v));
    }
    friend QXPoly operator*(const QXPoly& a, const RatFuncQ& s) {
        if (s.is_zero()) return {};
        QXPoly r = a;
        for (auto& c : r.c_) c *= s;
        return r;
    }
    friend QXPoly operator*(const RatFuncQ& s, const QXPoly& a) { return a * s; }

    QXPoly& operator+=(const QXPoly& o) { *this = *this + o; return *this; }
    QXPoly& operator-=(const QXPoly& o) { *this = *this - o; return *this; }

    friend bool operator==(const QXPoly& a, const QXPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const QXPoly& a, const QXPoly& b) { return !(a == b); }

    /// Formal derivative in x.
    QXPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<RatFuncQ> d(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k)
            d[k - 1] = c_[k] * RatFuncQ(Rational(static_cast<long>(k)));
        return QXPoly(std::move(d));
    }

    /// P(alpha*x + beta), expanded and canonicalized.
    QXPoly compose_affine(const RatFuncQ& alpha, const RatFuncQ& beta) const {
        if (is_zero()) return {};
        // Horner in the affine argument
        QXPoly lin(std::vector<RatFuncQ>{beta, alpha});
        QXPoly acc(c_.back());
        for (long k = degree() - 1; k >= 0; --k)
            acc = acc * lin + QXPoly(c_[static_cast<std::size_t>(k)]);
        return acc;
    }

    /// q -> q^d on every coefficient.
    QXPoly subst_qpow(unsigned long d) const {
        std::vector<RatFuncQ> v;
        v.reserve(c_.size());
        for (const auto& c : c_) v.push_back(c.subst_qpow(d));
        return QXPoly(std::move(v));
    }

    /// Exact value at (q0, x0); a coefficient pole reports its index.
    Rational eval(const Rational& q0, const Rational& x0) const {
        Rational acc(0);
        for (long k = degree(); k >= 0; --k) {
            const auto idx = static_cast<std::size_t>(k);
            if (c_[idx].has_pole_at(q0))
                throw pole_error("QXPoly: coefficient " + std::to_string(idx) +
                                 " has a pole at q = " + q0.str());
            acc = acc * x0 + c_[idx].eval(q0);
        }
        return acc;
    }

    /// Every coefficient evaluated at q = q0; pole is a broken invariant here.
    PolyQ eval_coeffs(const Rational& q0) const {
        std::vector<Rational> v;
        v.reserve(c_.size());
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (c_[k].has_pole_at(q0))
                throw std::logic_error("QXPoly: coefficient " + std::to_string(k) +
                                       " unexpectedly has a pole at q = " + q0.str());
            v.push_back(c_[k].eval(q0));
        }
        return PolyQ(std::move(v));
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (long k = degree(); k >= 0; --k) {
            const RatFuncQ& c = c_[static_cast<std::size_t>(k)];
            if (c.is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << c.str() << ")";
            if (k == 1) os << "*x";
            else if (k > 1) os << "*x^" << k;
        }
        return os.str();
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<RatFuncQ> c_;
};

} // namespace qgen

#endif
