// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Budgets are wall-clock and part of the criterion.

#include <qgen/classical.hpp>
#include <qgen/fermint.hpp>
#include <qgen/qgenocchi.hpp>
#include <qgen/qzeta.hpp>

#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace qgen;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(QGEN_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

double taylor_form(double x, double t, const Rational& q, double tol) {
    const double qd = q.to_double();
    const double reach = 1.0 / (1.0 - qd);
    const double grow = (std::fabs(x) + reach) * std::fabs(t);
    NeumaierSum acc;
    double factorial = 1.0;
    for (unsigned n = 1; n <= 64; ++n) {
        factorial *= n;
        const Rational coeff = qgenocchi_poly_sym(n).poly.eval(q, Rational::from_double(x));
        acc.add(coeff.to_double() * std::pow(t, static_cast<double>(n)) / factorial);
        const double next = (1.0 + qd) * reach * std::pow(grow, static_cast<double>(n)) /
                            factorial * std::fabs(t);
        if (next < tol / 4 && grow / (n + 1) < 0.5) return acc.value();
    }
    throw std::runtime_error("taylor tail bound not reached");
}

bool criterion_classical_table(std::string& detail) {
    const RunResult r = run_cli("classical 12 --format csv");
    if (r.exit_code != 0) {
        detail = "nonzero exit";
        return false;
    }
    std::vector<std::string> lines;
    std::istringstream in(r.out);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    if (lines.size() != 14 || lines[0] != "n,genocchi,bernoulli,zeta_1_minus_n") {
        detail = "unexpected shape";
        return false;
    }
    const std::array<std::string, 13> expect = {"0", "1",    "-1", "0", "1",   "0", "-3",
                                                "0", "17",   "0",  "-155", "0", "2073"};
    for (unsigned n = 0; n <= 12; ++n) {
        const std::string& line = lines[n + 1];
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        const std::string g = line.substr(c1 + 1, c2 - c1 - 1);
        if (line.substr(0, c1) != std::to_string(n) || g != expect[n]) {
            detail = "row " + std::to_string(n) + " = " + g + ", expected " + expect[n];
            return false;
        }
    }
    return true;
}

bool criterion_genocchi_theorem(std::string&) {
    for (unsigned n = 0; n <= 60; ++n) {
        const Rational g = genocchi_via_bernoulli(n);
        if (g != genocchi_via_recurrence(n) || !g.is_integer()) return false;
    }
    return true;
}

bool criterion_addition_appell(std::string& detail) {
    std::vector<QGenocchiNumber> numbers;
    for (unsigned k = 0; k <= 15; ++k) numbers.push_back(qgenocchi_number_sym(k));
    for (unsigned n = 0; n <= 15; ++n) {
        if (addition_expand(n, numbers).poly != qgenocchi_poly_sym(n).poly) {
            detail = "addition n=" + std::to_string(n);
            return false;
        }
        if (n >= 1 && qgenocchi_poly_sym(n).poly.derivative() !=
                          RatFuncQ(Rational(static_cast<long>(n))) *
                              qgenocchi_poly_sym(n - 1).poly) {
            detail = "derivative n=" + std::to_string(n);
            return false;
        }
    }
    return true;
}

bool criterion_q_to_1(std::string& detail) {
    for (unsigned n = 0; n <= 20; ++n) {
        if (q_to_1_limit(qgenocchi_number_sym(n)) != genocchi_via_recurrence(n)) {
            detail = "n=" + std::to_string(n);
            return false;
        }
    }
    return true;
}

bool criterion_explicit_vs_series(std::string& detail) {
    const SeriesConfig cfg{1e-11, 1000000};
    const Rational qs[] = {Rational(3, 10), Rational(1, 2), Rational(9, 10)};
    const Rational xs[] = {Rational(0), Rational(1, 2), Rational(1)};
    double worst = 0;
    for (unsigned n = 0; n <= 10; ++n)
        for (const auto& q : qs)
            for (const auto& x : xs) {
                const Rational partial = qgenocchi_series_exact(n, x, q, cfg).value;
                const Rational exact = qgenocchi_poly_sym(n + 1).poly.eval(q, x) /
                                       Rational(static_cast<long>(n) + 1);
                worst = std::max(worst, std::fabs((partial - exact).to_double()));
            }
    detail = "worst residual " + std::to_string(worst);
    return worst <= 1e-10;
}

bool criterion_fermionic(std::string& detail) {
    const Rational qs[] = {Rational(1, 2), Rational(7, 10)};
    const Rational xs[] = {Rational(0), Rational(1, 2)};
    double worst_agree = 0, worst_resid = 0;
    for (const auto& qr : qs) {
        const double q = qr.to_double();
        const DepthConfig depth = depth_for(q, 1e-12);
        for (const auto& xr : xs) {
            const double x = xr.to_double();
            for (unsigned n = 0; n <= 6; ++n) {
                auto f = [&](double y) {
                    return std::pow(x + qbracket(y, q), static_cast<double>(n));
                };
                const double numeric = fermionic_sum(f, q, depth);
                const Rational exact = qgenocchi_poly_sym(n + 1).poly.eval(qr, xr) /
                                       Rational(static_cast<long>(n) + 1);
                worst_agree = std::max(worst_agree, std::fabs(numeric - exact.to_double()));
                worst_resid = std::max(worst_resid, integral_equation_residual(f, q, depth));
            }
        }
    }
    detail = "worst oracle gap " + std::to_string(worst_agree) +
             ", worst integral-equation residual " + std::to_string(worst_resid);
    return worst_agree <= 1e-8 && worst_resid <= 1e-8;
}

bool criterion_generating_function(std::string& detail) {
    const SeriesConfig cfg{1e-12, 1000000};
    double worst = 0;
    for (double x : {0.0, 0.3})
        for (double t : {0.1, -0.1, 0.2, -0.2})
            for (const auto& q : {Rational(1, 2), Rational(7, 10)}) {
                const double series = generating_function_eval(x, t, q.to_double(), cfg).value;
                const double taylor = taylor_form(x, t, q, 1e-10);
                worst = std::max(worst, std::fabs(series - taylor));
            }
    detail = "worst gap " + std::to_string(worst);
    return worst <= 1e-8;
}

bool criterion_multiplication(std::string& detail) {
    for (unsigned d : {1u, 3u, 5u})
        for (unsigned n = 0; n <= 6; ++n)
            if (!multiplication_check(n, d).is_zero()) {
                detail = "d=" + std::to_string(d) + " n=" + std::to_string(n);
                return false;
            }
    return true;
}

bool criterion_interpolation(std::string& detail) {
    const SeriesConfig cfg{1e-11, 1000000};
    const Rational xs[] = {Rational(1, 4), Rational(1, 2), Rational(1)};
    const Rational qs[] = {Rational(3, 10), Rational(1, 2), Rational(9, 10)};
    double worst = 0;
    for (unsigned n = 0; n <= 8; ++n)
        for (const auto& x : xs)
            for (const auto& q : qs)
                worst = std::max(worst, interpolation_residual(n, x, q, cfg));
    detail = "worst residual " + std::to_string(worst);
    return worst <= 1e-10;
}

bool criterion_reduction(std::string& detail) {
    const SeriesConfig cfg{1e-12, 1000000};
    const Complex ss[] = {{-3, 0}, {-1, 0}, {0, 0}, {2, 0}, {2, 3}};
    double worst = 0;
    for (unsigned F : {1u, 3u, 5u})
        for (unsigned a = 0; a < F; ++a)
            for (const auto& s : ss)
                for (double x : {0.5, 1.0})
                    for (double q : {0.5, 0.7})
                        worst = std::max(worst, reduction_residual({s, x, q}, {a, F}, cfg));
    double worst_cor = 0;
    const Rational xs[] = {Rational(1, 2), Rational(1)};
    const Rational qs[] = {Rational(1, 2), Rational(7, 10)};
    for (unsigned n = 0; n <= 4; ++n)
        for (unsigned F : {1u, 3u, 5u})
            for (unsigned a = 0; a < F; ++a)
                for (const auto& x : xs)
                    for (const auto& q : qs)
                        worst_cor = std::max(
                            worst_cor, reduction_corollary_residual(n, x, q, {a, F}, cfg));
    detail = "worst residual " + std::to_string(worst) + ", corollary " +
             std::to_string(worst_cor);
    return worst <= 1e-10 && worst_cor <= 1e-10;
}

bool criterion_classical_zeta(std::string& detail) {
    const SeriesConfig cfg{1e-11, 1000000};
    const double pi2_6 = std::numbers::pi * std::numbers::pi / 6.0;
    const double gap2 = std::abs(genocchi_zeta_classical({2, 0}, 1.0, cfg).value -
                                 Complex(pi2_6, 0));
    double worst_neg = 0;
    for (unsigned n = 0; n <= 6; ++n)
        for (const auto& x : {Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)}) {
            const Complex accel =
                genocchi_zeta_classical({-static_cast<double>(n), 0}, x.to_double(), cfg).value;
            const Rational exact =
                genocchi_poly(n + 1).eval(x) / Rational(static_cast<long>(n) + 1);
            worst_neg = std::max(worst_neg, std::abs(accel - Complex(exact.to_double(), 0)));
        }
    detail = "pi^2/6 gap " + std::to_string(gap2) + ", worst at s=-n " + std::to_string(worst_neg);
    return gap2 <= 1e-10 && worst_neg <= 1e-8;
}

bool criterion_verify_all(std::string& detail) {
    const RunResult r = run_cli("verify all --format csv");
    detail = "exit " + std::to_string(r.exit_code);
    return r.exit_code == 0;
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* label;
        double budget_seconds;
        std::function<bool(std::string&)> body;
    };
    const std::vector<Criterion> criteria = {
        {1, "classical table reproduction (CLI)", 1.0, criterion_classical_table},
        {2, "Genocchi's theorem, dual route n<=60", 1.0, criterion_genocchi_theorem},
        {3, "addition formula and Appell derivative n<=15", 30.0, criterion_addition_appell},
        {4, "q->1 limit equals classical G_n, n<=20", 30.0, criterion_q_to_1},
        {5, "explicit formula vs series on the grid", 10.0, criterion_explicit_vs_series},
        {6, "fermionic oracle and integral equation", 30.0, criterion_fermionic},
        {7, "generating-function two-forms agreement", 10.0, criterion_generating_function},
        {8, "multiplication formula, d in {1,3,5}, n<=6", 60.0, criterion_multiplication},
        {9, "zeta interpolation at negative integers", 10.0, criterion_interpolation},
        {10, "partial-zeta reduction and its corollary", 30.0, criterion_reduction},
        {11, "classical Genocchi zeta sanity", 10.0, criterion_classical_zeta},
        {12, "cmd_verify all exits 0", 180.0, criterion_verify_all},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        std::string detail;
        bool ok = false;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            ok = c.body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (elapsed > c.budget_seconds) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + std::string("over budget ") +
                      std::to_string(c.budget_seconds) + "s";
        }
        std::printf("[%s] criterion %2d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.label,
                    elapsed, detail.empty() ? "" : " -- ", detail.c_str());
        if (!ok) ++failures;
    }
    if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
