#include <qgen/fermint.hpp>
#include <qgen/qgenocchi.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace qgen;

TEST_CASE("depth validation") {
    CHECK((DepthConfig{3, 4}.point_count()) == 81);
    CHECK_THROWS_AS((DepthConfig{2, 3}.point_count()), std::domain_error);  // even
    CHECK_THROWS_AS((DepthConfig{9, 3}.point_count()), std::domain_error);  // composite
    CHECK_THROWS_AS((DepthConfig{3, 15}.point_count()), std::domain_error); // 3^15 > 1e7
    CHECK_THROWS_AS((DepthConfig{3, 0}.point_count()), std::domain_error);

    SECTION("depth_for reaches the requested decay") {
        const DepthConfig d = depth_for(0.5, 1e-12);
        CHECK(std::pow(0.5, std::pow(3.0, static_cast<double>(d.N))) < 1e-12);
        CHECK(d.N == 4);
        const DepthConfig d7 = depth_for(0.7, 1e-12);
        CHECK(std::pow(0.7, std::pow(3.0, static_cast<double>(d7.N))) < 1e-12);
    }
}

TEST_CASE("constant integrand: partial geometric sum cancels the normalizer") {
    // sum_{y<p^N} (-q)^y is exactly [p^N]_{-q}, so the quotient is 1 at every depth
    for (double q : {0.3, 0.5, 0.9})
        for (unsigned N : {1u, 4u, 8u}) {
            const double v = fermionic_sum([](double) { return 1.0; }, q, {3, N});
            CHECK(v == Catch::Approx(1.0).margin(1e-13));
        }
}

TEST_CASE("zeroth moment equals G_{1,q} = 1") {
    const double q = 0.5;
    const double v = fermionic_sum(
        [&](double y) { return std::pow(0.25 + qbracket(y, q), 0.0); }, q, {3, 6});
    CHECK(v == Catch::Approx(1.0).margin(1e-13));
}

TEST_CASE("first moment matches the series oracle") {
    const double v =
        fermionic_sum([](double y) { return qbracket(y, 0.5); }, 0.5, {3, 10});
    const double series = qgenocchi_eval_series(1, 0.0, 0.5, {1e-14, 1000000}).value;
    CHECK(v == Catch::Approx(series).margin(1e-8));
    CHECK(v == Catch::Approx(-0.4).margin(1e-8)); // G_{2,q}/2 at q = 1/2
}

TEST_CASE("moments up to 6 agree with the symbolic polynomials") {
    const Rational qs[] = {Rational(1, 2), Rational(7, 10)};
    const Rational xs[] = {Rational(0), Rational(1, 2)};
    for (const auto& qr : qs) {
        const double q = qr.to_double();
        const DepthConfig depth = depth_for(q, 1e-12);
        for (const auto& xr : xs)
            for (unsigned n = 0; n <= 6; ++n) {
                const double x = xr.to_double();
                const double v = fermionic_sum(
                    [&](double y) { return std::pow(x + qbracket(y, q), static_cast<double>(n)); },
                    q, depth);
                const Rational exact = qgenocchi_poly_sym(n + 1).poly.eval(qr, xr) /
                                       Rational(static_cast<long>(n) + 1);
                CHECK(v == Catch::Approx(exact.to_double()).margin(1e-8));
            }
    }
}

TEST_CASE("integral equation residual") {
    SECTION("constant integrand is exact up to rounding") {
        const double r = integral_equation_residual([](double) { return 2.5; }, 0.5, {3, 6});
        CHECK(r <= 1e-13);
    }
    SECTION("first bracket moment") {
        const double r = integral_equation_residual(
            [](double y) { return qbracket(y, 0.5); }, 0.5, {3, 12});
        CHECK(r <= 1e-8);
    }
    SECTION("shifted square at slower decay") {
        const double r = integral_equation_residual(
            [](double y) {
                const double b = 0.3 + qbracket(y, 0.7);
                return b * b;
            },
            0.7, {3, 14});
        CHECK(r <= 1e-6);
    }
}

TEST_CASE("successive depths collapse super-geometrically") {
    for (double q : {0.5, 0.7}) {
        auto f = [q](double y) {
            const double b = 0.3 + qbracket(y, q);
            return b * b;
        };
        const double big = 0.3 + 1.0 / (1.0 - q);
        const double scale = 8.0 * big * big;
        double prev = fermionic_sum(f, q, {3, 1});
        for (unsigned N = 1; N <= 4; ++N) {
            const double cur = fermionic_sum(f, q, {3, N + 1});
            const double allowance =
                scale * std::pow(q, std::pow(3.0, static_cast<double>(N))) + 1e-12;
            CHECK(std::fabs(cur - prev) <= allowance);
            prev = cur;
        }
    }
}

TEST_CASE("normalizer agrees with its closed form") {
    for (double q : {0.3, 0.5, 0.9}) {
        unsigned long pn = 1;
        for (unsigned N = 1; N <= 8; ++N) {
            pn *= 3;
            const double closed = (1.0 + std::pow(q, static_cast<double>(pn))) / (1.0 + q);
            CHECK(qbracket_neg(static_cast<double>(pn), q) ==
                  Catch::Approx(closed).margin(1e-14));
        }
    }
}
