#include <qgen/classical.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace qgen;

TEST_CASE("Bernoulli numbers from the defining recurrence") {
    CHECK(bernoulli(0) == Rational(1));
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(3) == Rational(0));
    CHECK(bernoulli(4) == Rational(-1, 30));
    CHECK(bernoulli(12) == Rational(-691, 2730));
    for (unsigned k = 1; k <= 15; ++k) CHECK(bernoulli(2 * k + 1) == Rational(0));
}

TEST_CASE("Genocchi numbers via Genocchi's theorem") {
    CHECK(genocchi_via_bernoulli(0) == Rational(0));
    CHECK(genocchi_via_bernoulli(1) == Rational(1));
    CHECK(genocchi_via_bernoulli(7) == Rational(0));
    CHECK(genocchi_via_bernoulli(8) == Rational(17));
    CHECK(genocchi_via_bernoulli(12) == Rational(2073));
}

TEST_CASE("Genocchi numbers via the recurrence") {
    CHECK(genocchi_via_recurrence(1) == Rational(1));
    CHECK(genocchi_via_recurrence(2) == Rational(-1));
    CHECK(genocchi_via_recurrence(4) == Rational(1));
    CHECK(genocchi_via_recurrence(6) == Rational(-3));
    CHECK(genocchi_via_recurrence(10) == Rational(-155));
    CHECK(genocchi_via_recurrence(12) == Rational(2073));
}

TEST_CASE("the two Genocchi routes agree and give integers") {
    for (unsigned n = 0; n <= 60; ++n) {
        const Rational g = genocchi_via_recurrence(n);
        CHECK(g == genocchi_via_bernoulli(n));
        CHECK(g.is_integer());
    }
}

TEST_CASE("even-index Genocchi signs alternate") {
    for (unsigned k = 1; k <= 30; ++k)
        CHECK(genocchi_via_recurrence(2 * k).sign() == ((k % 2 == 0) ? 1 : -1));
}

TEST_CASE("Genocchi polynomials") {
    CHECK(genocchi_poly(0).is_zero());
    CHECK(genocchi_poly(1) == PolyQ{Rational(1)});
    CHECK(genocchi_poly(2) == PolyQ{Rational(-1), Rational(2)}); // 2x - 1

    SECTION("value at 0 and the Appell derivative") {
        for (unsigned n = 1; n <= 20; ++n) {
            CHECK(genocchi_poly(n).eval(Rational(0)) == genocchi_via_recurrence(n));
            CHECK(genocchi_poly(n).derivative() ==
                  Rational(static_cast<long>(n)) * genocchi_poly(n - 1));
        }
    }
}

TEST_CASE("zeta at nonpositive integers via Bernoulli") {
    CHECK(riemann_neg(1) == Rational(1, 2));
    CHECK(riemann_neg(2) == Rational(-1, 12));
    CHECK(riemann_neg(3) == Rational(0));
    CHECK_THROWS_AS(riemann_neg(0), std::domain_error);
}
