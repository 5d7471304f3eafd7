#include "bstir/factorials.hpp"

#include "doctest.h"

#include <stdexcept>

using bstir::binomial;
using bstir::double_factorial;
using bstir::factorial;
using bstir::falling_factorial;
using bstir::Integer;
using bstir::pow2;
using bstir::Rational;
using bstir::rising_factorial;

TEST_CASE("factorial values") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == Integer("2432902008176640000"));
    CHECK_THROWS_AS(factorial(-1), std::domain_error);
}

TEST_CASE("double factorial with the two negative extensions") {
    CHECK(double_factorial(0) == 1);
    CHECK(double_factorial(1) == 1);
    CHECK(double_factorial(2) == 2);
    CHECK(double_factorial(5) == 15);
    CHECK(double_factorial(6) == 48);
    CHECK(double_factorial(9) == 945);
    // the two values the half-integer formulas rely on
    CHECK(double_factorial(-1) == 1);
    CHECK(double_factorial(-3) == -1);
    CHECK_THROWS_AS(double_factorial(-2), std::domain_error);
    CHECK_THROWS_AS(double_factorial(-5), std::domain_error);
}

TEST_CASE("binomial coefficients") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(10, 10) == 1);
    CHECK(binomial(10, 11) == 0);
    CHECK(binomial(10, -1) == 0);
    CHECK(binomial(52, 26) == Integer("495918532948104"));
    CHECK_THROWS_AS(binomial(-1, 0), std::domain_error);

    // Pascal rule on a block of the triangle
    for (long n = 1; n < 12; ++n)
        for (long k = 0; k <= n; ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("falling and rising factorials at rational arguments") {
    CHECK(falling_factorial(Rational(1, 2), 0) == Rational(1));
    CHECK(falling_factorial(Rational(1, 2), 3) == Rational(3, 8));
    CHECK(rising_factorial(Rational(1, 2), 3) == Rational(15, 8));
    CHECK(falling_factorial(Rational(-2), 3) == Rational(-24));
    CHECK(rising_factorial(Rational(-2), 3) == Rational(0));
    CHECK(rising_factorial(Rational(-2), 2) == Rational(2));

    // (x)^(n) = (-1)^n (-x)_n for a few sample points
    const Rational xs[] = {Rational(2, 3), Rational(-5, 4), Rational(7)};
    for (const Rational& x : xs)
        for (int n = 0; n <= 6; ++n) {
            const Rational lhs = rising_factorial(x, n);
            const Rational rhs = falling_factorial(-x, n);
            CHECK(lhs == (n % 2 == 0 ? rhs : -rhs));
        }
}

TEST_CASE("powers of two") {
    CHECK(pow2(0) == 1);
    CHECK(pow2(1) == 2);
    CHECK(pow2(10) == 1024);
    CHECK(pow2(100) == Integer("1267650600228229401496703205376"));
}
