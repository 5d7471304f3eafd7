#include "bstir/stirling.hpp"

#include "bstir/factorials.hpp"

#include "doctest.h"

#include <stdexcept>
#include <vector>

using bstir::binomial;
using bstir::diagonal_stirling1;
using bstir::diagonal_stirling2;
using bstir::factorial;
using bstir::Integer;
using bstir::stirling1;
using bstir::stirling2;
using bstir::StirlingTables;

namespace {

// Oracle independent of the table recurrences: the explicit inclusion-
// exclusion formula k! S(n,k) = sum_j (-1)^j C(k,j) (k-j)^n.
Integer stirling2_explicit(int n, int k) {
    Integer acc(0);
    for (int j = 0; j <= k; ++j) {
        Integer power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(k - j),
                      static_cast<unsigned long>(n));
        const Integer term = binomial(k, j) * power;
        acc += (j % 2 == 0) ? term : -term;
    }
    Integer result;
    mpz_divexact(result.get_mpz_t(), acc.get_mpz_t(), factorial(k).get_mpz_t());
    return result;
}

// Second oracle: expand x(x-1)...(x-n+1) by direct polynomial
// multiplication; the coefficient of x^k is s(n,k).
std::vector<Integer> falling_poly(int n) {
    std::vector<Integer> coeffs{Integer(1)};
    for (int i = 0; i < n; ++i) {
        // multiply by (x - i)
        std::vector<Integer> next(coeffs.size() + 1, Integer(0));
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            next[j + 1] += coeffs[j];
            next[j] -= Integer(i) * coeffs[j];
        }
        coeffs = std::move(next);
    }
    return coeffs;
}

}  // namespace

TEST_CASE("second kind matches the inclusion-exclusion formula") {
    for (int n = 0; n <= 14; ++n)
        for (int k = 0; k <= n; ++k) CHECK(stirling2(n, k) == stirling2_explicit(n, k));
}

TEST_CASE("first kind matches the falling-factorial expansion") {
    for (int n = 0; n <= 14; ++n) {
        const std::vector<Integer> coeffs = falling_poly(n);
        for (int k = 0; k <= n; ++k) CHECK(stirling1(n, k) == coeffs[static_cast<std::size_t>(k)]);
    }
}

TEST_CASE("spot values and structural zeros") {
    CHECK(stirling1(0, 0) == 1);
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling1(4, 2) == 11);
    CHECK(stirling1(5, 2) == -50);
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(5, 3) == 25);
    CHECK(stirling1(5, 0) == 0);
    CHECK(stirling2(5, 0) == 0);
    CHECK(stirling1(3, 4) == 0);
    CHECK(stirling2(3, 4) == 0);
    CHECK(stirling2(3, -1) == 0);
    CHECK_THROWS_AS(stirling1(-1, 0), std::domain_error);
}

TEST_CASE("row sums: sum_k |s(n,k)| = n! and sum_k S(n,k) = Bell numbers") {
    const Integer bell[] = {Integer(1), Integer(1),  Integer(2),   Integer(5),
                            Integer(15), Integer(52), Integer(203), Integer(877)};
    for (int n = 0; n <= 7; ++n) {
        Integer abs_sum(0), s2_sum(0);
        for (int k = 0; k <= n; ++k) {
            abs_sum += abs(stirling1(n, k));
            s2_sum += stirling2(n, k);
        }
        CHECK(abs_sum == factorial(n));
        CHECK(s2_sum == bell[n]);
    }
}

TEST_CASE("explicit table object enforces its bound") {
    StirlingTables tables(10);
    CHECK(tables.s1(10, 4) == stirling1(10, 4));
    CHECK(tables.s2(10, 4) == stirling2(10, 4));
    CHECK(tables.s2(4, 7) == 0);
    CHECK_THROWS_AS(tables.s1(11, 2), std::domain_error);
}

TEST_CASE("shared cache grows past its initial size") {
    // partitions into n-2 blocks: one triple, or two disjoint pairs
    CHECK(stirling2(80, 78) == binomial(80, 3) + 3 * binomial(80, 4));
    CHECK(stirling1(80, 79) == -binomial(80, 2));
}

TEST_CASE("diagonal recursions reproduce shifted columns") {
    for (int n = 0; n <= 9; ++n)
        for (int r = 0; r <= 9; ++r) {
            CHECK(diagonal_stirling1(n, r) == stirling1(n + r, r));
            CHECK(diagonal_stirling2(n, r) == stirling2(n + r, r));
        }
}
