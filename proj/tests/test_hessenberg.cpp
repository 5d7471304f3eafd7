#include "bstir/hessenberg.hpp"

#include "bstir/factorials.hpp"
#include "bstir/fps.hpp"

#include "doctest.h"

#include <cstdint>
#include <stdexcept>
#include <vector>

using bstir::DerivativePair;
using bstir::det_elimination;
using bstir::det_recursive;
using bstir::DetStats;
using bstir::factorial;
using bstir::fps_div;
using bstir::HessenbergMatrix;
using bstir::PowerSeries;
using bstir::ratio_derivative;
using bstir::ratio_matrix;
using bstir::Rational;

namespace {

HessenbergMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    HessenbergMatrix m(static_cast<int>(rows.size()));
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j <= i + 1 && j < m.size(); ++j)
            m.set(i, j, Rational(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
    return m;
}

}  // namespace

TEST_CASE("storage respects the Hessenberg profile") {
    HessenbergMatrix m(4);
    m.set(0, 1, Rational(5));
    m.set(3, 0, Rational(-2));
    CHECK(m.at(0, 1) == Rational(5));
    CHECK(m.at(3, 0) == Rational(-2));
    CHECK(m.at(0, 2) == Rational(0));  // structural zero is readable
    CHECK(m.at(0, 3) == Rational(0));
    CHECK_THROWS_AS(m.set(0, 2, Rational(1)), std::domain_error);
    CHECK_THROWS_AS(m.at(4, 0), std::out_of_range);
    CHECK_THROWS_AS(m.at(0, 4), std::out_of_range);
}

TEST_CASE("small determinants by hand") {
    CHECK(det_elimination(HessenbergMatrix(0)) == Rational(1));
    CHECK(det_recursive(HessenbergMatrix(0)) == Rational(1));

    HessenbergMatrix one(1);
    one.set(0, 0, Rational(7, 3));
    CHECK(det_elimination(one) == Rational(7, 3));
    CHECK(det_recursive(one) == Rational(7, 3));

    const HessenbergMatrix two = from_rows({{3, 1}, {4, 2}});
    CHECK(det_elimination(two) == Rational(2));
    CHECK(det_recursive(two) == Rational(2));

    // det = 1*(5*9-6*8) - 2*(4*9-6*7) + 0 (third column above superdiagonal)
    const HessenbergMatrix three = from_rows({{1, 2, 0}, {4, 5, 6}, {7, 8, 9}});
    CHECK(det_elimination(three) == Rational(9));
    CHECK(det_recursive(three) == Rational(9));
}

TEST_CASE("elimination survives zero pivots") {
    // leading entry zero forces a row swap
    const HessenbergMatrix m = from_rows({{0, 2, 0}, {3, 0, 1}, {5, 1, 4}});
    const Rational expected = det_recursive(m);
    CHECK(det_elimination(m) == expected);
    CHECK(expected == Rational(-14));  // -2 * det({{3,1},{5,4}})

    // singular matrix
    const HessenbergMatrix s = from_rows({{1, 2}, {2, 4}});
    CHECK(det_elimination(s) == Rational(0));
    CHECK(det_recursive(s) == Rational(0));
}

TEST_CASE("both algorithms agree on pseudorandom profiles") {
    std::uint64_t state = 12345;
    auto next = [&state]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<long>((state >> 33) % 13) - 6;
    };
    for (int size = 2; size <= 9; ++size) {
        HessenbergMatrix m(size);
        for (int i = 0; i < size; ++i)
            for (int j = 0; j <= i + 1 && j < size; ++j) m.set(i, j, Rational(next(), 1 + (i + j) % 3));
        DetStats se, sr;
        const Rational de = det_elimination(m, &se);
        const Rational dr = det_recursive(m, &sr);
        CHECK(de == dr);
        CHECK(se.multiplications > 0);
        CHECK(sr.multiplications > 0);
    }
}

TEST_CASE("ratio matrices for the four B_4 specializations match their printed form") {
    auto check_rows = [](const HessenbergMatrix& m, const std::vector<std::vector<Rational>>& rows) {
        REQUIRE(m.size() == static_cast<int>(rows.size()));
        for (int i = 0; i < m.size(); ++i)
            for (int j = 0; j < m.size(); ++j)
                CHECK(m.at(i, j) == rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    };
    const Rational O(0), I(1);

    // p = sinh, q = cosh
    const DerivativePair tanh_pair{{O, I, O, I}, {I, O, I, O}};
    const HessenbergMatrix mt = ratio_matrix(tanh_pair, 3);
    check_rows(mt, {{O, I, O, O}, {I, O, I, O}, {O, I, O, I}, {I, O, Rational(3), O}});
    CHECK(det_recursive(mt) == Rational(2));
    CHECK(ratio_derivative(tanh_pair, 3) == Rational(-2));

    // p = sin, q = cos
    const DerivativePair tan_pair{{O, I, O, -I}, {I, O, -I, O}};
    check_rows(ratio_matrix(tan_pair, 3),
               {{O, I, O, O}, {I, O, I, O}, {O, -I, O, I}, {-I, O, Rational(-3), O}});

    // p = e^x, q = e^x + 1
    const DerivativePair log_pair{{I, I, I, I}, {Rational(2), I, I, I}};
    const HessenbergMatrix ml = ratio_matrix(log_pair, 3);
    check_rows(ml, {{I, Rational(2), O, O},
                    {I, I, Rational(2), O},
                    {I, I, Rational(2), Rational(2)},
                    {I, I, Rational(3), Rational(3)}});
    CHECK(det_recursive(ml) == Rational(2));

    // p-derivs 1/(i+2), q-derivs 1/(i+1)
    const DerivativePair int_pair{
        {Rational(1, 2), Rational(1, 3), Rational(1, 4), Rational(1, 5)},
        {I, Rational(1, 2), Rational(1, 3), Rational(1, 4)}};
    const HessenbergMatrix mi = ratio_matrix(int_pair, 3);
    check_rows(mi, {{Rational(1, 2), I, O, O},
                    {Rational(1, 3), Rational(1, 2), I, O},
                    {Rational(1, 4), Rational(1, 3), I, I},
                    {Rational(1, 5), Rational(1, 4), I, Rational(3, 2)}});
    CHECK(det_recursive(mi) == Rational(1, 120));
}

TEST_CASE("ratio derivative against an independent series quotient") {
    // p = e^x, q = 1: the k-th derivative of p/q is 1 for every k
    DerivativePair exp_pair;
    for (int i = 0; i <= 6; ++i) {
        exp_pair.p_derivs.emplace_back(1);
        exp_pair.q_derivs.emplace_back(i == 0 ? 1 : 0);
    }
    for (int k = 0; k <= 5; ++k) CHECK(ratio_derivative(exp_pair, k) == Rational(1));

    // pseudorandom p, q checked against the power-series quotient
    std::uint64_t state = 99;
    auto next = [&state]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<long>((state >> 33) % 11) - 5;
    };
    for (int trial = 0; trial < 10; ++trial) {
        const int k = 1 + trial % 7;
        DerivativePair dp;
        for (int i = 0; i <= k; ++i) {
            dp.p_derivs.emplace_back(next());
            dp.q_derivs.emplace_back(next());
        }
        if (dp.q_derivs[0].is_zero()) dp.q_derivs[0] = Rational(3);

        PowerSeries p = PowerSeries::zero(k), q = PowerSeries::zero(k);
        for (int i = 0; i <= k; ++i) {
            p[i] = dp.p_derivs[static_cast<std::size_t>(i)] / Rational(factorial(i));
            q[i] = dp.q_derivs[static_cast<std::size_t>(i)] / Rational(factorial(i));
        }
        const Rational expected = fps_div(p, q)[k] * Rational(factorial(k));
        CHECK(ratio_derivative(dp, k) == expected);
    }

    DerivativePair singular{{Rational(1)}, {Rational(0)}};
    CHECK_THROWS_AS(ratio_derivative(singular, 0), std::domain_error);
    DerivativePair short_lists{{Rational(1)}, {Rational(1)}};
    CHECK_THROWS_AS(ratio_matrix(short_lists, 2), std::domain_error);
}
