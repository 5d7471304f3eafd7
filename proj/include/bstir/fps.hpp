#pragma once

#include "bstir/rational.hpp"

#include <vector>

namespace bstir {

// Truncated formal power series over Rationals with ordinary coefficients:
// f(x) = c_0 + c_1 x + ... + c_N x^N (mod x^{N+1}). Binary operations
// require equal order; use truncated() to adjust explicitly.
class PowerSeries {
public:
    PowerSeries(int order, std::vector<Rational> coeffs);
    static PowerSeries zero(int order);
    static PowerSeries one(int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& operator[](int n) const { return c_[static_cast<std::size_t>(n)]; }
    Rational& operator[](int n) { return c_[static_cast<std::size_t>(n)]; }

    PowerSeries truncated(int new_order) const;

private:
    explicit PowerSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {}
    std::vector<Rational> c_;
};

PowerSeries fps_add(const PowerSeries& a, const PowerSeries& b);
PowerSeries fps_sub(const PowerSeries& a, const PowerSeries& b);
PowerSeries fps_scale(const Rational& s, const PowerSeries& a);

// Cauchy product truncated at the common order.
PowerSeries fps_mul(const PowerSeries& a, const PowerSeries& b);

// q with fps_mul(q, b) = a through the common order; requires b.c_0 != 0.
PowerSeries fps_div(const PowerSeries& a, const PowerSeries& b);

// log(1 + f) for f with c_0 = 0, via the exact O(N^2) recurrence for
// g' = f'/(1+f), g(0) = 0.
PowerSeries fps_log1p(const PowerSeries& f);

// exp(f) for f with c_0 = 0, via g' = f' g, g(0) = 1.
PowerSeries fps_exp(const PowerSeries& f);

// exp(r * log(f)) for f with c_0 = 1.
PowerSeries fps_pow(const PowerSeries& f, const Rational& r);

// (e^x - 1)/x: c_n = 1/(n+1)!.
PowerSeries series_expm1_over_x(int order);

// log(1+x)/x: c_n = (-1)^n/(n+1).
PowerSeries series_log1p_over_x(int order);

}  // namespace bstir
