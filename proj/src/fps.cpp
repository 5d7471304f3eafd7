#include "bstir/fps.hpp"

#include "bstir/factorials.hpp"

#include <algorithm>
#include <stdexcept>

namespace bstir {

namespace {

void require_same_order(const PowerSeries& a, const PowerSeries& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("PowerSeries: order mismatch; truncate explicitly");
}

}  // namespace

PowerSeries::PowerSeries(int order, std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    if (order < 0) throw std::domain_error("PowerSeries: negative order");
    if (static_cast<int>(c_.size()) != order + 1)
        throw std::invalid_argument("PowerSeries: coefficient count must be order + 1");
}

PowerSeries PowerSeries::zero(int order) {
    if (order < 0) throw std::domain_error("PowerSeries: negative order");
    return PowerSeries(std::vector<Rational>(static_cast<std::size_t>(order) + 1));
}

PowerSeries PowerSeries::one(int order) {
    PowerSeries s = zero(order);
    s[0] = Rational(1);
    return s;
}

PowerSeries PowerSeries::truncated(int new_order) const {
    if (new_order < 0) throw std::domain_error("PowerSeries::truncated: negative order");
    std::vector<Rational> coeffs(static_cast<std::size_t>(new_order) + 1, Rational(0));
    for (int n = 0; n <= std::min(new_order, order()); ++n)
        coeffs[static_cast<std::size_t>(n)] = c_[static_cast<std::size_t>(n)];
    return PowerSeries(std::move(coeffs));
}

PowerSeries fps_add(const PowerSeries& a, const PowerSeries& b) {
    require_same_order(a, b);
    PowerSeries r = PowerSeries::zero(a.order());
    for (int n = 0; n <= a.order(); ++n) r[n] = a[n] + b[n];
    return r;
}

PowerSeries fps_sub(const PowerSeries& a, const PowerSeries& b) {
    require_same_order(a, b);
    PowerSeries r = PowerSeries::zero(a.order());
    for (int n = 0; n <= a.order(); ++n) r[n] = a[n] - b[n];
    return r;
}

PowerSeries fps_scale(const Rational& s, const PowerSeries& a) {
    PowerSeries r = PowerSeries::zero(a.order());
    for (int n = 0; n <= a.order(); ++n) r[n] = s * a[n];
    return r;
}

PowerSeries fps_mul(const PowerSeries& a, const PowerSeries& b) {
    require_same_order(a, b);
    const int N = a.order();
    PowerSeries r = PowerSeries::zero(N);
    for (int i = 0; i <= N; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j <= N; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

PowerSeries fps_div(const PowerSeries& a, const PowerSeries& b) {
    require_same_order(a, b);
    if (b[0].is_zero()) throw std::domain_error("fps_div: divisor constant term is zero");
    const int N = a.order();
    PowerSeries q = PowerSeries::zero(N);
    for (int n = 0; n <= N; ++n) {
        Rational acc = a[n];
        for (int j = 0; j < n; ++j) acc -= q[j] * b[n - j];
        q[n] = acc / b[0];
    }
    return q;
}

PowerSeries fps_log1p(const PowerSeries& f) {
    if (!f[0].is_zero()) throw std::domain_error("fps_log1p: constant term must be zero");
    const int N = f.order();
    // h = 1 + f; n*g_n = n*h_n - sum_{j=1}^{n-1} j*g_j*h_{n-j}.
    PowerSeries g = PowerSeries::zero(N);
    for (int n = 1; n <= N; ++n) {
        Rational acc = Rational(n) * f[n];
        for (int j = 1; j < n; ++j) acc -= Rational(j) * g[j] * f[n - j];  // h_{n-j} = f_{n-j} here
        g[n] = acc / Rational(n);
    }
    return g;
}

PowerSeries fps_exp(const PowerSeries& f) {
    if (!f[0].is_zero()) throw std::domain_error("fps_exp: constant term must be zero");
    const int N = f.order();
    // n*g_n = sum_{j=1}^{n} j*f_j*g_{n-j}, g_0 = 1.
    PowerSeries g = PowerSeries::zero(N);
    g[0] = Rational(1);
    for (int n = 1; n <= N; ++n) {
        Rational acc(0);
        for (int j = 1; j <= n; ++j) acc += Rational(j) * f[j] * g[n - j];
        g[n] = acc / Rational(n);
    }
    return g;
}

PowerSeries fps_pow(const PowerSeries& f, const Rational& r) {
    if (f[0] != Rational(1)) throw std::domain_error("fps_pow: constant term must be one");
    PowerSeries shifted = f;
    shifted[0] = Rational(0);
    return fps_exp(fps_scale(r, fps_log1p(shifted)));
}

PowerSeries series_expm1_over_x(int order) {
    PowerSeries s = PowerSeries::zero(order);
    for (int n = 0; n <= order; ++n) s[n] = Rational(Integer(1), factorial(n + 1));
    return s;
}

PowerSeries series_log1p_over_x(int order) {
    PowerSeries s = PowerSeries::zero(order);
    for (int n = 0; n <= order; ++n) s[n] = Rational(n % 2 == 0 ? 1 : -1, n + 1);
    return s;
}

}  // namespace bstir
