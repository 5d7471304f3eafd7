#include "bstir/bernoulli.hpp"

#include "bstir/factorials.hpp"
#include "bstir/fps.hpp"
#include "bstir/hessenberg.hpp"
#include "bstir/stirling.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace bstir {

namespace {

std::mutex& memo_mutex() {
    static std::mutex m;
    return m;
}

// One memo vector per route (index n for baseline, index k elsewhere);
// routes never read each other's caches.
std::vector<Rational>& route_memo(int slot) {
    static std::vector<std::vector<Rational>> memos(16);
    return memos[static_cast<std::size_t>(slot)];
}

Rational baseline_impl(int n) {
    std::lock_guard<std::mutex> lock(memo_mutex());
    std::vector<Rational>& memo = route_memo(0);
    if (memo.empty()) memo.push_back(Rational(1));  // B_0
    while (static_cast<int>(memo.size()) <= n) {
        const int m = static_cast<int>(memo.size());
        Rational acc(0);
        for (int j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * memo[static_cast<std::size_t>(j)];
        memo.push_back(-acc / Rational(m + 1));
    }
    return memo[static_cast<std::size_t>(n)];
}

// Derivative sequences at 0 through order 2k-1 for the four det routes.
DerivativePair det_pair(int k, BernoulliDet which) {
    const int top = 2 * k - 1;
    DerivativePair dp;
    dp.p_derivs.reserve(static_cast<std::size_t>(top) + 1);
    dp.q_derivs.reserve(static_cast<std::size_t>(top) + 1);
    for (int i = 0; i <= top; ++i) {
        switch (which) {
            case BernoulliDet::tanh:
                dp.p_derivs.emplace_back(i % 2 == 1 ? 1 : 0);  // sinh
                dp.q_derivs.emplace_back(i % 2 == 0 ? 1 : 0);  // cosh
                break;
            case BernoulliDet::tan: {
                static const int sin_cycle[4] = {0, 1, 0, -1};
                static const int cos_cycle[4] = {1, 0, -1, 0};
                dp.p_derivs.emplace_back(sin_cycle[i % 4]);
                dp.q_derivs.emplace_back(cos_cycle[i % 4]);
                break;
            }
            case BernoulliDet::logistic:
                dp.p_derivs.emplace_back(1);                   // e^x
                dp.q_derivs.emplace_back(i == 0 ? 2 : 1);      // e^x + 1
                break;
            case BernoulliDet::integral:
                dp.p_derivs.emplace_back(Rational(1, i + 2));
                dp.q_derivs.emplace_back(Rational(1, i + 1));
                break;
        }
    }
    return dp;
}

Rational det_impl(int k, BernoulliDet which) {
    const Rational rd = ratio_derivative(det_pair(k, which), 2 * k - 1);
    const Integer p2 = pow2(static_cast<unsigned long>(2 * k));  // 2^{2k}
    switch (which) {
        case BernoulliDet::tanh:
            return Rational(Integer(2 * k), (p2 - 1) * p2) * rd;
        case BernoulliDet::tan: {
            const Rational v = Rational(Integer(2 * k), p2 * (p2 - 1)) * rd;
            return (k % 2 == 1) ? v : -v;
        }
        case BernoulliDet::logistic:
            return Rational(Integer(2 * k), p2 - 1) * rd;
        case BernoulliDet::integral:
            return Rational(2 * k) * rd;
    }
    throw std::logic_error("bernoulli_det: unknown route");
}

// Each recursion rebuilds B_2..B_{2k} from its own memo.
Rational rec_impl(int k, BernoulliRec which) {
    const int slot = 5 + static_cast<int>(which);
    std::lock_guard<std::mutex> lock(memo_mutex());
    std::vector<Rational>& memo = route_memo(slot);
    if (memo.empty()) memo.push_back(Rational(1));  // unused k=0 slot keeps indices aligned
    while (static_cast<int>(memo.size()) <= k) {
        const int kk = static_cast<int>(memo.size());
        const Integer p2k = pow2(static_cast<unsigned long>(2 * kk));  // 2^{2kk}
        Rational value(0);
        switch (which) {
            case BernoulliRec::tanh: {
                Rational acc(0);
                for (int l = 1; l < kk; ++l) {
                    const Integer p2l = pow2(static_cast<unsigned long>(2 * l));
                    acc += Rational(Integer(binomial(2 * kk - 1, 2 * l - 1) * (p2l - 1) * p2l)) *
                           memo[static_cast<std::size_t>(l)] / Rational(2 * l);
                }
                value = Rational(Integer(kk), (p2k - 1) * (p2k / 2)) * (Rational(1) - acc);
                break;
            }
            case BernoulliRec::logistic: {
                Rational acc(0);
                for (int j = 1; j < kk; ++j) {
                    const Integer p2j = pow2(static_cast<unsigned long>(2 * j));
                    acc += Rational(binomial(2 * kk - 1, 2 * j - 1) * (p2j - 1), Integer(j)) *
                           memo[static_cast<std::size_t>(j)];
                }
                value = Rational(Integer(kk), 2 * (p2k - 1)) * (Rational(1) - acc);
                break;
            }
            case BernoulliRec::integral: {
                Rational acc(0);
                for (int l = 1; l < kk; ++l) {
                    acc += Rational(binomial(2 * kk - 1, 2 * l - 1), Integer(2 * kk - 2 * l + 1)) *
                           memo[static_cast<std::size_t>(l)] / Rational(2 * l);
                }
                value = Rational(2 * kk) * (Rational(2 * kk - 1, 4 * kk * (2 * kk + 1)) - acc);
                break;
            }
        }
        memo.push_back(value);
    }
    return memo[static_cast<std::size_t>(k)];
}

Rational closed_eta_sum(int n) {
    // sum_{j=1}^{n} (-1)^{j-1} (j-1)!/2^j S(n,j)
    Rational acc(0);
    for (int j = 1; j <= n; ++j) {
        Rational term(factorial(j - 1) * stirling2(n, j), pow2(static_cast<unsigned long>(j)));
        acc += (j % 2 == 1) ? term : -term;
    }
    return acc;
}

Rational closed_zeta_bell_display(int k) {
    // (2k/C(4k,2k)) sum_{l=1}^{2k} (-1)^l/l C(4k,2k+l) S(2k+l,l)  [verbatim]
    Rational acc(0);
    for (int l = 1; l <= 2 * k; ++l) {
        Rational term(binomial(4 * k, 2 * k + l) * stirling2(2 * k + l, l), Integer(l));
        acc += (l % 2 == 0) ? term : -term;
    }
    return Rational(Integer(2 * k), binomial(4 * k, 2 * k)) * acc;
}

Rational closed_s2_display(int k) {
    // sum_{j=0}^{2k} j!/(2k+j)! sum_{l=0}^{j} (-1)^l C(2k+j,j-l) S(2k+l,l)  [verbatim]
    Rational acc(0);
    for (int j = 0; j <= 2 * k; ++j) {
        Rational inner(0);
        for (int l = 0; l <= j; ++l) {
            Rational term(Integer(binomial(2 * k + j, j - l) * stirling2(2 * k + l, l)));
            inner += (l % 2 == 0) ? term : -term;
        }
        acc += Rational(factorial(j), factorial(2 * k + j)) * inner;
    }
    return acc;
}

Rational closed_impl(int k, BernoulliClosed which) {
    switch (which) {
        case BernoulliClosed::eta: {
            const Integer p2 = pow2(static_cast<unsigned long>(2 * k));
            return Rational(Integer(2 * k), p2 - 1) * closed_eta_sum(2 * k);
        }
        case BernoulliClosed::zeta_bell:
            return -closed_zeta_bell_display(k);                      // adjusted sign
        case BernoulliClosed::s2:
            return Rational(factorial(2 * k)) * closed_s2_display(k);  // adjusted factor
    }
    throw std::logic_error("bernoulli_closed: unknown route");
}

}  // namespace

Rational bernoulli_baseline(int n) {
    if (n < 0) throw std::domain_error("bernoulli_baseline: negative n");
    return baseline_impl(n);
}

Rational bernoulli_det(int k, BernoulliDet which) {
    if (k < 1) throw std::domain_error("bernoulli_det: k must be >= 1");
    return det_impl(k, which);
}

Rational bernoulli_rec(int k, BernoulliRec which) {
    if (k < 1) throw std::domain_error("bernoulli_rec: k must be >= 1");
    return rec_impl(k, which);
}

Rational bernoulli_closed(int k, BernoulliClosed which) {
    if (k < 1) throw std::domain_error("bernoulli_closed: k must be >= 1");
    return closed_impl(k, which);
}

Rational bernoulli_closed_unadjusted(int k, BernoulliClosed which) {
    if (k < 1) throw std::domain_error("bernoulli_closed_unadjusted: k must be >= 1");
    switch (which) {
        case BernoulliClosed::eta:
            return closed_impl(k, which);  // display needs no adjustment
        case BernoulliClosed::zeta_bell:
            return closed_zeta_bell_display(k);
        case BernoulliClosed::s2:
            return closed_s2_display(k);
    }
    throw std::logic_error("bernoulli_closed_unadjusted: unknown route");
}

Rational generalized_bernoulli(int n, const Rational& r) {
    if (n < 0) throw std::domain_error("generalized_bernoulli: negative n");
    Rational acc(0);
    for (int k = 0; k <= n; ++k) {
        Rational inner(0);
        for (int l = 0; l <= k; ++l) {
            Rational term(Integer(binomial(n + k, k - l) * stirling2(n + l, l)));
            inner += (l % 2 == 0) ? term : -term;
        }
        acc += rising_factorial(r, k) / Rational(factorial(n + k)) * inner;
    }
    return Rational(factorial(n)) * acc;
}

Rational bernoulli2nd(int n, Bernoulli2ndRoute which) {
    if (n < 0) throw std::domain_error("bernoulli2nd: negative n");
    switch (which) {
        case Bernoulli2ndRoute::fps_baseline: {
            const PowerSeries q = fps_div(PowerSeries::one(n), series_log1p_over_x(n));
            return q[n];
        }
        case Bernoulli2ndRoute::stirling_sum: {
            Rational acc(0);
            for (int l = 0; l <= n; ++l) acc += Rational(stirling1(n, l), Integer(l + 1));
            return acc / Rational(factorial(n));
        }
        case Bernoulli2ndRoute::alt_sum: {
            Rational acc(0);
            for (int m = 0; m <= n; ++m) {
                Rational term(binomial(n + 1, m + 1) * stirling1(n + m, m), binomial(n + m, m));
                acc += (m % 2 == 0) ? term : -term;
            }
            return acc / Rational(factorial(n));
        }
        case Bernoulli2ndRoute::integral: {
            // Expand <v>_n by direct polynomial multiplication (independent of
            // the Stirling table), then integrate term-by-term over [0,1].
            std::vector<Rational> poly{Rational(1)};  // coefficients of v^d
            for (int i = 0; i < n; ++i) {
                std::vector<Rational> next(poly.size() + 1);
                for (std::size_t d = 0; d < poly.size(); ++d) {
                    next[d + 1] += poly[d];
                    next[d] -= Rational(i) * poly[d];
                }
                poly = std::move(next);
            }
            Rational acc(0);
            for (std::size_t d = 0; d < poly.size(); ++d)
                acc += poly[d] / Rational(static_cast<long>(d) + 1);
            return acc / Rational(factorial(n));
        }
    }
    throw std::logic_error("bernoulli2nd: unknown route");
}

Rational zeta_neg(int k) {
    if (k < 1) throw std::domain_error("zeta_neg: k must be >= 1");
    return -bernoulli_baseline(2 * k) / Rational(2 * k);
}

Rational eta_neg(int k) {
    if (k < 1) throw std::domain_error("eta_neg: k must be >= 1");
    return Rational(Integer(Integer(1) - pow2(static_cast<unsigned long>(2 * k)))) * zeta_neg(k);
}

Rational bernoulli_route_value(BernoulliRoute route, int n) {
    if (route == BernoulliRoute::baseline) return bernoulli_baseline(n);
    if (n < 2 || n % 2 != 0)
        throw std::domain_error("bernoulli_route_value: non-baseline routes need even n >= 2");
    const int k = n / 2;
    switch (route) {
        case BernoulliRoute::det_tanh: return bernoulli_det(k, BernoulliDet::tanh);
        case BernoulliRoute::det_tan: return bernoulli_det(k, BernoulliDet::tan);
        case BernoulliRoute::det_logistic: return bernoulli_det(k, BernoulliDet::logistic);
        case BernoulliRoute::det_integral: return bernoulli_det(k, BernoulliDet::integral);
        case BernoulliRoute::rec_tanh: return bernoulli_rec(k, BernoulliRec::tanh);
        case BernoulliRoute::rec_logistic: return bernoulli_rec(k, BernoulliRec::logistic);
        case BernoulliRoute::rec_integral: return bernoulli_rec(k, BernoulliRec::integral);
        case BernoulliRoute::closed_eta: return bernoulli_closed(k, BernoulliClosed::eta);
        case BernoulliRoute::closed_zeta_bell: return bernoulli_closed(k, BernoulliClosed::zeta_bell);
        case BernoulliRoute::closed_s2: return bernoulli_closed(k, BernoulliClosed::s2);
        case BernoulliRoute::baseline: break;
    }
    throw std::logic_error("bernoulli_route_value: unknown route");
}

const char* bernoulli_route_name(BernoulliRoute route) {
    switch (route) {
        case BernoulliRoute::baseline: return "baseline";
        case BernoulliRoute::det_tanh: return "det_tanh";
        case BernoulliRoute::det_tan: return "det_tan";
        case BernoulliRoute::det_logistic: return "det_logistic";
        case BernoulliRoute::det_integral: return "det_integral";
        case BernoulliRoute::rec_tanh: return "rec_tanh";
        case BernoulliRoute::rec_logistic: return "rec_logistic";
        case BernoulliRoute::rec_integral: return "rec_integral";
        case BernoulliRoute::closed_eta: return "closed_eta";
        case BernoulliRoute::closed_zeta_bell: return "closed_zeta_bell";
        case BernoulliRoute::closed_s2: return "closed_s2";
    }
    return "?";
}

const char* bernoulli2nd_route_name(Bernoulli2ndRoute route) {
    switch (route) {
        case Bernoulli2ndRoute::fps_baseline: return "fps_baseline";
        case Bernoulli2ndRoute::stirling_sum: return "stirling_sum";
        case Bernoulli2ndRoute::alt_sum: return "alt_sum";
        case Bernoulli2ndRoute::integral: return "integral";
    }
    return "?";
}

const char* bernoulli_route_label(BernoulliRoute route) {
    switch (route) {
        case BernoulliRoute::baseline: return "Bernoulli-Gen-Eq";
        case BernoulliRoute::det_tanh: return "Bernoulli-Determin-One";
        case BernoulliRoute::det_tan: return "Bernoulli-Determin-two";
        case BernoulliRoute::det_logistic: return "Bernoulli-Determin-3";
        case BernoulliRoute::det_integral: return "Bernoulli-Determin-4";
        case BernoulliRoute::rec_tanh: return "Bernou-REcurs-Relat-Eq";
        case BernoulliRoute::rec_logistic: return "Bernoulli-Recursive-2";
        case BernoulliRoute::rec_integral: return "Bernoulli-Recursive-T3";
        case BernoulliRoute::closed_eta: return "Helms-variant-ser27";
        case BernoulliRoute::closed_zeta_bell: return "Equal=0-Stirl-Bern (adjusted)";
        case BernoulliRoute::closed_s2: return "Equal-Stirl-Bern2nd (adjusted)";
    }
    return "?";
}

const char* bernoulli2nd_route_label(Bernoulli2ndRoute route) {
    switch (route) {
        case Bernoulli2ndRoute::fps_baseline: return "bernoulli-second-dfn";
        case Bernoulli2ndRoute::stirling_sum: return "Nemes-1st-Bernoulli";
        case Bernoulli2ndRoute::alt_sum: return "real-power-log-r=-1";
        case Bernoulli2ndRoute::integral: return "falling-2ndbER";
    }
    return "?";
}

}  // namespace bstir
