#include "bstir/expansions.hpp"

#include "bstir/bernoulli.hpp"
#include "bstir/factorials.hpp"
#include "bstir/fps.hpp"
#include "bstir/stirling.hpp"

#include <stdexcept>

namespace bstir {

namespace {

using V = FormulaVariant;

const std::vector<V> kLogExpPlus1Half{V::eta, V::bernoulli, V::stirling2};
const std::vector<V> kLogExpm1OverX{V::zeta, V::bernoulli, V::stirling2};
const std::vector<V> kBernoulliOnly{V::bernoulli};
const std::vector<V> kStirling1Only{V::stirling1};
const std::vector<V> kPowLog{V::stirling1, V::mixed};
const std::vector<V> kPowExp{V::stirling2, V::mixed};

bool variant_valid(ExpansionId id, V v) {
    for (V candidate : variants_of(id))
        if (candidate == v) return true;
    return false;
}

// sum_m (-1)^m C(k,m) s(n+m,m)/C(n+m,m) — the first-kind inner sum shared
// by the sqrt/power logarithm formulas.
Rational s1_inner(int k, int n) {
    Rational acc(0);
    for (int m = 0; m <= k; ++m) {
        Rational term(binomial(k, m) * stirling1(n + m, m), binomial(n + m, m));
        acc += (m % 2 == 0) ? term : -term;
    }
    return acc;
}

// sum_l (-1)^l C(n+k,k-l) S(n+l,l) — the second-kind inner sum shared by
// the exponential-power formulas.
Rational s2_inner(int k, int n) {
    Rational acc(0);
    for (int l = 0; l <= k; ++l) {
        Rational term(Integer(binomial(n + k, k - l) * stirling2(n + l, l)));
        acc += (l % 2 == 0) ? term : -term;
    }
    return acc;
}

Rational half_power_even(int n, bool eta_form) {
    // c_{2k} with numerator eta(1-2k) (eta_form) or (2^{2k}-1) B_{2k}/(2k).
    const int k = n / 2;
    if (eta_form) return eta_neg(k) / Rational(factorial(n));
    const Integer p2 = pow2(static_cast<unsigned long>(2 * k));
    return Rational(Integer(p2 - 1)) * bernoulli_baseline(2 * k) / Rational(2 * k) / Rational(factorial(n));
}

Rational coeff_log_exp_plus1_half(V v, int n) {
    switch (v) {
        case V::eta:
            // c_1 = 1/2, c_{2k} = eta(1-2k)/(2k)!, other odd orders vanish.
            if (n == 1) return Rational(1, 2);
            return (n >= 2 && n % 2 == 0) ? half_power_even(n, true) : Rational(0);
        case V::bernoulli:
            if (n == 1) return Rational(1, 2);
            return (n >= 2 && n % 2 == 0) ? half_power_even(n, false) : Rational(0);
        case V::stirling2: {
            // (1/n!) sum_{j=1}^{n} (-1)^{j-1} (j-1)!/2^j S(n,j)
            Rational acc(0);
            for (int j = 1; j <= n; ++j) {
                Rational term(factorial(j - 1) * stirling2(n, j), pow2(static_cast<unsigned long>(j)));
                acc += (j % 2 == 1) ? term : -term;
            }
            return acc / Rational(factorial(n));
        }
        default:
            break;
    }
    throw std::invalid_argument("coeff: variant not defined for log_exp_plus1_half");
}

Rational coeff_log_expm1_over_x(V v, int n) {
    switch (v) {
        case V::zeta:
            // c_1 = 1/2, c_{2k} = -zeta(1-2k)/(2k)!, other odd orders vanish.
            if (n == 1) return Rational(1, 2);
            return (n >= 2 && n % 2 == 0) ? -zeta_neg(n / 2) / Rational(factorial(n)) : Rational(0);
        case V::bernoulli:
            if (n == 1) return Rational(1, 2);
            return (n >= 2 && n % 2 == 0)
                       ? bernoulli_baseline(n) / Rational(n) / Rational(factorial(n))
                       : Rational(0);
        case V::stirling2: {
            // -(1/n!) (1/C(2n,n)) sum_{l=1}^{n} (-1)^l/l C(2n,n+l) S(n+l,l)
            Rational acc(0);
            for (int l = 1; l <= n; ++l) {
                Rational term(binomial(2 * n, n + l) * stirling2(n + l, l), Integer(l));
                acc += (l % 2 == 0) ? term : -term;
            }
            return -acc / Rational(binomial(2 * n, n)) / Rational(factorial(n));
        }
        default:
            break;
    }
    throw std::invalid_argument("coeff: variant not defined for log_expm1_over_x");
}

// The three even logarithm series share the shape
// c_{2k} = scale(k) * B_{2k} / ((2k) (2k)!).
Rational coeff_even_log(ExpansionId id, int n) {
    if (n == 0 || n % 2 == 1) return Rational(0);
    const int k = n / 2;
    const Integer p2 = pow2(static_cast<unsigned long>(2 * k));
    const Rational base = bernoulli_baseline(2 * k) / Rational(2 * k) / Rational(factorial(2 * k));
    switch (id) {
        case ExpansionId::log_cosh:
            return Rational(Integer((p2 - 1) * p2)) * base;
        case ExpansionId::log_sinh_over_x:
            return Rational(p2) * base;
        case ExpansionId::log_cos: {
            // -2^{2k}(2^{2k}-1) |B_{2k}| / ((2k)(2k)!)
            const Rational b = bernoulli_baseline(2 * k).abs();
            return -Rational(Integer(p2 * (p2 - 1))) * b / Rational(2 * k) / Rational(factorial(2 * k));
        }
        default:
            break;
    }
    throw std::logic_error("coeff_even_log: bad id");
}

Rational coeff_sqrt_log1p_over_x(int n) {
    // -(1/n!) sum_k (2k-3)!!/(2k)!! s1_inner(k, n)
    Rational acc(0);
    for (int k = 0; k <= n; ++k) {
        acc += Rational(double_factorial(2 * k - 3), double_factorial(2 * k)) * s1_inner(k, n);
    }
    return -acc / Rational(factorial(n));
}

Rational coeff_powlog(V v, int n, const Rational& r) {
    switch (v) {
        case V::stirling1: {
            // (1/n!) sum_k (-r)_k/k! s1_inner(k, n)
            Rational acc(0);
            for (int k = 0; k <= n; ++k)
                acc += rising_factorial(-r, k) / Rational(factorial(k)) * s1_inner(k, n);
            return acc / Rational(factorial(n));
        }
        case V::mixed: {
            // (1/n!) sum_k k! s(n,k) sum_m (r)_m/(k+m)! sum_l (-1)^l C(k+m,m-l) S(k+l,l)
            Rational acc(0);
            for (int k = 0; k <= n; ++k) {
                const Integer s1v = stirling1(n, k);
                if (s1v == 0) continue;
                Rational mid(0);
                for (int m = 0; m <= k; ++m) {
                    Rational inner(0);
                    for (int l = 0; l <= m; ++l) {
                        Rational term(Integer(binomial(k + m, m - l) * stirling2(k + l, l)));
                        inner += (l % 2 == 0) ? term : -term;
                    }
                    mid += rising_factorial(r, m) / Rational(factorial(k + m)) * inner;
                }
                acc += Rational(Integer(factorial(k) * s1v)) * mid;
            }
            return acc / Rational(factorial(n));
        }
        default:
            break;
    }
    throw std::invalid_argument("coeff: variant not defined for log1p_over_x_pow_r");
}

Rational coeff_sqrt_x_over_expm1(V v, int n) {
    switch (v) {
        case V::stirling2: {
            // (1/n!) sum_k 2^{-2k} C(2k,k)/C(n+k,k) s2_inner(k, n)
            Rational acc(0);
            for (int k = 0; k <= n; ++k) {
                acc += Rational(binomial(2 * k, k), pow2(static_cast<unsigned long>(2 * k)) * binomial(n + k, k)) *
                       s2_inner(k, n);
            }
            return acc / Rational(factorial(n));
        }
        case V::mixed: {
            // -(1/n!) sum_k S(n,k) sum_l (2l-3)!!/(2l)!! s1_inner(l, k)
            Rational acc(0);
            for (int k = 0; k <= n; ++k) {
                const Integer s2v = stirling2(n, k);
                if (s2v == 0) continue;
                Rational mid(0);
                for (int l = 0; l <= k; ++l)
                    mid += Rational(double_factorial(2 * l - 3), double_factorial(2 * l)) * s1_inner(l, k);
                acc += Rational(s2v) * mid;
            }
            return -acc / Rational(factorial(n));
        }
        default:
            break;
    }
    throw std::invalid_argument("coeff: variant not defined for sqrt_x_over_expm1");
}

Rational coeff_powexp(V v, int n, const Rational& r) {
    switch (v) {
        case V::stirling2: {
            // sum_k (-r)_k/(n+k)! s2_inner(k, n)   (already ordinary)
            Rational acc(0);
            for (int k = 0; k <= n; ++k)
                acc += rising_factorial(-r, k) / Rational(factorial(n + k)) * s2_inner(k, n);
            return acc;
        }
        case V::mixed: {
            // (1/n!) sum_l S(n,l) sum_k (r)_k/k! s1_inner(k, l)
            Rational acc(0);
            for (int l = 0; l <= n; ++l) {
                const Integer s2v = stirling2(n, l);
                if (s2v == 0) continue;
                Rational mid(0);
                for (int k = 0; k <= l; ++k)
                    mid += rising_factorial(r, k) / Rational(factorial(k)) * s1_inner(k, l);
                acc += Rational(s2v) * mid;
            }
            return acc / Rational(factorial(n));
        }
        default:
            break;
    }
    throw std::invalid_argument("coeff: variant not defined for expm1_over_x_pow_r");
}

}  // namespace

const std::vector<FormulaVariant>& variants_of(ExpansionId id) {
    switch (id) {
        case ExpansionId::log_exp_plus1_half: return kLogExpPlus1Half;
        case ExpansionId::log_expm1_over_x: return kLogExpm1OverX;
        case ExpansionId::log_cosh: return kBernoulliOnly;
        case ExpansionId::log_sinh_over_x: return kBernoulliOnly;
        case ExpansionId::log_cos: return kBernoulliOnly;
        case ExpansionId::sqrt_log1p_over_x: return kStirling1Only;
        case ExpansionId::log1p_over_x_pow_r: return kPowLog;
        case ExpansionId::sqrt_x_over_expm1: return kPowExp;
        case ExpansionId::expm1_over_x_pow_r: return kPowExp;
    }
    throw std::invalid_argument("variants_of: unknown expansion id");
}

bool requires_r(ExpansionId id) {
    return id == ExpansionId::log1p_over_x_pow_r || id == ExpansionId::expm1_over_x_pow_r;
}

Rational coeff(ExpansionId id, FormulaVariant variant, int n, const std::optional<Rational>& r) {
    if (n < 0) throw std::domain_error("coeff: negative n");
    if (!variant_valid(id, variant))
        throw std::invalid_argument("coeff: variant not defined for this expansion");
    if (requires_r(id) && !r)
        throw std::invalid_argument("coeff: this expansion requires r");
    if (!requires_r(id) && r)
        throw std::invalid_argument("coeff: this expansion takes no r");
    switch (id) {
        case ExpansionId::log_exp_plus1_half: return coeff_log_exp_plus1_half(variant, n);
        case ExpansionId::log_expm1_over_x: return coeff_log_expm1_over_x(variant, n);
        case ExpansionId::log_cosh:
        case ExpansionId::log_sinh_over_x:
        case ExpansionId::log_cos: return coeff_even_log(id, n);
        case ExpansionId::sqrt_log1p_over_x: return coeff_sqrt_log1p_over_x(n);
        case ExpansionId::log1p_over_x_pow_r: return coeff_powlog(variant, n, *r);
        case ExpansionId::sqrt_x_over_expm1: return coeff_sqrt_x_over_expm1(variant, n);
        case ExpansionId::expm1_over_x_pow_r: return coeff_powexp(variant, n, *r);
    }
    throw std::invalid_argument("coeff: unknown expansion id");
}

Rational oracle_coeff(ExpansionId id, int n, const std::optional<Rational>& r, int order) {
    if (n < 0) throw std::domain_error("oracle_coeff: negative n");
    if (n > order) throw std::domain_error("oracle_coeff: n exceeds series order");
    if (requires_r(id) && !r)
        throw std::invalid_argument("oracle_coeff: this expansion requires r");
    if (!requires_r(id) && r)
        throw std::invalid_argument("oracle_coeff: this expansion takes no r");
    switch (id) {
        case ExpansionId::log_exp_plus1_half: {
            // (e^x + 1)/2 = 1 + f with f_n = 1/(2 n!) for n >= 1.
            PowerSeries f = PowerSeries::zero(order);
            for (int m = 1; m <= order; ++m) f[m] = Rational(Integer(1), 2 * factorial(m));
            return fps_log1p(f)[n];
        }
        case ExpansionId::log_expm1_over_x: {
            PowerSeries f = series_expm1_over_x(order);
            f[0] = Rational(0);
            return fps_log1p(f)[n];
        }
        case ExpansionId::log_cosh: {
            PowerSeries f = PowerSeries::zero(order);
            for (int m = 2; m <= order; m += 2) f[m] = Rational(Integer(1), factorial(m));
            return fps_log1p(f)[n];
        }
        case ExpansionId::log_sinh_over_x: {
            PowerSeries f = PowerSeries::zero(order);
            for (int m = 2; m <= order; m += 2) f[m] = Rational(Integer(1), factorial(m + 1));
            return fps_log1p(f)[n];
        }
        case ExpansionId::log_cos: {
            PowerSeries f = PowerSeries::zero(order);
            for (int m = 2; m <= order; m += 2)
                f[m] = Rational(Integer((m / 2) % 2 == 0 ? 1 : -1), factorial(m));
            return fps_log1p(f)[n];
        }
        case ExpansionId::sqrt_log1p_over_x:
            return fps_pow(series_log1p_over_x(order), Rational(1, 2))[n];
        case ExpansionId::log1p_over_x_pow_r:
            return fps_pow(series_log1p_over_x(order), *r)[n];
        case ExpansionId::sqrt_x_over_expm1:
            return fps_pow(series_expm1_over_x(order), Rational(-1, 2))[n];
        case ExpansionId::expm1_over_x_pow_r:
            return fps_pow(series_expm1_over_x(order), *r)[n];
    }
    throw std::invalid_argument("oracle_coeff: unknown expansion id");
}

const char* expansion_name(ExpansionId id) {
    switch (id) {
        case ExpansionId::log_exp_plus1_half: return "log_exp_plus1_half";
        case ExpansionId::log_expm1_over_x: return "log_expm1_over_x";
        case ExpansionId::log_cosh: return "log_cosh";
        case ExpansionId::log_sinh_over_x: return "log_sinh_over_x";
        case ExpansionId::log_cos: return "log_cos";
        case ExpansionId::sqrt_log1p_over_x: return "sqrt_log1p_over_x";
        case ExpansionId::log1p_over_x_pow_r: return "log1p_over_x_pow_r";
        case ExpansionId::sqrt_x_over_expm1: return "sqrt_x_over_expm1";
        case ExpansionId::expm1_over_x_pow_r: return "expm1_over_x_pow_r";
    }
    return "?";
}

const char* variant_name(FormulaVariant v) {
    switch (v) {
        case FormulaVariant::eta: return "eta";
        case FormulaVariant::zeta: return "zeta";
        case FormulaVariant::bernoulli: return "bernoulli";
        case FormulaVariant::stirling1: return "stirling1";
        case FormulaVariant::stirling2: return "stirling2";
        case FormulaVariant::mixed: return "mixed";
    }
    return "?";
}

ExpansionId parse_expansion(const std::string& name) {
    static const ExpansionId all[] = {
        ExpansionId::log_exp_plus1_half, ExpansionId::log_expm1_over_x,
        ExpansionId::log_cosh,           ExpansionId::log_sinh_over_x,
        ExpansionId::log_cos,            ExpansionId::sqrt_log1p_over_x,
        ExpansionId::log1p_over_x_pow_r, ExpansionId::sqrt_x_over_expm1,
        ExpansionId::expm1_over_x_pow_r,
    };
    for (ExpansionId id : all)
        if (name == expansion_name(id)) return id;
    throw std::invalid_argument("unknown expansion id: " + name);
}

FormulaVariant parse_variant(const std::string& name) {
    static const FormulaVariant all[] = {
        FormulaVariant::eta,       FormulaVariant::zeta,      FormulaVariant::bernoulli,
        FormulaVariant::stirling1, FormulaVariant::stirling2, FormulaVariant::mixed,
    };
    for (FormulaVariant v : all)
        if (name == variant_name(v)) return v;
    throw std::invalid_argument("unknown variant: " + name);
}

const char* formula_label(ExpansionId id, FormulaVariant variant) {
    switch (id) {
        case ExpansionId::log_exp_plus1_half:
            if (variant == V::eta) return "Helms-variant-ser";
            if (variant == V::bernoulli) return "exp+1-ser-log";
            return "Helms-2nd-Stirling-Ser";
        case ExpansionId::log_expm1_over_x:
            if (variant == V::zeta) return "Konwn-exp-results";
            if (variant == V::bernoulli) return "F1(x)-ser-expan";
            return "Bell-exp-results";
        case ExpansionId::log_cosh: return "log-cosh-ser";
        case ExpansionId::log_sinh_over_x: return "log-sinh-x-ser";
        case ExpansionId::log_cos: return "log-cosine-series-expansion";
        case ExpansionId::sqrt_log1p_over_x: return "Sqrt-log-Eq";
        case ExpansionId::log1p_over_x_pow_r:
            return (variant == V::stirling1) ? "real-power-log-Eq" : "log-ser-2stirl-eq";
        case ExpansionId::sqrt_x_over_expm1:
            return (variant == V::stirling2) ? "Bern-Exp-Ser-2nd-Eq" : "Bern-Exp-Ser-Eq";
        case ExpansionId::expm1_over_x_pow_r:
            return (variant == V::stirling2) ? "Bern-Exp-Ser-Gen-Eq" : "exp-log-trans-ser";
    }
    return "?";
}

}  // namespace bstir
