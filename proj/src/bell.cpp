#include "bstir/bell.hpp"

#include "bstir/factorials.hpp"
#include "bstir/stirling.hpp"

#include <stdexcept>

namespace bstir {

namespace {

// Walks l_i for i = part..m accumulating the product term; rem_n and rem_k
// are what is left of sum(i*l_i) = n and sum(l_i) = k.
void enumerate(int part, int m, int rem_n, int rem_k, const Rational& term,
               const BellArgs& xs, Rational& total, BellStats* stats) {
    if (rem_n == 0 && rem_k == 0) {
        total += term;
        if (stats) ++stats->partitions;
        return;
    }
    if (part > m || rem_k == 0 || rem_n < part * rem_k) return;  // remaining parts all have size >= part
    const Rational unit = xs[static_cast<std::size_t>(part - 1)] / Rational(factorial(part));
    Rational factor(1);
    const int max_l = std::min(rem_k, rem_n / part);
    for (int l = 0; l <= max_l; ++l) {
        if (l > 0) factor *= unit / Rational(l);  // keeps 1/l! incremental
        enumerate(part + 1, m, rem_n - part * l, rem_k - l, term * factor, xs, total, stats);
    }
}

}  // namespace

Rational bell_partial(int n, int k, const BellArgs& xs, BellStats* stats) {
    if (n < 0 || k < 0) throw std::domain_error("bell_partial: negative index");
    if (k > n) throw std::domain_error("bell_partial: k > n");
    if (k == 0) return Rational(n == 0 ? 1 : 0);
    const int m = n - k + 1;
    if (static_cast<int>(xs.size()) < m)
        throw std::domain_error("bell_partial: argument list shorter than n-k+1");
    Rational total(0);
    enumerate(1, m, n, k, Rational(1), xs, total, stats);
    return total * Rational(factorial(n));
}

BellArgs bell_family_args(BellFamily family, int n, int k) {
    const int m = std::max(1, n - k + 1);
    BellArgs xs;
    xs.reserve(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i) {
        switch (family) {
            case BellFamily::halves:
                xs.emplace_back(1, i + 1);
                break;
            case BellFamily::factorial_over_next:
                xs.push_back(Rational(factorial(i)) / Rational(i + 1));
                break;
            case BellFamily::ones:
                xs.emplace_back(1);
                break;
            case BellFamily::factorials:
                xs.emplace_back(factorial(i - 1));
                break;
        }
    }
    return xs;
}

Rational bell_special(int n, int k, BellFamily family) {
    if (n < 0 || k < 0) throw std::domain_error("bell_special: negative index");
    if (k > n) throw std::domain_error("bell_special: k > n");
    switch (family) {
        case BellFamily::halves: {
            Rational sum(0);
            for (int l = 0; l <= k; ++l) {
                Rational term(Integer(binomial(n + k, k - l) * stirling2(n + l, l)));
                sum += ((k - l) % 2 == 0) ? term : -term;
            }
            return Rational(factorial(n)) / Rational(factorial(n + k)) * sum;
        }
        case BellFamily::factorial_over_next: {
            Rational sum(0);
            for (int m = 0; m <= k; ++m) {
                Rational term(binomial(k, m) * stirling1(n + m, m), binomial(n + m, m));
                sum += (m % 2 == 0) ? term : -term;
            }
            Rational value = sum / Rational(factorial(k));
            return ((n - k) % 2 == 0) ? value : -value;
        }
        case BellFamily::ones:
            return Rational(stirling2(n, k));
        case BellFamily::factorials: {
            Rational value(stirling1(n, k));
            return ((n - k) % 2 == 0) ? value : -value;
        }
    }
    throw std::logic_error("bell_special: unknown family");
}

const char* bell_family_name(BellFamily family) {
    switch (family) {
        case BellFamily::halves: return "halves";
        case BellFamily::factorial_over_next: return "factorial_over_next";
        case BellFamily::ones: return "ones";
        case BellFamily::factorials: return "factorials";
    }
    return "?";
}

}  // namespace bstir
