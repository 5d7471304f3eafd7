#include "bstir/factorials.hpp"

#include <mutex>
#include <stdexcept>

namespace bstir {

const Integer& FactorialCache::factorial(int n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    while (static_cast<int>(fact_.size()) <= n)
        fact_.push_back(fact_.back() * static_cast<long>(fact_.size()));
    return fact_[static_cast<std::size_t>(n)];
}

Integer FactorialCache::double_factorial(int n) {
    if (n == -1) return Integer(1);
    if (n == -3) return Integer(-1);
    if (n < 0)
        throw std::domain_error("double_factorial: defined for n >= -3 with n odd or n >= 0");
    while (static_cast<int>(dfact_.size()) <= n) {
        const long m = static_cast<long>(dfact_.size());
        dfact_.push_back((m >= 2 ? dfact_[static_cast<std::size_t>(m - 2)] : Integer(1)) * m);
    }
    return dfact_[static_cast<std::size_t>(n)];
}

namespace {
std::mutex& cache_mutex() {
    static std::mutex m;
    return m;
}
FactorialCache& shared_cache() {
    static FactorialCache cache;
    return cache;
}
}  // namespace

Integer factorial(int n) {
    std::lock_guard<std::mutex> lock(cache_mutex());
    return shared_cache().factorial(n);
}

Integer double_factorial(int n) {
    std::lock_guard<std::mutex> lock(cache_mutex());
    return shared_cache().double_factorial(n);
}

Integer binomial(long n, long k) {
    if (n < 0) throw std::domain_error("binomial: negative n");
    if (k < 0 || k > n) return Integer(0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Rational falling_factorial(const Rational& x, int n) {
    if (n < 0) throw std::domain_error("falling_factorial: negative n");
    Rational r(1);
    for (int i = 0; i < n; ++i) r *= x - Rational(i);
    return r;
}

Rational rising_factorial(const Rational& x, int n) {
    if (n < 0) throw std::domain_error("rising_factorial: negative n");
    Rational r(1);
    for (int i = 0; i < n; ++i) r *= x + Rational(i);
    return r;
}

Integer pow2(unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

}  // namespace bstir
