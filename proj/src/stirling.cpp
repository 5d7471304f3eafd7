#include "bstir/stirling.hpp"

#include "bstir/factorials.hpp"

#include <mutex>
#include <stdexcept>

namespace bstir {

namespace {
const Integer kZero(0);
}

StirlingTables::StirlingTables(int max_n) : max_n_(max_n) {
    if (max_n < 0) throw std::domain_error("StirlingTables: negative max_n");
    s1_.reserve(static_cast<std::size_t>(max_n) + 1);
    s2_.reserve(static_cast<std::size_t>(max_n) + 1);
    s1_.push_back({Integer(1)});
    s2_.push_back({Integer(1)});
    for (int n = 0; n < max_n; ++n) {
        std::vector<Integer> r1(static_cast<std::size_t>(n) + 2);
        std::vector<Integer> r2(static_cast<std::size_t>(n) + 2);
        for (int k = 0; k <= n + 1; ++k) {
            const Integer& a1 = (k >= 1) ? s1_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k - 1)] : kZero;
            const Integer& b1 = (k <= n) ? s1_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] : kZero;
            r1[static_cast<std::size_t>(k)] = a1 - n * b1;
            const Integer& a2 = (k >= 1) ? s2_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k - 1)] : kZero;
            const Integer& b2 = (k <= n) ? s2_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] : kZero;
            r2[static_cast<std::size_t>(k)] = a2 + k * b2;
        }
        s1_.push_back(std::move(r1));
        s2_.push_back(std::move(r2));
    }
}

const Integer& StirlingTables::s1(int n, int k) const {
    if (n < 0 || n > max_n_) throw std::domain_error("StirlingTables::s1: n out of table range");
    if (k < 0 || k > n) return kZero;
    return s1_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

const Integer& StirlingTables::s2(int n, int k) const {
    if (n < 0 || n > max_n_) throw std::domain_error("StirlingTables::s2: n out of table range");
    if (k < 0 || k > n) return kZero;
    return s2_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

namespace {

// Shared table, regrown geometrically under a lock.
std::mutex& table_mutex() {
    static std::mutex m;
    return m;
}

const StirlingTables& shared_tables(int need_n) {
    static StirlingTables* tables = new StirlingTables(64);
    if (need_n > tables->max_n()) {
        int grow = tables->max_n();
        while (grow < need_n) grow *= 2;
        auto* bigger = new StirlingTables(grow);
        delete tables;
        tables = bigger;
    }
    return *tables;
}

}  // namespace

Integer stirling1(int n, int k) {
    if (n < 0) throw std::domain_error("stirling1: negative n");
    std::lock_guard<std::mutex> lock(table_mutex());
    return shared_tables(n).s1(n, k);
}

Integer stirling2(int n, int k) {
    if (n < 0) throw std::domain_error("stirling2: negative n");
    std::lock_guard<std::mutex> lock(table_mutex());
    return shared_tables(n).s2(n, k);
}

Integer diagonal_stirling1(int n, int r) {
    if (n < 0 || r < 0) throw std::domain_error("diagonal_stirling1: negative argument");
    Rational sum(0);
    for (int k = 0; k <= n; ++k) {
        Rational inner(0);
        for (int m = 0; m <= k; ++m) {
            Rational term(binomial(k, m) * stirling1(n + m, m), binomial(n + m, m));
            inner += (m % 2 == 0) ? term : -term;
        }
        sum += rising_factorial(Rational(-r), k) / Rational(factorial(k)) * inner;
    }
    Rational value = Rational(binomial(n + r, r)) * sum;
    if (!value.is_integer()) throw std::logic_error("diagonal_stirling1: non-integer result");
    return value.numerator();
}

Integer diagonal_stirling2(int n, int r) {
    if (n < 0 || r < 0) throw std::domain_error("diagonal_stirling2: negative argument");
    Rational sum(0);
    for (int k = 0; k <= n; ++k) {
        Rational inner(0);
        for (int l = 0; l <= k; ++l) {
            Rational term(Integer(binomial(n + k, k - l) * stirling2(n + l, l)));
            inner += (l % 2 == 0) ? term : -term;
        }
        sum += rising_factorial(Rational(-r), k) / Rational(factorial(n + k)) * inner;
    }
    Rational value = Rational(factorial(n + r), factorial(r)) * sum;
    if (!value.is_integer()) throw std::logic_error("diagonal_stirling2: non-integer result");
    return value.numerator();
}

}  // namespace bstir
