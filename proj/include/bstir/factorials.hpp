#pragma once

#include "bstir/rational.hpp"

#include <vector>

namespace bstir {

// Growable cache of n! and n!! values. Not internally synchronized: either
// confine an instance to one owner or use the locked module-level helpers.
class FactorialCache {
public:
    const Integer& factorial(int n);

    // Extended double factorial: (-1)!! = 1, (-3)!! = -1. Negative even
    // and anything below -3 is rejected.
    Integer double_factorial(int n);

private:
    std::vector<Integer> fact_{Integer(1)};    // fact_[n] = n!
    std::vector<Integer> dfact_{Integer(1)};   // dfact_[n] = n!!, 0!! = 1
};

// Module-level helpers over a shared, mutex-guarded cache.
Integer factorial(int n);
Integer double_factorial(int n);

// C(n,k); n >= 0 required, out-of-range k yields 0.
Integer binomial(long n, long k);

// <x>_n = x(x-1)...(x-n+1) and (x)_n = x(x+1)...(x+n-1); both 1 at n = 0.
Rational falling_factorial(const Rational& x, int n);
Rational rising_factorial(const Rational& x, int n);

// 2^e as a big integer.
Integer pow2(unsigned long e);

}  // namespace bstir
