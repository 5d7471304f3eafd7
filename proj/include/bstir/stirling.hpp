#pragma once

#include "bstir/rational.hpp"

#include <vector>

namespace bstir {

// Triangles of signed first-kind s(n,k) and second-kind S(n,k) Stirling
// numbers, filled once with
//   s(n+1,k) = s(n,k-1) - n*s(n,k)
//   S(n+1,k) = S(n,k-1) + k*S(n,k)
// then immutable. Out-of-range (k < 0 or k > n) lookups return 0.
class StirlingTables {
public:
    explicit StirlingTables(int max_n);

    int max_n() const { return max_n_; }
    const Integer& s1(int n, int k) const;
    const Integer& s2(int n, int k) const;

private:
    int max_n_;
    std::vector<std::vector<Integer>> s1_, s2_;  // row n holds k = 0..n
};

// Module-level lookups over a shared table that grows on demand
// (mutex-guarded).
Integer stirling1(int n, int k);
Integer stirling2(int n, int k);

// Diagonal sums evaluating s(n+r,r) and S(n+r,r) through alternating
// binomial/Stirling double sums; exact, integrality checked.
Integer diagonal_stirling1(int n, int r);
Integer diagonal_stirling2(int n, int r);

}  // namespace bstir
