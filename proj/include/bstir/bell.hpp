#pragma once

#include "bstir/rational.hpp"

#include <vector>

namespace bstir {

// Argument list x_1..x_m for a partial Bell polynomial evaluation.
using BellArgs = std::vector<Rational>;

// Instrumentation for benchmarks: number of partitions visited.
struct BellStats {
    unsigned long partitions = 0;
};

// B_{n,k}(x_1,...,x_{n-k+1}) by enumeration of the multi-indices
// (l_1..l_{n-k+1}) with sum(i*l_i) = n and sum(l_i) = k:
//   B_{n,k} = sum n!/prod(l_i!) * prod((x_i/i!)^{l_i})
// B_{0,0} = 1 and B_{n,0} = 0 for n >= 1.
Rational bell_partial(int n, int k, const BellArgs& xs, BellStats* stats = nullptr);

enum class BellFamily { halves, factorial_over_next, ones, factorials };

// The explicit argument list the family name abbreviates, long enough for
// a (n,k) evaluation: halves (1/2, 1/3, ...), factorial_over_next
// (1!/2, 2!/3, ...), ones (1, 1, ...), factorials (0!, 1!, ...).
BellArgs bell_family_args(BellFamily family, int n, int k);

// Closed forms for the four families:
//   halves: n!/(n+k)! * sum_l (-1)^{k-l} C(n+k,k-l) S(n+l,l)
//   factorial_over_next: ((-1)^{n-k}/k!) * sum_m (-1)^m C(k,m) s(n+m,m)/C(n+m,m)
//   ones: S(n,k)
//   factorials: (-1)^{n-k} s(n,k)
Rational bell_special(int n, int k, BellFamily family);

const char* bell_family_name(BellFamily family);

}  // namespace bstir
