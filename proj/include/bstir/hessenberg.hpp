#pragma once

#include "bstir/rational.hpp"

#include <vector>

namespace bstir {

// Lower-Hessenberg matrix of Rationals: entries (i,j) with j > i+1 are
// structurally zero (0-based indices). Only columns 0..min(i+1, size-1)
// of row i are stored.
class HessenbergMatrix {
public:
    explicit HessenbergMatrix(int size);

    int size() const { return size_; }
    const Rational& at(int i, int j) const;       // structural zeros readable
    void set(int i, int j, const Rational& v);    // rejects j > i+1

private:
    int size_;
    std::vector<std::vector<Rational>> rows_;
};

// Instrumentation for benchmarks: Rational multiplications performed.
struct DetStats {
    unsigned long multiplications = 0;
};

// Exact determinant by fraction-based Gaussian elimination with row
// pivoting; the oracle algorithm. det of the 0x0 matrix is 1.
Rational det_elimination(const HessenbergMatrix& m, DetStats* stats = nullptr);

// Exact determinant by the lower-Hessenberg recursion
//   H_k = sum_{l=1}^{k} (-1)^{k-l} h_{k,l} (prod_{j=l}^{k-1} h_{j,j+1}) H_{l-1}
// with H_0 = 1 and empty products equal to 1 (indices 1-based here).
Rational det_recursive(const HessenbergMatrix& m, DetStats* stats = nullptr);

// Derivatives of p and q at 0: p(0), p'(0), ... and q(0), q'(0), ...
// The ratio p/q must be regular at 0, i.e. q_derivs[0] != 0.
struct DerivativePair {
    std::vector<Rational> p_derivs;
    std::vector<Rational> q_derivs;
};

// The (k+1)x(k+1) lower-Hessenberg matrix whose determinant yields the k-th
// derivative of p/q at 0: column 0 holds p^{(i)}(0); column c >= 1 holds
// C(i, c-1) * q^{(i-c+1)}(0) where i-c+1 >= 0 and 0 above the superdiagonal.
// Exposed separately so the printed specializations can be regression-tested.
HessenbergMatrix ratio_matrix(const DerivativePair& dp, int k);

// (p/q)^{(k)}(0) = (-1)^k / q(0)^{k+1} * det(ratio_matrix(dp, k)).
Rational ratio_derivative(const DerivativePair& dp, int k);

}  // namespace bstir
