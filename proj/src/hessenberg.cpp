#include "bstir/hessenberg.hpp"

#include "bstir/factorials.hpp"

#include <stdexcept>
#include <utility>

namespace bstir {

namespace {
const Rational kZero(0);
}

HessenbergMatrix::HessenbergMatrix(int size) : size_(size) {
    if (size < 0) throw std::domain_error("HessenbergMatrix: negative size");
    rows_.resize(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i)
        rows_[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(std::min(i + 2, size)));
}

const Rational& HessenbergMatrix::at(int i, int j) const {
    if (i < 0 || i >= size_ || j < 0 || j >= size_)
        throw std::out_of_range("HessenbergMatrix::at: index out of range");
    if (j > i + 1) return kZero;
    return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

void HessenbergMatrix::set(int i, int j, const Rational& v) {
    if (i < 0 || i >= size_ || j < 0 || j >= size_)
        throw std::out_of_range("HessenbergMatrix::set: index out of range");
    if (j > i + 1)
        throw std::domain_error("HessenbergMatrix::set: entry above the superdiagonal");
    rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
}

Rational det_elimination(const HessenbergMatrix& m, DetStats* stats) {
    const int n = m.size();
    if (n == 0) return Rational(1);
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(n),
                                         std::vector<Rational>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m.at(i, j);

    bool negate = false;
    Rational det(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r) {
            if (!a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(col)]);
            negate = !negate;
        }
        const Rational& p = a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        det *= p;
        if (stats) ++stats->multiplications;
        for (int r = col + 1; r < n; ++r) {
            Rational& lead = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            if (lead.is_zero()) continue;
            const Rational f = lead / p;
            for (int c = col + 1; c < n; ++c) {
                a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                    f * a[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
                if (stats) ++stats->multiplications;
            }
            lead = Rational(0);
        }
    }
    return negate ? -det : det;
}

Rational det_recursive(const HessenbergMatrix& m, DetStats* stats) {
    const int n = m.size();
    std::vector<Rational> h(static_cast<std::size_t>(n) + 1);
    h[0] = Rational(1);
    for (int k = 1; k <= n; ++k) {
        // Terms for l = k down to 1, extending the superdiagonal product
        // prod_{j=l}^{k-1} h_{j,j+1} one factor per step.
        Rational sum(0);
        Rational prod(1);
        for (int l = k; l >= 1; --l) {
            Rational term = m.at(k - 1, l - 1) * prod * h[static_cast<std::size_t>(l - 1)];
            if (stats) stats->multiplications += 2;
            sum += ((k - l) % 2 == 0) ? term : -term;
            if (l >= 2) {
                prod *= m.at(l - 2, l - 1);
                if (stats) ++stats->multiplications;
            }
        }
        h[static_cast<std::size_t>(k)] = sum;
    }
    return h[static_cast<std::size_t>(n)];
}

HessenbergMatrix ratio_matrix(const DerivativePair& dp, int k) {
    if (k < 0) throw std::domain_error("ratio_matrix: negative order");
    if (static_cast<int>(dp.p_derivs.size()) <= k || static_cast<int>(dp.q_derivs.size()) <= k)
        throw std::domain_error("ratio_matrix: derivative lists shorter than order k");
    HessenbergMatrix m(k + 1);
    for (int i = 0; i <= k; ++i) {
        m.set(i, 0, dp.p_derivs[static_cast<std::size_t>(i)]);
        for (int c = 1; c <= std::min(i + 1, k); ++c) {
            const int d = i - c + 1;
            if (d < 0) continue;
            m.set(i, c, Rational(binomial(i, c - 1)) * dp.q_derivs[static_cast<std::size_t>(d)]);
        }
    }
    return m;
}

Rational ratio_derivative(const DerivativePair& dp, int k) {
    if (dp.q_derivs.empty() || dp.q_derivs[0].is_zero())
        throw std::domain_error("ratio_derivative: q(0) must be nonzero");
    const HessenbergMatrix m = ratio_matrix(dp, k);
    const Rational det = det_recursive(m);
    const Rational scale = Rational(1) / pow(dp.q_derivs[0], k + 1);
    return (k % 2 == 0) ? scale * det : -(scale * det);
}

}  // namespace bstir
