#pragma once

#include "bstir/rational.hpp"

namespace bstir {

// Identifiers for the eleven independent computation routes to the
// Bernoulli numbers (baseline plus four determinantal, three recursive,
// three closed-form). Each route keeps its own memo so that agreement
// between routes remains independent evidence.
enum class BernoulliRoute {
    baseline,
    det_tanh,
    det_tan,
    det_logistic,
    det_integral,
    rec_tanh,
    rec_logistic,
    rec_integral,
    closed_eta,
    closed_zeta_bell,
    closed_s2,
};

enum class BernoulliDet { tanh, tan, logistic, integral };
enum class BernoulliRec { tanh, logistic, integral };
enum class BernoulliClosed { eta, zeta_bell, s2 };
enum class Bernoulli2ndRoute { fps_baseline, stirling_sum, alt_sum, integral };

// B_n from the defining recurrence sum_{j=0}^{n} C(n+1,j) B_j = [n = 0].
Rational bernoulli_baseline(int n);

// B_{2k} via a ratio-derivative determinant of order 2k-1 built from the
// derivative sequences of (p, q) at 0 and the route's prefactor:
//   tanh:     p = sinh, q = cosh
//   tan:      p = sin,  q = cos
//   logistic: p = e^x,  q = e^x + 1
//   integral: p-derivs 1/(i+2), q-derivs 1/(i+1)
Rational bernoulli_det(int k, BernoulliDet which);

// B_{2k} via a self-referential recursion over B_2..B_{2k-2} (route-local
// memo; k >= 1).
Rational bernoulli_rec(int k, BernoulliRec which);

// B_{2k} via finite Stirling-number sums. zeta_bell carries a leading
// minus and s2 carries a (2k)! factor relative to the source displays:
// both adjustments are forced by the derivations and are documented in
// the verify report (see bernoulli_closed_unadjusted).
Rational bernoulli_closed(int k, BernoulliClosed which);

// The source displays evaluated verbatim, without the sign/factor
// adjustments. zeta_bell and s2 disagree with the Bernoulli numbers at
// every index; retained so the verify report can document the
// adjudication instead of silently absorbing it. eta needs no adjustment
// and passes through.
Rational bernoulli_closed_unadjusted(int k, BernoulliClosed which);

// B_n^{(r)}: exponential coefficients of (x/(e^x-1))^r,
//   B_n^{(r)} = n! sum_k (r)_k/(n+k)! sum_l (-1)^l C(n+k,k-l) S(n+l,l).
Rational generalized_bernoulli(int n, const Rational& r);

// Bernoulli numbers of the second kind b_n (ordinary coefficients of
// x/log(1+x)) by four independent routes.
Rational bernoulli2nd(int n, Bernoulli2ndRoute which);

// zeta(1-2k) = -B_{2k}/(2k) and eta(1-2k) = (1-2^{2k}) zeta(1-2k), k >= 1.
Rational zeta_neg(int k);
Rational eta_neg(int k);

// Evaluate any route at even index 2k (baseline accepts every n >= 0).
Rational bernoulli_route_value(BernoulliRoute route, int n);

const char* bernoulli_route_name(BernoulliRoute route);
const char* bernoulli2nd_route_name(Bernoulli2ndRoute route);

// Formula tag attached to emitted values (provenance strings).
const char* bernoulli_route_label(BernoulliRoute route);
const char* bernoulli2nd_route_label(Bernoulli2ndRoute route);

}  // namespace bstir
