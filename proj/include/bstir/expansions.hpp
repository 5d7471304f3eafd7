#pragma once

#include "bstir/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bstir {

// The nine target functions whose Maclaurin coefficients are generated in
// closed form and cross-checked against the series oracle. The _pow_r ids
// take a Rational exponent r; all others take none.
enum class ExpansionId {
    log_exp_plus1_half,   // log((e^x + 1)/2)
    log_expm1_over_x,     // log((e^x - 1)/x)
    log_cosh,             // log cosh x
    log_sinh_over_x,      // log(sinh x / x)
    log_cos,              // log cos x
    sqrt_log1p_over_x,    // sqrt(log(1+x)/x)
    log1p_over_x_pow_r,   // (log(1+x)/x)^r
    sqrt_x_over_expm1,    // sqrt(x/(e^x - 1))
    expm1_over_x_pow_r,   // ((e^x - 1)/x)^r
};

// Closed-form flavors. Which variants apply depends on the id; see
// variants_of(). Single-formula ids have exactly one admissible variant.
enum class FormulaVariant { eta, zeta, bernoulli, stirling1, stirling2, mixed };

const std::vector<FormulaVariant>& variants_of(ExpansionId id);
bool requires_r(ExpansionId id);

// Ordinary coefficient c_n of x^n per the (id, variant) closed form.
// r must be present exactly for the _pow_r ids.
Rational coeff(ExpansionId id, FormulaVariant variant, int n,
               const std::optional<Rational>& r = std::nullopt);

// Independent check: builds the target series from fps primitives only
// and reads off c_n. Requires n <= order.
Rational oracle_coeff(ExpansionId id, int n, const std::optional<Rational>& r, int order);

const char* expansion_name(ExpansionId id);
const char* variant_name(FormulaVariant v);
ExpansionId parse_expansion(const std::string& name);
FormulaVariant parse_variant(const std::string& name);

// Formula tag attached to emitted coefficients (provenance strings).
const char* formula_label(ExpansionId id, FormulaVariant variant);

}  // namespace bstir
