#include "bstir/expansions.hpp"

#include "doctest.h"

#include <stdexcept>
#include <string>
#include <vector>

using bstir::coeff;
using bstir::expansion_name;
using bstir::ExpansionId;
using bstir::formula_label;
using bstir::FormulaVariant;
using bstir::oracle_coeff;
using bstir::parse_expansion;
using bstir::parse_variant;
using bstir::Rational;
using bstir::requires_r;
using bstir::variant_name;
using bstir::variants_of;

namespace {

void check_prefix(ExpansionId id, const std::vector<Rational>& expected) {
    for (const FormulaVariant variant : variants_of(id))
        for (std::size_t n = 0; n < expected.size(); ++n) {
            INFO(expansion_name(id), "/", variant_name(variant), " at n=", n);
            CHECK(coeff(id, variant, static_cast<int>(n)) == expected[n]);
        }
}

}  // namespace

TEST_CASE("frozen leading coefficients, every variant") {
    check_prefix(ExpansionId::log_exp_plus1_half,
                 {Rational(0), Rational(1, 2), Rational(1, 8), Rational(0), Rational(-1, 192),
                  Rational(0), Rational(1, 2880)});
    check_prefix(ExpansionId::log_expm1_over_x,
                 {Rational(0), Rational(1, 2), Rational(1, 24), Rational(0), Rational(-1, 2880),
                  Rational(0), Rational(1, 181440)});
    check_prefix(ExpansionId::log_cosh,
                 {Rational(0), Rational(0), Rational(1, 2), Rational(0), Rational(-1, 12),
                  Rational(0), Rational(1, 45)});
    check_prefix(ExpansionId::log_sinh_over_x,
                 {Rational(0), Rational(0), Rational(1, 6), Rational(0), Rational(-1, 180),
                  Rational(0), Rational(1, 2835)});
    check_prefix(ExpansionId::log_cos,
                 {Rational(0), Rational(0), Rational(-1, 2), Rational(0), Rational(-1, 12),
                  Rational(0), Rational(-1, 45)});
    check_prefix(ExpansionId::sqrt_log1p_over_x,
                 {Rational(1), Rational(-1, 4), Rational(13, 96), Rational(-35, 384),
                  Rational(6271, 92160), Rational(-2211, 40960), Rational(2760011, 61931520)});
    check_prefix(ExpansionId::sqrt_x_over_expm1,
                 {Rational(1), Rational(-1, 4), Rational(1, 96), Rational(1, 384),
                  Rational(-1, 10240), Rational(-19, 368640), Rational(79, 61931520)});
}

TEST_CASE("catalogue structure") {
    CHECK(variants_of(ExpansionId::log_exp_plus1_half) ==
          std::vector<FormulaVariant>{FormulaVariant::eta, FormulaVariant::bernoulli,
                                      FormulaVariant::stirling2});
    CHECK(variants_of(ExpansionId::log_expm1_over_x) ==
          std::vector<FormulaVariant>{FormulaVariant::zeta, FormulaVariant::bernoulli,
                                      FormulaVariant::stirling2});
    CHECK(variants_of(ExpansionId::log_cos) == std::vector<FormulaVariant>{FormulaVariant::bernoulli});
    CHECK(variants_of(ExpansionId::sqrt_log1p_over_x) ==
          std::vector<FormulaVariant>{FormulaVariant::stirling1});
    CHECK(variants_of(ExpansionId::log1p_over_x_pow_r) ==
          std::vector<FormulaVariant>{FormulaVariant::stirling1, FormulaVariant::mixed});
    CHECK(variants_of(ExpansionId::expm1_over_x_pow_r) ==
          std::vector<FormulaVariant>{FormulaVariant::stirling2, FormulaVariant::mixed});

    CHECK(requires_r(ExpansionId::log1p_over_x_pow_r));
    CHECK(requires_r(ExpansionId::expm1_over_x_pow_r));
    CHECK(!requires_r(ExpansionId::sqrt_x_over_expm1));

    CHECK(parse_expansion("log_cosh") == ExpansionId::log_cosh);
    CHECK(parse_expansion(expansion_name(ExpansionId::expm1_over_x_pow_r)) ==
          ExpansionId::expm1_over_x_pow_r);
    CHECK(parse_variant("stirling2") == FormulaVariant::stirling2);
    CHECK_THROWS_AS(parse_expansion("nope"), std::invalid_argument);
    CHECK_THROWS_AS(parse_variant("nope"), std::invalid_argument);
}

TEST_CASE("parameterized families at specific exponents") {
    // r = 1 collapses to the plain series
    for (int n = 0; n <= 8; ++n) {
        CHECK(coeff(ExpansionId::log1p_over_x_pow_r, FormulaVariant::stirling1, n, Rational(1)) ==
              Rational(n % 2 == 0 ? 1 : -1, n + 1));
        CHECK(coeff(ExpansionId::expm1_over_x_pow_r, FormulaVariant::stirling2, n, Rational(1)) ==
              oracle_coeff(ExpansionId::expm1_over_x_pow_r, n, Rational(1), 8));
    }
    // both variants against the series oracle at fractional and negative r
    for (const Rational& r : {Rational(-2), Rational(-1, 2), Rational(3, 2)})
        for (ExpansionId id : {ExpansionId::log1p_over_x_pow_r, ExpansionId::expm1_over_x_pow_r})
            for (FormulaVariant variant : variants_of(id))
                for (int n = 0; n <= 8; ++n) {
                    INFO(expansion_name(id), "/", variant_name(variant), " r=", r.str(),
                         " n=", n);
                    CHECK(coeff(id, variant, n, r) == oracle_coeff(id, n, r, 8));
                }
}

TEST_CASE("square-root families against the oracle") {
    for (ExpansionId id : {ExpansionId::sqrt_log1p_over_x, ExpansionId::sqrt_x_over_expm1})
        for (FormulaVariant variant : variants_of(id))
            for (int n = 0; n <= 10; ++n)
                CHECK(coeff(id, variant, n) == oracle_coeff(id, n, std::nullopt, 10));
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(coeff(ExpansionId::log_cosh, FormulaVariant::stirling1, 2),
                    std::invalid_argument);  // variant not in catalogue
    CHECK_THROWS_AS(coeff(ExpansionId::log1p_over_x_pow_r, FormulaVariant::stirling1, 2),
                    std::invalid_argument);  // missing r
    CHECK_THROWS_AS(coeff(ExpansionId::log_cosh, FormulaVariant::bernoulli, 2, Rational(1)),
                    std::invalid_argument);  // stray r
    CHECK_THROWS_AS(coeff(ExpansionId::log_cosh, FormulaVariant::bernoulli, -1),
                    std::domain_error);
    CHECK_THROWS_AS(oracle_coeff(ExpansionId::log_cosh, 5, std::nullopt, 4),
                    std::domain_error);  // order below requested index
}

TEST_CASE("formula labels are non-empty and distinguish variants") {
    for (ExpansionId id :
         {ExpansionId::log_exp_plus1_half, ExpansionId::log_expm1_over_x, ExpansionId::log_cosh,
          ExpansionId::log_sinh_over_x, ExpansionId::log_cos, ExpansionId::sqrt_log1p_over_x,
          ExpansionId::log1p_over_x_pow_r, ExpansionId::sqrt_x_over_expm1,
          ExpansionId::expm1_over_x_pow_r}) {
        const auto& vs = variants_of(id);
        for (std::size_t i = 0; i < vs.size(); ++i) {
            CHECK(std::string(formula_label(id, vs[i])) != "");
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                CHECK(std::string(formula_label(id, vs[i])) != formula_label(id, vs[j]));
        }
    }
}
