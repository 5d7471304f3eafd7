#include "bstir/verify.hpp"

#include "bstir/bernoulli.hpp"
#include "bstir/identities.hpp"

namespace bstir {

namespace {

const char* bool_str(bool b) { return b ? "true" : "false"; }

OutputRecord route_record(const std::string& family, const std::string& route,
                          const std::string& label, int n, const Rational& value,
                          const Rational& reference) {
    OutputRecord rec;
    rec.kind = "route_check";
    rec.inputs = {{"family", family}, {"route", route}, {"n", std::to_string(n)}};
    const bool pass = (value == reference);
    rec.values = {{"value", value.str()}, {"reference", reference.str()}, {"pass", bool_str(pass)}};
    rec.provenance = label;
    return rec;
}

// A display adjudication: we evaluate a formula exactly as displayed (or its
// adjusted form) and record whether the two sides agree, together with which
// outcome was expected. The record passes when the observed agreement matches
// the expectation, so a documented mismatch does not fail the run.
OutputRecord display_record(const std::string& name, const std::string& label,
                            std::vector<std::pair<std::string, std::string>> inputs,
                            const Rational& lhs, const Rational& rhs, bool expect_agree) {
    OutputRecord rec;
    rec.kind = "display_check";
    rec.inputs = std::move(inputs);
    rec.inputs.insert(rec.inputs.begin(), {"display", name});
    const bool agrees = (lhs == rhs);
    rec.values = {{"lhs", lhs.str()},
                  {"rhs", rhs.str()},
                  {"agrees", bool_str(agrees)},
                  {"expected", expect_agree ? "agree" : "disagree"},
                  {"pass", bool_str(agrees == expect_agree)}};
    rec.provenance = label;
    return rec;
}

bool record_pass(const OutputRecord& rec) {
    for (const auto& [key, value] : rec.values)
        if (key == "pass") return value == "true";
    return false;
}

}  // namespace

VerifyResult run_verify(const VerifyOptions& options) {
    VerifyResult result;

    // 1. Identity audit.
    const IdentityReport report = audit(options.max_n, options.r_set);
    for (const IdentityEntry& e : report.entries) {
        OutputRecord rec;
        rec.kind = "identity";
        rec.inputs = {{"identity", identity_name(e.id)}};
        for (const auto& [key, value] : e.params) rec.inputs.emplace_back(key, value.str());
        rec.values = {{"lhs", e.lhs.str()}, {"rhs", e.rhs.str()}, {"pass", bool_str(e.pass)}};
        rec.provenance = identity_label(e.id);
        result.records.push_back(std::move(rec));
    }

    // 2. Bernoulli route agreement against the defining recurrence.
    static constexpr BernoulliRoute kRoutes[] = {
        BernoulliRoute::det_tanh,       BernoulliRoute::det_tan,
        BernoulliRoute::det_logistic,   BernoulliRoute::det_integral,
        BernoulliRoute::rec_tanh,       BernoulliRoute::rec_logistic,
        BernoulliRoute::rec_integral,   BernoulliRoute::closed_eta,
        BernoulliRoute::closed_zeta_bell, BernoulliRoute::closed_s2,
    };
    for (int k = 1; k <= options.max_n; ++k) {
        const Rational reference = bernoulli_baseline(2 * k);
        for (BernoulliRoute route : kRoutes) {
            Rational value = bernoulli_route_value(route, 2 * k);
            if (options.corrupt_route == bernoulli_route_name(route)) value += Rational(1);
            result.records.push_back(route_record("bernoulli", bernoulli_route_name(route),
                                                  bernoulli_route_label(route), 2 * k, value,
                                                  reference));
        }
    }

    // Bernoulli numbers of the second kind: three alternative routes against
    // the generating-function definition.
    static constexpr Bernoulli2ndRoute kRoutes2[] = {
        Bernoulli2ndRoute::stirling_sum,
        Bernoulli2ndRoute::alt_sum,
        Bernoulli2ndRoute::integral,
    };
    for (int n = 0; n <= options.max_n; ++n) {
        const Rational reference = bernoulli2nd(n, Bernoulli2ndRoute::fps_baseline);
        for (Bernoulli2ndRoute route : kRoutes2) {
            Rational value = bernoulli2nd(n, route);
            if (options.corrupt_route == bernoulli2nd_route_name(route)) value += Rational(1);
            result.records.push_back(route_record("bernoulli2nd", bernoulli2nd_route_name(route),
                                                  bernoulli2nd_route_label(route), n, value,
                                                  reference));
        }
    }

    // 3. Display adjudications: formulas whose printed form disagrees with the
    // value every other route produces, evaluated verbatim and in the adjusted
    // form this library uses.
    const Rational b2 = bernoulli_baseline(2);
    result.records.push_back(display_record(
        "bernoulli_closed_zeta_bell_printed", "Equal=0-Stirl-Bern (as displayed)",
        {{"k", "1"}}, bernoulli_closed_unadjusted(1, BernoulliClosed::zeta_bell), b2, false));
    result.records.push_back(display_record(
        "bernoulli_closed_zeta_bell_adjusted", "Equal=0-Stirl-Bern (adjusted)",
        {{"k", "1"}}, bernoulli_closed(1, BernoulliClosed::zeta_bell), b2, true));
    result.records.push_back(display_record(
        "bernoulli_closed_s2_printed", "Equal-Stirl-Bern2nd (as displayed)",
        {{"k", "1"}}, bernoulli_closed_unadjusted(1, BernoulliClosed::s2), b2, false));
    result.records.push_back(display_record(
        "bernoulli_closed_s2_adjusted", "Equal-Stirl-Bern2nd (adjusted)",
        {{"k", "1"}}, bernoulli_closed(1, BernoulliClosed::s2), b2, true));

    {
        const auto [lhs, rhs_display] = conn_half_display_sides(1);
        result.records.push_back(display_record("conn_half_printed",
                                                "Conn-Stirl-1st-2nd (as displayed)", {{"n", "1"}},
                                                lhs, rhs_display, false));
        result.records.push_back(display_record("conn_half_adjusted",
                                                "Conn-Stirl-1st-2nd (sign-adjusted)", {{"n", "1"}},
                                                lhs, -rhs_display, true));
    }
    {
        // The general connection formula's sign convention is ambiguous in
        // print; record which choice actually holds.
        const Rational r(1, 2);
        const auto [lhs, rhs] = conn_general_sides(1, r);
        OutputRecord rec;
        rec.kind = "display_check";
        rec.inputs = {{"display", "conn_general_sign_choice"}, {"n", "1"}, {"r", r.str()}};
        const bool as_displayed = (lhs == rhs);
        const bool negated = (lhs == -rhs);
        rec.values = {{"lhs", lhs.str()},
                      {"rhs_displayed", rhs.str()},
                      {"rhs_negated", (-rhs).str()},
                      {"holds", as_displayed ? "as-displayed" : (negated ? "negated" : "neither")},
                      {"pass", bool_str(as_displayed)}};
        rec.provenance = "Stirl-1st-2nd-conn";
        result.records.push_back(std::move(rec));
    }

    result.all_pass = true;
    for (const OutputRecord& rec : result.records)
        if (!record_pass(rec)) result.all_pass = false;
    return result;
}

}  // namespace bstir
