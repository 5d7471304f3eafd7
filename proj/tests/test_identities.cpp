#include "bstir/identities.hpp"

#include "doctest.h"

#include <sstream>
#include <stdexcept>
#include <string>

using bstir::audit;
using bstir::check;
using bstir::conn_general_sides;
using bstir::conn_half_display_sides;
using bstir::identity_label;
using bstir::identity_name;
using bstir::IdentityEntry;
using bstir::IdentityId;
using bstir::IdentityInstance;
using bstir::IdentityReport;
using bstir::Rational;

namespace {

std::string render(const IdentityReport& report) {
    std::ostringstream os;
    for (const IdentityEntry& e : report.entries) {
        os << identity_name(e.id);
        for (const auto& [key, value] : e.params) os << ' ' << key << '=' << value.str();
        os << " lhs=" << e.lhs.str() << " rhs=" << e.rhs.str() << ' ' << (e.pass ? 'P' : 'F')
           << '\n';
    }
    return os.str();
}

}  // namespace

TEST_CASE("single checks produce exact sides") {
    const IdentityEntry helms = check({IdentityId::helms_odd_zero, {{"k", Rational(1)}}});
    CHECK(helms.lhs == Rational(0));
    CHECK(helms.rhs == Rational(0));
    CHECK(helms.pass);

    const IdentityEntry bz = check({IdentityId::bell_zeta_odd_zero, {{"k", Rational(1)}}});
    CHECK(bz.lhs == Rational(0));
    CHECK(bz.pass);

    const IdentityEntry s2s = check({IdentityId::s2_sum_odd_zero, {{"n", Rational(1)}}});
    CHECK(s2s.lhs == Rational(0));
    CHECK(s2s.pass);

    // empty sum on the left, zero binomial on the right
    const IdentityEntry hs =
        check({IdentityId::hockey_stick, {{"n", Rational(3)}, {"m", Rational(5)}}});
    CHECK(hs.lhs == Rational(0));
    CHECK(hs.rhs == Rational(0));
    CHECK(hs.pass);

    const IdentityEntry hs2 =
        check({IdentityId::hockey_stick, {{"n", Rational(5)}, {"m", Rational(2)}}});
    CHECK(hs2.lhs == Rational(20));  // C(2,2)+C(3,2)+C(4,2)+C(5,2) = 1+3+6+10
    CHECK(hs2.pass);

    const IdentityEntry fr =
        check({IdentityId::falling_rising, {{"n", Rational(3)}, {"x", Rational(1, 2)}}});
    CHECK(fr.lhs == Rational(-3, 8));
    CHECK(fr.pass);
}

TEST_CASE("the half-order connection identity needs the sign adjustment") {
    int disagreements = 0;
    for (int n = 0; n <= 6; ++n) {
        const auto [lhs, rhs_display] = conn_half_display_sides(n);
        if (lhs != rhs_display) ++disagreements;
        CHECK(lhs == -rhs_display);
        const IdentityEntry e = check({IdentityId::conn_half, {{"n", Rational(n)}}});
        CHECK(e.pass);
    }
    // the displayed form fails everywhere (both sides are nonzero), hence the
    // adjudication record in the verify report
    CHECK(disagreements == 7);
}

TEST_CASE("the general connection identity holds as displayed") {
    for (int n = 0; n <= 5; ++n)
        for (const Rational& r : {Rational(1, 2), Rational(-3, 2), Rational(2), Rational(-1)}) {
            const auto [lhs, rhs] = conn_general_sides(n, r);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("audit covers every identity and passes") {
    const IdentityReport report = audit(3, {Rational(1)});
    CHECK(report.total == static_cast<int>(report.entries.size()));
    CHECK(report.passed == report.total);
    CHECK(report.failed == 0);

    bool seen[15] = {};
    for (const IdentityEntry& e : report.entries) seen[static_cast<int>(e.id)] = true;
    for (bool s : seen) CHECK(s);
}

TEST_CASE("audit is deterministic") {
    const std::string a = render(audit(2, {Rational(1, 2), Rational(-1)}));
    const std::string b = render(audit(2, {Rational(-1), Rational(1, 2), Rational(-1)}));
    CHECK(a == b);  // r-set order and duplicates do not matter
    CHECK(!a.empty());
}

TEST_CASE("audit without r values skips only the parameterized connections") {
    const IdentityReport report = audit(1, {});
    for (const IdentityEntry& e : report.entries) {
        CHECK(e.id != IdentityId::conn_general);
        CHECK(e.id != IdentityId::conn_log);
    }
    CHECK(report.passed == report.total);
}

TEST_CASE("domain validation") {
    CHECK_THROWS_AS(check({IdentityId::helms_odd_zero, {{"k", Rational(0)}}}), std::domain_error);
    CHECK_THROWS_AS(check({IdentityId::helms_odd_zero, {}}), std::domain_error);
    CHECK_THROWS_AS(check({IdentityId::helms_odd_zero, {{"k", Rational(1, 2)}}}),
                    std::domain_error);
    CHECK_THROWS_AS(check({IdentityId::diag_s1, {{"n", Rational(2)}, {"r", Rational(-1)}}}),
                    std::domain_error);
    CHECK_THROWS_AS(
        check({IdentityId::bell_ones, {{"n", Rational(2)}, {"k", Rational(3)}}}),
        std::domain_error);
    CHECK_THROWS_AS(audit(0, {}), std::domain_error);
}

TEST_CASE("names and labels") {
    CHECK(std::string(identity_name(IdentityId::hockey_stick)) == "hockey_stick");
    CHECK(std::string(identity_label(IdentityId::conn_half)) != "");
    for (int i = 0; i < 15; ++i)
        for (int j = i + 1; j < 15; ++j) {
            CHECK(std::string(identity_name(static_cast<IdentityId>(i))) !=
                  identity_name(static_cast<IdentityId>(j)));
            CHECK(std::string(identity_label(static_cast<IdentityId>(i))) !=
                  identity_label(static_cast<IdentityId>(j)));
        }
}
