#pragma once

#include "bstir/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace bstir {

// The standalone combinatorial identities checked by the audit. Each one
// evaluates both sides exactly and passes iff they are equal.
enum class IdentityId {
    helms_odd_zero,     // alternating factorial/2^j sum over S(2k+1,j) vanishes
    bell_zeta_odd_zero, // alternating 1/l-weighted central-binomial sum vanishes
    s2_sum_odd_zero,    // alternating factorial-ratio double sum vanishes
    diag_s1,            // diagonal sum reproduces s(n+r,r)
    diag_s2,            // diagonal sum reproduces S(n+r,r)
    conn_half,          // central-binomial S-sum = -(double-factorial s-sum)
    conn_general,       // (r)_k-weighted side equals (-r)_k-weighted side
    conn_log,           // logarithm-power connection, both displayed sides
    hockey_stick,       // sum_{k=m}^{n} C(k,m) = C(n+1,m+1)
    bell_scaling,       // B_{n,k}(a b x_1, a b^2 x_2, ...) = a^k b^n B_{n,k}(x)
    bell_ones,          // B_{n,k}(1,1,...) = S(n,k)
    bell_factorials,    // B_{n,k}(0!,1!,...) = (-1)^{n-k} s(n,k)
    bell_halves,        // B_{n,k}(1/2,1/3,...) closed form
    bell_ratio,         // B_{n,k}(1!/2,2!/3,...) closed form
    falling_rising,     // (-x)_n = (-1)^n <x>_n
};

using IdentityParams = std::vector<std::pair<std::string, Rational>>;

struct IdentityInstance {
    IdentityId id;
    IdentityParams params;
};

struct IdentityEntry {
    IdentityId id;
    IdentityParams params;
    Rational lhs;
    Rational rhs;
    bool pass = false;
};

struct IdentityReport {
    std::vector<IdentityEntry> entries;
    int total = 0;
    int passed = 0;
    int failed = 0;
};

// Evaluate one instance; throws a domain error naming the violated
// constraint for out-of-domain params.
IdentityEntry check(const IdentityInstance& instance);

// Run every identity over its full grid up to max_n (r over r_set where
// relevant). Entries are ordered by (identity id, then params ascending);
// the result is a pure function of (max_n, r_set).
IdentityReport audit(int max_n, const std::vector<Rational>& r_set);

// Both sides of the conn_half display *before* the sign adjustment: the
// identity holds as lhs == -rhs_display; exposed so the verify report can
// document the adjudication.
std::pair<Rational, Rational> conn_half_display_sides(int n);

// Both sides of conn_general exactly as displayed; exposed so the verify
// report can record which relative sign passes.
std::pair<Rational, Rational> conn_general_sides(int n, const Rational& r);

const char* identity_name(IdentityId id);
// Formula tag attached to report entries (provenance strings).
const char* identity_label(IdentityId id);

}  // namespace bstir
