#pragma once

#include "bstir/rational.hpp"
#include "bstir/records.hpp"

#include <string>
#include <vector>

namespace bstir {

struct VerifyOptions {
    int max_n = 10;  // identity audit bound and route-agreement bound (k for B_{2k})
    std::vector<Rational> r_set{Rational(-1), Rational(-1, 2), Rational(1, 2), Rational(2)};
    // Test hook: perturb the named route's value so the harness demonstrably
    // catches a disagreement. Empty in normal operation.
    std::string corrupt_route;
};

struct VerifyResult {
    std::vector<OutputRecord> records;
    bool all_pass = false;
};

VerifyResult run_verify(const VerifyOptions& options = {});

}  // namespace bstir
