#pragma once

#include "bstir/records.hpp"

#include <vector>

namespace bstir {

// Deterministic micro-benchmarks. Each returns one record per measured
// algorithm with an exact operation count and wall-clock milliseconds.
// Sizes are capped (they throw std::domain_error beyond the cap) because the
// exact-arithmetic costs grow quickly.
std::vector<OutputRecord> bench_hessenberg(int size);  // size in [1, 200]
std::vector<OutputRecord> bench_fps(int order);        // order in [1, 512]
std::vector<OutputRecord> bench_bell(int n);           // n in [1, 40]

}  // namespace bstir
