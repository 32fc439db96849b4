#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "abcq/counting.hpp"

namespace abcq {

// Random a, b over Q[t] built from small-integer factors raised to small
// powers (so radicals are genuinely smaller than the polynomials), divided
// by their gcd, with c = -(a + b).  Degrees of a and b stay <= max_deg.
FFTriple random_coprime_triple(std::mt19937_64& rng, int max_deg);

struct PolyfieldSummary {
    std::size_t trials = 0;
    std::size_t passed = 0;
    // Triples where max deg = deg rad - 1 exactly.
    std::size_t sharp = 0;
    std::vector<std::string> failures;
};

PolyfieldSummary polyfield_verify(std::size_t trials, int max_deg, std::uint64_t seed);

}  // namespace abcq
