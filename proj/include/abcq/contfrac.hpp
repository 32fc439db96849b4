#pragma once

#include <span>
#include <vector>

#include "abcq/arith.hpp"

namespace abcq {

struct Convergent {
    BigInt p;
    BigInt q;
};

// Partial quotients of log(num_base) / log(den_base).  The ratio is enclosed
// in an interval with directed-rounding MPFR at `bits` of precision and only
// the quotients shared by both interval ends are returned, so every term is
// exact.  Stops at `max_terms` or when the enclosure can no longer decide.
std::vector<BigInt> log_ratio_partial_quotients(const BigInt& num_base, const BigInt& den_base,
                                                std::size_t max_terms, unsigned bits = 512);

std::vector<Convergent> convergents(std::span<const BigInt> partial_quotients);

}  // namespace abcq
