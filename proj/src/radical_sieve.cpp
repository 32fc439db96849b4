#include "abcq/search.hpp"

#include <string>

#include "abcq/errors.hpp"

namespace abcq {

RadicalTable build_radical_sieve(std::uint64_t limit, std::size_t memory_budget) {
    if (limit < 2) throw DomainError("build_radical_sieve: limit must be >= 2");
    if (limit > UINT32_MAX || (limit + 1) > memory_budget / sizeof(std::uint32_t)) {
        throw ResourceError("build_radical_sieve: table for N = " + std::to_string(limit) +
                            " exceeds the memory budget of " + std::to_string(memory_budget) + " bytes");
    }
    RadicalTable table;
    auto& t = table.rad_;
    t.assign(limit + 1, 0);
    // First pass leaves the smallest prime factor of every composite.
    for (std::uint64_t i = 2; i * i <= limit; ++i) {
        if (t[i] != 0) continue;
        for (std::uint64_t j = i * i; j <= limit; j += i) {
            if (t[j] == 0) t[j] = static_cast<std::uint32_t>(i);
        }
    }
    // Ascending rewrite spf -> rad; m / p < m is already converted.
    t[1] = 1;
    for (std::uint64_t m = 2; m <= limit; ++m) {
        const std::uint32_t p = t[m];
        if (p == 0) {
            t[m] = static_cast<std::uint32_t>(m);
            continue;
        }
        const std::uint64_t rest = m / p;
        t[m] = rest % p == 0 ? t[rest] : t[rest] * p;
    }
    return table;
}

}  // namespace abcq
