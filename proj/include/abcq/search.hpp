#pragma once

#include <cstdint>
#include <vector>

#include "abcq/counting.hpp"

namespace abcq {

inline constexpr std::size_t kDefaultMemoryBudget = std::size_t{1} << 30;

// rad(m) for 1 <= m <= limit, from a smallest-prime-factor sieve.  Read-only
// after construction, so one table can serve any number of threads.
class RadicalTable {
public:
    std::uint64_t limit() const { return rad_.empty() ? 0 : rad_.size() - 1; }
    std::uint32_t operator[](std::uint64_t m) const { return rad_[m]; }
    std::size_t bytes() const { return rad_.size() * sizeof(std::uint32_t); }

private:
    friend RadicalTable build_radical_sieve(std::uint64_t, std::size_t);
    std::vector<std::uint32_t> rad_;
};

// Throws ResourceError when the table would not fit in `memory_budget` bytes.
RadicalTable build_radical_sieve(std::uint64_t limit, std::size_t memory_budget = kDefaultMemoryBudget);

struct SearchHit {
    TuplePoint point;
    double quality = 0.0;
    BigInt c_max;
};

// Total order: quality descending, c_max ascending, coordinates ascending.
bool hit_before(const SearchHit& a, const SearchHit& b);

// Representative of {P, -P} under coordinate permutation: the sign with more
// positive entries (then: largest |x| negative, then lexicographically
// smallest), positives ascending followed by negatives ascending in |x|.
TuplePoint canonical_under_permutation(const TuplePoint& p);

enum class Coprimality { overall, pairwise };

struct SearchOptions {
    int threads = 1;
    std::size_t memory_budget = kDefaultMemoryBudget;
};

// All (a, b, -c) with 1 <= a <= b, a + b = c <= max_c, gcd(a, b) = 1 and
// quality > min_quality, sorted by hit_before.  The result does not depend on
// the thread count.
std::vector<SearchHit> search_triples(std::uint64_t max_c, double min_quality, const SearchOptions& opts = {});

// Nonzero (x0..x3) with |x_i| <= max_abs, sum zero, the given coprimality and
// quality > min_quality; one representative per permutation/sign class.
std::vector<SearchHit> search_quadruples(std::uint64_t max_abs, double min_quality, Coprimality mode,
                                         const SearchOptions& opts = {});

// Serial reference kernels: direct enumeration with no pruning.  Kept for
// testing the parallel kernels and for the benchmark.
std::vector<SearchHit> search_triples_serial(std::uint64_t max_c, double min_quality);
std::vector<SearchHit> search_quadruples_serial(std::uint64_t max_abs, double min_quality, Coprimality mode);

// Global top-k of sorted partial results, duplicates removed.  k = 0 keeps all.
std::vector<SearchHit> top_k_merge(std::vector<std::vector<SearchHit>> partials, std::size_t k);

}  // namespace abcq
