#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "abcq/search.hpp"

namespace abcq::detail {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline BigInt to_big(u128 v) {
    BigInt out;
    const u64 words[2] = {static_cast<u64>(v), static_cast<u64>(v >> 64)};
    mpz_import(out.get_mpz_t(), 2, -1, sizeof(u64), 0, 0, words);
    return out;
}

inline u128 lcm128(u128 a, u128 b) {
    u128 x = a, y = b;
    while (y) {
        const u128 t = x % y;
        x = y;
        y = t;
    }
    return a / x * b;
}

// Decides quality > min_quality for a candidate with max |x| and conductor.
// A wide float margin settles almost every case; only near-threshold
// candidates go through the exact certified path.
class QualityGate {
public:
    explicit QualityGate(double min_quality) : min_quality_(min_quality) {}

    std::optional<double> admit(u64 max_abs, u128 rad) const {
        if (rad == 1) return certified_quality(to_big(max_abs), BigInt(1));
        const double fast = quality_from_logs(log_abs(static_cast<u128>(max_abs)), log_abs(rad));
        if (fast < min_quality_ - 1e-7) return std::nullopt;
        const double q = certified_quality(to_big(max_abs), to_big(rad));
        if (!(q > min_quality_)) return std::nullopt;
        return q;
    }

    // Conductor bound implied by quality > min_quality for this max, padded
    // so that rounding can only enlarge the candidate set.  nullopt: none.
    std::optional<double> rad_bound(u64 max_abs) const {
        if (min_quality_ <= 0.0) return std::nullopt;
        const double b = std::exp(std::log(static_cast<double>(max_abs)) / min_quality_) * (1.0 + 1e-7) + 1.0;
        if (!(b < 1e30)) return std::nullopt;
        return b;
    }

private:
    double min_quality_;
};

inline SearchHit make_hit(std::vector<BigInt> coords, u64 max_abs, double q) {
    return SearchHit{TuplePoint::make(std::move(coords)), q, to_big(max_abs)};
}

inline SearchHit triple_hit(u64 a, u64 b, u64 c, double q) {
    return make_hit({to_big(a), to_big(b), -to_big(c)}, c, q);
}

// Pattern A: (a, b, c, -d) with a <= b <= c; pattern B: (a, b, -c, -d) with
// a <= b, c <= d and b <= d.
inline SearchHit quad_hit(u64 a, u64 b, u64 c, u64 d, bool three_positive, double q) {
    if (three_positive) return make_hit({to_big(a), to_big(b), to_big(c), -to_big(d)}, d, q);
    return make_hit({to_big(a), to_big(b), -to_big(c), -to_big(d)}, d, q);
}

inline bool coprime_ok(u64 a, u64 b, u64 c, u64 d, Coprimality mode) {
    if (mode == Coprimality::overall) return std::gcd(std::gcd(a, b), std::gcd(c, d)) == 1;
    return std::gcd(a, b) == 1 && std::gcd(a, c) == 1 && std::gcd(a, d) == 1 && std::gcd(b, c) == 1 &&
           std::gcd(b, d) == 1 && std::gcd(c, d) == 1;
}

void sort_hits(std::vector<SearchHit>& hits);

}  // namespace abcq::detail
