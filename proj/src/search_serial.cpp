#include <numeric>

#include "abcq/errors.hpp"
#include "search_detail.hpp"

namespace abcq {

using detail::u128;
using detail::u64;

std::vector<SearchHit> search_triples_serial(std::uint64_t max_c, double min_quality) {
    if (max_c < 2) return {};
    const RadicalTable rad = build_radical_sieve(max_c);
    const detail::QualityGate gate(min_quality);
    std::vector<SearchHit> hits;
    for (u64 c = 2; c <= max_c; ++c) {
        for (u64 a = 1; a <= c / 2; ++a) {
            if (std::gcd(a, c) != 1) continue;
            const u64 b = c - a;
            if (auto q = gate.admit(c, static_cast<u128>(rad[a]) * rad[b] * rad[c])) {
                hits.push_back(detail::triple_hit(a, b, c, *q));
            }
        }
    }
    detail::sort_hits(hits);
    return hits;
}

std::vector<SearchHit> search_quadruples_serial(std::uint64_t max_abs, double min_quality, Coprimality mode) {
    if (max_abs < 4) throw DomainError("search_quadruples: max_abs must be >= 4");
    const RadicalTable rad = build_radical_sieve(max_abs);
    const detail::QualityGate gate(min_quality);
    std::vector<SearchHit> hits;
    auto consider = [&](u64 a, u64 b, u64 c, u64 d, bool three_positive) {
        if (!detail::coprime_ok(a, b, c, d, mode)) return;
        u128 r = detail::lcm128(detail::lcm128(rad[a], rad[b]), detail::lcm128(rad[c], rad[d]));
        if (auto q = gate.admit(d, r)) hits.push_back(detail::quad_hit(a, b, c, d, three_positive, *q));
    };
    for (u64 d = 1; d <= max_abs; ++d) {
        for (u64 a = 1; a <= d; ++a) {
            for (u64 b = a; a + b < d; ++b) {
                const u64 c = d - a - b;
                if (c >= b) consider(a, b, c, d, true);
            }
        }
        for (u64 c = 1; c <= d; ++c) {
            for (u64 a = 1; a <= d; ++a) {
                const u64 s = c + d;
                if (a >= s) break;
                const u64 b = s - a;
                if (a <= b && b <= d) consider(a, b, c, d, false);
            }
        }
    }
    detail::sort_hits(hits);
    return hits;
}

}  // namespace abcq
