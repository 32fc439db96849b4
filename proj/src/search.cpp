#include <algorithm>
#include <cmath>

#include <omp.h>

#include "abcq/errors.hpp"
#include "search_detail.hpp"

namespace abcq {

using detail::u128;
using detail::u64;

bool hit_before(const SearchHit& a, const SearchHit& b) {
    if (a.quality != b.quality) return a.quality > b.quality;
    if (const int c = cmp(a.c_max, b.c_max); c != 0) return c < 0;
    return a.point < b.point;
}

void detail::sort_hits(std::vector<SearchHit>& hits) { std::sort(hits.begin(), hits.end(), hit_before); }

TuplePoint canonical_under_permutation(const TuplePoint& p) {
    auto arrange = [&](int sign) {
        std::vector<BigInt> pos, neg;
        for (const auto& x : p.coords()) {
            BigInt y = sign * x;
            (y > 0 ? pos : neg).push_back(std::move(y));
        }
        std::sort(pos.begin(), pos.end());
        std::sort(neg.begin(), neg.end(), [](const BigInt& l, const BigInt& r) { return l > r; });
        std::size_t positives = pos.size();
        pos.insert(pos.end(), neg.begin(), neg.end());
        return std::pair{positives, std::move(pos)};
    };
    auto [np, plus] = arrange(1);
    auto [nm, minus] = arrange(-1);
    auto max_is_negative = [](const std::vector<BigInt>& v) {
        BigInt best_pos = 0, best_neg = 0;
        for (const auto& x : v) {
            if (x > 0 && x > best_pos) best_pos = x;
            if (x < 0 && -x > best_neg) best_neg = -x;
        }
        return best_neg > best_pos;
    };
    bool take_plus;
    if (np != nm) {
        take_plus = np > nm;
    } else if (max_is_negative(plus) != max_is_negative(minus)) {
        take_plus = max_is_negative(plus);
    } else {
        take_plus = !(minus < plus);
    }
    return TuplePoint::make(take_plus ? std::move(plus) : std::move(minus));
}

std::vector<SearchHit> top_k_merge(std::vector<std::vector<SearchHit>> partials, std::size_t k) {
    std::vector<SearchHit> all;
    std::size_t total = 0;
    for (const auto& p : partials) total += p.size();
    all.reserve(total);
    for (auto& p : partials) std::move(p.begin(), p.end(), std::back_inserter(all));
    detail::sort_hits(all);
    // Equal points carry equal quality and c_max, so duplicates are adjacent.
    all.erase(std::unique(all.begin(), all.end(), [](const SearchHit& a, const SearchHit& b) { return a.point == b.point; }),
              all.end());
    if (k != 0 && all.size() > k) all.erase(all.begin() + static_cast<long>(k), all.end());
    return all;
}

namespace {

// Members of each squarefree class r, i.e. all m <= N with rad(m) = r, in
// ascending order.
struct RadicalClasses {
    std::vector<std::uint32_t> offsets;
    std::vector<std::uint32_t> members;

    explicit RadicalClasses(const RadicalTable& rad) {
        const u64 n = rad.limit();
        offsets.assign(n + 2, 0);
        for (u64 m = 1; m <= n; ++m) ++offsets[rad[m] + 1];
        for (u64 r = 1; r <= n + 1; ++r) offsets[r] += offsets[r - 1];
        members.resize(n);
        std::vector<std::uint32_t> fill(offsets.begin(), offsets.end() - 1);
        for (u64 m = 1; m <= n; ++m) members[fill[rad[m]]++] = static_cast<std::uint32_t>(m);
    }
};

void triples_for_c(u64 c, const RadicalTable& rad, const RadicalClasses& classes, const detail::QualityGate& gate,
                   std::vector<SearchHit>& out) {
    const u64 rc = rad[c];
    auto emit = [&](u64 x, u64 y, u128 r) {
        if (auto q = gate.admit(c, r)) out.push_back(detail::triple_hit(std::min(x, y), std::max(x, y), c, *q));
    };
    const auto bound = gate.rad_bound(c);
    const double t = bound ? *bound / static_cast<double>(rc) : 0.0;
    const u64 s = bound ? static_cast<u64>(std::sqrt(t)) : c;
    if (bound && t < 1.0) return;
    if (s >= c / 2) {
        for (u64 a = 1; a <= c / 2; ++a) {
            if (std::gcd(a, c) != 1) continue;
            const u64 b = c - a;
            const u128 r = static_cast<u128>(rc) * rad[a] * rad[b];
            if (bound && static_cast<double>(r) > *bound) continue;
            emit(a, b, r);
        }
        return;
    }
    for (u64 r = 1; r <= s; ++r) {
        const u64 lo = classes.offsets[r], hi = classes.offsets[r + 1];
        if (lo == hi || std::gcd(r, rc) != 1) continue;
        for (u64 idx = lo; idx < hi; ++idx) {
            const u64 x = classes.members[idx];
            if (x >= c) break;
            const u64 y = c - x;
            const u64 ry = rad[y];
            if (static_cast<double>(r) * static_cast<double>(ry) > t) continue;
            if (ry <= s && y < x) continue;
            emit(x, y, static_cast<u128>(rc) * r * ry);
        }
    }
}

}  // namespace

std::vector<SearchHit> search_triples(std::uint64_t max_c, double min_quality, const SearchOptions& opts) {
    if (max_c < 2) return {};
    if (3 * (max_c + 2) > opts.memory_budget / sizeof(std::uint32_t)) {
        throw ResourceError("search_triples: N = " + std::to_string(max_c) + " exceeds the memory budget of " +
                            std::to_string(opts.memory_budget) + " bytes");
    }
    const RadicalTable rad = build_radical_sieve(max_c, opts.memory_budget);
    const RadicalClasses classes(rad);
    const detail::QualityGate gate(min_quality);
    const int threads = std::max(1, opts.threads);

    std::vector<std::vector<SearchHit>> partials(static_cast<std::size_t>(threads));
#pragma omp parallel num_threads(threads)
    {
        auto& local = partials[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 1024)
        for (u64 c = 2; c <= max_c; ++c) triples_for_c(c, rad, classes, gate, local);
    }
    return top_k_merge(std::move(partials), 0);
}

namespace {

void quadruples_for_max(u64 d, const RadicalTable& rad, const detail::QualityGate& gate, Coprimality mode,
                        std::vector<SearchHit>& out) {
    const auto bound = gate.rad_bound(d);
    auto over = [&](u128 r) { return bound && static_cast<double>(r) > *bound; };
    const u128 rd = rad[d];
    if (over(rd)) return;
    auto finish = [&](u64 a, u64 b, u64 c, bool three_positive, u128 partial) {
        const u128 r = detail::lcm128(partial, rad[a]);
        if (over(r) || !detail::coprime_ok(a, b, c, d, mode)) return;
        if (auto q = gate.admit(d, r)) out.push_back(detail::quad_hit(a, b, c, d, three_positive, *q));
    };
    // (a, b, c, -d), a <= b <= c, a + b + c = d
    for (u64 c = (d + 2) / 3; c + 2 <= d; ++c) {
        const u128 rcd = detail::lcm128(rd, rad[c]);
        if (over(rcd)) continue;
        const u64 rest = d - c;
        for (u64 b = (rest + 1) / 2; b <= std::min(c, rest - 1); ++b) {
            const u128 rbcd = detail::lcm128(rcd, rad[b]);
            if (over(rbcd)) continue;
            finish(rest - b, b, c, true, rbcd);
        }
    }
    // (a, b, -c, -d), a <= b <= d, c <= d, a + b = c + d
    for (u64 c = 1; c <= d; ++c) {
        const u128 rcd = detail::lcm128(rd, rad[c]);
        if (over(rcd)) continue;
        const u64 s = c + d;
        for (u64 b = (s + 1) / 2; b <= std::min(d, s - 1); ++b) {
            const u128 rbcd = detail::lcm128(rcd, rad[b]);
            if (over(rbcd)) continue;
            finish(s - b, b, c, false, rbcd);
        }
    }
}

}  // namespace

std::vector<SearchHit> search_quadruples(std::uint64_t max_abs, double min_quality, Coprimality mode,
                                         const SearchOptions& opts) {
    if (max_abs < 4) throw DomainError("search_quadruples: max_abs must be >= 4");
    const RadicalTable rad = build_radical_sieve(max_abs, opts.memory_budget);
    const detail::QualityGate gate(min_quality);
    const int threads = std::max(1, opts.threads);

    std::vector<std::vector<SearchHit>> partials(static_cast<std::size_t>(threads));
#pragma omp parallel num_threads(threads)
    {
        auto& local = partials[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 4)
        for (u64 d = 1; d <= max_abs; ++d) quadruples_for_max(d, rad, gate, mode, local);
    }
    return top_k_merge(std::move(partials), 0);
}

}  // namespace abcq
