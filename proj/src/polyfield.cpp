#include "abcq/polyfield.hpp"

#include <algorithm>

#include "abcq/errors.hpp"

namespace abcq {

namespace {

// std::uniform_int_distribution is implementation-defined; this keeps output
// identical across standard libraries.
long draw(std::mt19937_64& rng, long lo, long hi) {
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    for (;;) {
        const std::uint64_t v = rng();
        if (v < limit) return lo + static_cast<long>(v % range);
    }
}

UniPoly random_factor(std::mt19937_64& rng, int deg) {
    std::vector<Rational> c(static_cast<std::size_t>(deg) + 1);
    for (auto& x : c) x = draw(rng, -5, 5);
    if (c.back() == 0) c.back() = 1;
    return UniPoly(std::move(c));
}

UniPoly random_structured(std::mt19937_64& rng, int max_deg) {
    UniPoly f = UniPoly::constant(Rational(draw(rng, 1, 4)) * (draw(rng, 0, 1) ? 1 : -1));
    const long factors = draw(rng, 0, 4);
    for (long i = 0; i < factors; ++i) {
        const int room = max_deg - f.degree();
        if (room < 1) break;
        const int deg = static_cast<int>(draw(rng, 1, std::min(3, room)));
        const unsigned e = static_cast<unsigned>(draw(rng, 1, std::max(1, std::min(4, room / deg))));
        f = f * power(random_factor(rng, deg), e);
    }
    return f;
}

}  // namespace

FFTriple random_coprime_triple(std::mt19937_64& rng, int max_deg) {
    if (max_deg < 1) throw DomainError("random_coprime_triple: max_deg must be >= 1");
    for (;;) {
        UniPoly a = random_structured(rng, max_deg);
        UniPoly b = random_structured(rng, max_deg);
        const UniPoly g = poly_gcd(a, b);
        if (g.degree() > 0) {
            a = divmod(a, g).quotient;
            b = divmod(b, g).quotient;
        }
        UniPoly c = -(a + b);
        if (c.is_zero() || (a.is_constant() && b.is_constant())) continue;
        return FFTriple::make(std::move(a), std::move(b), std::move(c));
    }
}

PolyfieldSummary polyfield_verify(std::size_t trials, int max_deg, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    PolyfieldSummary s;
    for (std::size_t i = 0; i < trials; ++i) {
        const FFTriple t = random_coprime_triple(rng, max_deg);
        ++s.trials;
        const int h = ff_height(t), r = ff_counting_trunc(t);
        if (ff_abc_check(t)) {
            ++s.passed;
            if (h == r - 1) ++s.sharp;
        } else {
            s.failures.push_back("trial " + std::to_string(i) + ": a = " + t.a().to_string() +
                                 ", b = " + t.b().to_string());
        }
    }
    return s;
}

}  // namespace abcq
