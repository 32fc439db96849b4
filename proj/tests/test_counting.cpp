#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "abcq/counting.hpp"
#include "abcq/errors.hpp"

using namespace abcq;

TEST_CASE("make_point normalizes") {
    CHECK(make_point({2, 16, -18}) == make_point({1, 8, -9}));
    CHECK(make_point({-1, -8, 9}) == make_point({1, 8, -9}));
    CHECK(to_string(make_point({2, 16, -18})) == "(1, 8, -9)");
    CHECK(make_point({1, 8, -9}).coords() == std::vector<BigInt>{1, 8, -9});
    CHECK(make_point({1, 8, -9}).n() == 3);
}

TEST_CASE("make_point rejects bad input with the offending index") {
    try {
        make_point({1, 1, -1});
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.index() == 2u);
    }
    try {
        make_point({3, 0, -3});
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.index() == 1u);
    }
    CHECK_THROWS_AS(make_point({1, -1}), ValidationError);
    CHECK_THROWS_AS(HyperplaneContext(2), ValidationError);
}

TEST_CASE("statistics on small points") {
    const auto p = make_point({1, 8, -9});
    CHECK(height(p) == doctest::Approx(std::log(9.0)));
    CHECK(height(p) == doctest::Approx(2.19722).epsilon(1e-5));
    CHECK(counting_full(p) == doctest::Approx(std::log(72.0)));
    CHECK(counting_trunc(p) == doctest::Approx(std::log(6.0)));
    CHECK(proximity(p) == doctest::Approx(3 * std::log(9.0) - std::log(72.0)));
    CHECK(discriminant_term(p) == 0.0);
    CHECK(quality(p) == doctest::Approx(1.2263).epsilon(1e-4));
    CHECK(conductor(p) == 6);

    const auto q = make_point({1, 1, -2});
    CHECK(height(q) == doctest::Approx(std::log(2.0)));
    CHECK(counting_full(q) == doctest::Approx(std::log(2.0)));
    CHECK(proximity(q) == doctest::Approx(2 * std::log(2.0)));

    const auto u = make_point({1, 1, 1, -3});
    CHECK(counting_full(u) == doctest::Approx(std::log(3.0)));
    CHECK(quality(u) == 1.0);

    const auto n4 = make_point({103, -729, 625, 1});
    CHECK(conductor(n4) == 1545);
    CHECK(counting_trunc(n4) == doctest::Approx(std::log(1545.0)));
    CHECK(discriminant_term(n4) == 0.0);

    CHECK(counting_trunc(make_point({1, 16, 64, -81})) == doctest::Approx(std::log(6.0)));
    CHECK(quality(make_point({1, 16, 64, -81})) == doctest::Approx(2.452588771).epsilon(1e-9));

    const auto big = make_point({2, 6436341, -6436343});
    CHECK(conductor(big) == 15042);
    CHECK(quality(big) == doctest::Approx(1.6299116841).epsilon(1e-9));

    CHECK(quality(make_point({1, 1, -1, -1})) == INFINITY);
}

TEST_CASE("certified quality is exact on integer ratios") {
    CHECK(certified_quality(4, 2) == 2.0);
    CHECK(certified_quality(BigInt(30) * 30 * 30, 30) == 3.0);
    CHECK(certified_quality(9, 6) == doctest::Approx(std::log(9.0) / std::log(6.0)));
    CHECK(quality_from_logs(1.0, 0.0) == INFINITY);
}

TEST_CASE("excess") {
    const auto p = make_point({1, 8, -9});
    CHECK(excess(p, 0, ExcessForm::masser) == doctest::Approx(std::log(1.5)));
    CHECK(excess(p, 0, ExcessForm::vojta) == doctest::Approx(std::log(1.5)));
    const auto u = make_point({1, 1, 1, -3});
    CHECK(excess(u, 1, ExcessForm::masser) == doctest::Approx(-std::log(3.0)));
    CHECK(excess(u, 0, ExcessForm::masser) == 0.0);
    CHECK(excess(u, 1, ExcessForm::vojta) == doctest::Approx(-std::log(3.0)));
    CHECK(excess(p, Rational(1, 2), ExcessForm::vojta) == doctest::Approx(0.5 * std::log(9.0) - std::log(6.0)));
    CHECK_THROWS_AS(excess(p, -1, ExcessForm::masser), DomainError);
}

TEST_CASE("counting identities on random points") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<long> dist(-5000, 5000);
    int checked = 0;
    while (checked < 500) {
        const std::size_t n = 3 + checked % 4;
        std::vector<BigInt> xs;
        BigInt sum = 0;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            long v = dist(rng);
            if (v == 0) v = 1;
            xs.emplace_back(v);
            sum += v;
        }
        if (sum == 0) continue;
        xs.push_back(-sum);
        const auto p = make_point(xs);
        ++checked;

        // N(D, P) is the log of the exact product.
        CHECK(counting_full(p) == doctest::Approx(log_abs(p.abs_product())).epsilon(1e-12));
        CHECK(counting_trunc(p) <= counting_full(p) + 1e-9);
        CHECK(counting_full(p) <= static_cast<double>(n) * height(p) + 1e-9);
        CHECK(proximity(p) >= -1e-9);

        // Permutations and the global sign do not change anything.
        std::vector<BigInt> perm = p.coords();
        std::shuffle(perm.begin(), perm.end(), rng);
        for (auto& x : perm) x = -x;
        const auto q = make_point(perm);
        CHECK(height(q) == height(p));
        CHECK(counting_trunc(q) == counting_trunc(p));
        CHECK(quality(q) == quality(p));
    }
}

TEST_CASE("primitive triples are pairwise coprime") {
    for (long a = 1; a < 60; ++a)
        for (long b = a; b < 60; ++b) {
            const auto p = make_point({a, b, -(a + b)});
            const std::vector<BigInt> mags{abs(p[0]), abs(p[1]), abs(p[2])};
            CHECK(pairwise_coprime(mags));
        }
}

TEST_CASE("ordering") {
    CHECK(make_point({1, 8, -9}) < make_point({1, 1, 1, -3}));
    CHECK(make_point({1, 8, -9}) < make_point({2, 7, -9}));
    CHECK(make_point({1, 8, -9}) == make_point({-1, -8, 9}));
}
