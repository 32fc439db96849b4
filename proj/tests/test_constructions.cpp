#include <doctest.h>

#include <cmath>

#include "abcq/constructions.hpp"
#include "abcq/contfrac.hpp"
#include "abcq/errors.hpp"
#include "abcq/search.hpp"

using namespace abcq;

namespace {

BigInt pow_big(long b, unsigned long e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), b, e);
    return r;
}

// Every (e1, e2) with 0 < q1^e1 - q2^e2 < eps q1^e1 and e1 <= max_e1,
// found by walking all powers exactly.
std::vector<std::pair<unsigned long, unsigned long>> brute_log_ratio(long q1, long q2, const Rational& eps,
                                                                     bool odd, unsigned long max_e1) {
    std::vector<std::pair<unsigned long, unsigned long>> out;
    BigInt a = 1;
    for (unsigned long e1 = 1; e1 <= max_e1; ++e1) {
        a *= q1;
        if (odd && e1 % 2 == 0) continue;
        BigInt b = q2;
        for (unsigned long e2 = 1; b < a; ++e2, b *= q2) {
            const Rational gap(a - b, a);
            if (gap < eps) out.emplace_back(e1, e2);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("double_triple examples") {
    CHECK(double_triple(make_point({1, 8, -9})) == make_point({1, 16, 64, -81}));
    CHECK(double_triple(make_point({1, 1, -2})) == make_point({1, 2, 1, -4}));
    CHECK(double_triple(make_point({5, 27, -32})) == make_point({25, 270, 729, -1024}));
    CHECK(conductor(make_point({25, 270, 729, -1024})) == 30);
    CHECK_THROWS_AS(double_triple(make_point({1, 1, 1, -3})), DomainError);
}

TEST_CASE("doubling law over every primitive triple with c <= 1000") {
    const auto hits = search_triples(1000, 0.0);
    CHECK(hits.size() > 100000);
    std::size_t failures = 0;
    for (const auto& h : hits) {
        const auto d = double_triple(h.point);
        if (!verify_doubling(h.point, d).empty()) ++failures;
        // b'^2 = 4 a' c'
        if (d[1] * d[1] != 4 * d[0] * d[2]) ++failures;
        if (std::fabs(height(d) - 2 * height(h.point)) > std::log(2.0) + 1e-12) ++failures;
    }
    CHECK(failures == 0);
}

TEST_CASE("family_2k") {
    CHECK(family_2k(1) == make_point({1, 8, -9}));
    CHECK(family_2k(2) == make_point({1, 80, -81}));
    CHECK(conductor(family_2k(2)) == 30);
    CHECK(quality(family_2k(2)) == doctest::Approx(1.2920).epsilon(1e-4));
    const auto f3 = family_2k(3);
    CHECK(f3 == make_point({1, 6560, -6561}));
    CHECK(conductor(f3) == 1230);
    CHECK(valuation(f3[1], 2) == 5);
    CHECK_THROWS_AS(family_2k(0), DomainError);
    CHECK_THROWS_AS(family_2k(20), DigitBudgetExceeded);
    CHECK_THROWS_AS(family_2k(70), DigitBudgetExceeded);

    for (unsigned long k = 1; k <= 12; ++k) {
        const auto t = family_2k(k);
        CHECK(verify_family_2k(k, t).empty());
        CHECK(valuation(t[1], 2) == k + 2);
        // rad <= 6 max / 2^{k+2}, and that bound over max shrinks with k
        CHECK(radical_divides(t.abs_product(), 6 * (t[1] >> (k + 2))));
        if (k < 12) CHECK(family_2k_ratio_decreases(k));
    }
}

TEST_CASE("family_2k ratio against exact radicals where factoring is cheap") {
    Rational prev = 2;
    for (unsigned long k = 1; k <= 6; ++k) {
        const auto t = family_2k(k);
        const Rational ratio(conductor(t), t.max_abs());
        CHECK(ratio < prev);
        CHECK(quality(t) >= 1.0);
        prev = ratio;
    }
}

TEST_CASE("continued fraction of log 25 / log 9") {
    const auto pq = log_ratio_partial_quotients(25, 9, 12);
    const std::vector<BigInt> expected{1, 2, 6, 1, 1, 1, 3, 7, 3, 1, 1, 11};
    CHECK(pq == expected);
    const auto deep = log_ratio_partial_quotients(25, 9, 200, 1024);
    CHECK(deep.size() == 200);
    CHECK(std::equal(expected.begin(), expected.end(), deep.begin()));

    const auto cv = convergents(pq);
    REQUIRE(cv.size() == pq.size());
    CHECK(cv[0].p == 1);
    CHECK(cv[0].q == 1);
    CHECK(cv[1].p == 3);
    CHECK(cv[1].q == 2);
    for (std::size_t i = 1; i < cv.size(); ++i) {
        const BigInt det = cv[i].p * cv[i - 1].q - cv[i - 1].p * cv[i].q;
        CHECK(abs(det) == 1);
    }
}

TEST_CASE("log_ratio_solutions examples") {
    auto s = log_ratio_solutions(9, 25, Rational(15, 100), Parity::e1_odd, 1);
    REQUIRE(s.size() == 1);
    CHECK(s[0].e1 == 3);
    CHECK(s[0].e2 == 2);
    CHECK(s[0].relative_gap == Rational(104, 729));

    s = log_ratio_solutions(9, 25, 1, Parity::none, 3);
    REQUIRE(s.size() == 3);
    CHECK(s[0].e1 == 2);
    CHECK(s[0].e2 == 1);
    CHECK(s[1].e1 == 3);
    CHECK(s[1].e2 == 1);
    CHECK(s[2].e1 == 3);
    CHECK(s[2].e2 == 2);

    CHECK_THROWS_AS(log_ratio_solutions(9, 25, 0, Parity::none, 1), DomainError);
    CHECK_THROWS_AS(log_ratio_solutions(9, 25, 2, Parity::none, 1), DomainError);
    CHECK_THROWS_AS(log_ratio_solutions(9, 81, Rational(1, 10), Parity::none, 1), DomainError);
}

TEST_CASE("log_ratio_solutions matches an exhaustive scan") {
    for (const Rational eps : {Rational(1, 2), Rational(15, 100), Rational(1, 10), Rational(1, 50)}) {
        for (const bool odd : {false, true}) {
            const auto brute = brute_log_ratio(9, 25, eps, odd, 160);
            const auto got =
                log_ratio_solutions(9, 25, eps, odd ? Parity::e1_odd : Parity::none, brute.size());
            REQUIRE(got.size() == brute.size());
            for (std::size_t i = 0; i < brute.size(); ++i) {
                CHECK(got[i].e1 == brute[i].first);
                CHECK(got[i].e2 == brute[i].second);
            }
        }
    }
    const auto brute = brute_log_ratio(7, 11, Rational(1, 20), false, 200);
    const auto got = log_ratio_solutions(7, 11, Rational(1, 20), Parity::none, brute.size());
    REQUIRE(got.size() == brute.size());
    for (std::size_t i = 0; i < brute.size(); ++i) CHECK(got[i].e1 == brute[i].first);
}

TEST_CASE("log_ratio_solutions frozen list at eps 1/10") {
    const std::vector<std::pair<unsigned long, unsigned long>> expected{
        {63, 43},   {85, 58},   {189, 129}, {211, 144}, {293, 200}, {315, 215}, {419, 286},
        {441, 301}, {523, 357}, {545, 372}, {649, 443}, {671, 458}, {753, 514}, {775, 529}};
    const auto got = log_ratio_solutions(9, 25, Rational(1, 10), Parity::e1_odd, expected.size());
    REQUIRE(got.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(got[i].e1 == expected[i].first);
        CHECK(got[i].e2 == expected[i].second);
    }
}

TEST_CASE("construct_n4") {
    auto first = construct_n4(Rational(15, 100), 1);
    REQUIRE(first.size() == 1);
    CHECK(first[0].point == make_point({103, -729, 625, 1}));
    CHECK(conductor(first[0].point) == 1545);
    CHECK(first[0].plan.kind == ConstructionKind::p26_n4);

    const auto out = construct_n4(Rational(1, 10), 12);
    REQUIRE(out.size() == 12);
    for (const auto& c : out) {
        CHECK(verify_n4(c).empty());
        const BigInt& x0 = c.point[0];
        CHECK(x0 % 3 == 1);
        CHECK(x0 % 5 == 3);
        CHECK(c.plan.e1 % 2 == 1);
        CHECK(10 * (c.point.max_abs() - c.point[2]) < c.point.max_abs());
    }

    ConstructionOptions tiny;
    tiny.digit_budget = 50;
    CHECK_THROWS_AS(construct_n4(Rational(1, 10), 1, tiny), ResourceError);
}

TEST_CASE("order_exponents") {
    const std::vector<BigInt> four{7, 11, 13, 17};
    const auto r = order_exponents(four);
    CHECK(r == std::vector<unsigned long>{240, 48, 20, 30});
    const std::vector<BigInt> two{3, 5};
    CHECK(order_exponents(two) == std::vector<unsigned long>{4, 2});

    // Brute force: least r with p_i^r == 1 mod every other p_j.
    for (std::size_t i = 0; i < four.size(); ++i) {
        unsigned long least = 0;
        for (unsigned long e = 1; least == 0; ++e) {
            bool ok = true;
            for (std::size_t j = 0; j < four.size(); ++j) {
                if (i == j) continue;
                BigInt v;
                mpz_powm_ui(v.get_mpz_t(), four[i].get_mpz_t(), e, four[j].get_mpz_t());
                ok = ok && v == 1;
            }
            if (ok) least = e;
        }
        CHECK(r[i] == least);
    }

    const std::vector<BigInt> repeated{7, 7, 11};
    CHECK_THROWS_AS(order_exponents(repeated), DomainError);
    const std::vector<BigInt> composite{7, 9};
    CHECK_THROWS_AS(order_exponents(composite), DomainError);
    CHECK(default_primes(5) == std::vector<BigInt>{7, 11, 13, 17});
}

TEST_CASE("construct_general n = 5") {
    const std::vector<BigInt> primes{7, 11, 13, 17};
    const auto out = construct_general(5, Rational(1, 2), primes, 2, 0);
    REQUIRE(out.size() == 2);
    for (const auto& c : out) {
        CHECK(verify_general(c).empty());
        CHECK(c.plan.orders == std::vector<unsigned long>{240, 48, 20, 30});
        // every q_i^e_i is 1 mod p_j except the j-th, so x0 == -(n - 4) mod
        // p_j for j >= 2 and -(n - 2) mod p_1 (when all exponents are positive)
        bool all_positive = true;
        for (auto e : c.plan.extra_exponents) all_positive = all_positive && e > 0;
        if (all_positive) {
            CHECK(BigInt(c.point[0] + 3) % primes[0] == 0);
            for (std::size_t j = 1; j < primes.size(); ++j) CHECK(BigInt(c.point[0] + 1) % primes[j] == 0);
        }
        CHECK(2 * c.point[0] < c.point.max_abs());
    }
    const auto again = construct_general(5, Rational(1, 2), primes, 2, 0);
    CHECK(again[0].point == out[0].point);
    CHECK(again[1].point == out[1].point);

    CHECK_THROWS_AS(construct_general(4, Rational(1, 2), std::nullopt, 1, 0), DomainError);
    const std::vector<BigInt> small{3, 11, 13, 17};
    CHECK_THROWS_AS(construct_general(5, Rational(1, 2), small, 1, 0), DomainError);
    ConstructionOptions tiny;
    tiny.digit_budget = 100;
    CHECK_THROWS_AS(construct_general(5, Rational(1, 2), primes, 1, 0, tiny), DigitBudgetExceeded);
}

TEST_CASE("construct_general n = 6 with default primes") {
    const auto out = construct_general(6, Rational(1, 2), std::nullopt, 1, 3);
    REQUIRE(out.size() == 1);
    CHECK(out[0].point.n() == 6);
    CHECK(out[0].plan.primes == std::vector<BigInt>{7, 11, 13, 17, 19});
    CHECK(verify_general(out[0]).empty());
}

TEST_CASE("verifiers reject tampered output") {
    auto c = construct_n4(Rational(15, 100), 1)[0];
    c.plan.e1 = 5;
    CHECK_FALSE(verify_n4(c).empty());
    CHECK_FALSE(verify_doubling(make_point({1, 8, -9}), make_point({1, 2, 1, -4})).empty());
    CHECK_FALSE(verify_family_2k(2, make_point({1, 8, -9})).empty());
}
