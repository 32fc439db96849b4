#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "abcq/check.hpp"
#include "abcq/constructions.hpp"
#include "abcq/search.hpp"

using namespace abcq;

namespace {

TupleRecord manual(std::initializer_list<long> xs) {
    return {kRecordVersion, make_point(xs), RecordSource::manual, nlohmann::json::object()};
}

}  // namespace

TEST_CASE("single record examples") {
    CheckConfig cfg;
    auto rep = check(std::vector<TupleRecord>{manual({1, 8, -9})}, cfg);
    REQUIRE(rep.rows.size() == 1);
    CHECK(rep.summary.violations == 1);
    CHECK(rep.rows[0].excess == doctest::Approx(std::log(1.5)));
    CHECK(rep.rows[0].quality == doctest::Approx(1.2263).epsilon(1e-4));

    rep = check(std::vector<TupleRecord>{manual({1, 1, 1, -3})}, cfg);
    CHECK(rep.rows[0].excess == 0.0);
    CHECK(rep.summary.violations == 0);

    cfg.eps = 1;
    rep = check(std::vector<TupleRecord>{manual({1, 1, 1, -3})}, cfg);
    CHECK(rep.rows[0].excess == doctest::Approx(-std::log(3.0)));

    rep = check(std::vector<TupleRecord>{manual({1, 1, -1, -1})}, cfg);
    CHECK(rep.summary.infinite_quality == 1);
    CHECK(rep.to_json()["records"][0]["quality"] == "inf");

    cfg.eps = -1;
    CHECK_THROWS_AS(check(std::vector<TupleRecord>{manual({1, 8, -9})}, cfg), DomainError);
}

TEST_CASE("doubled quadruples all violate") {
    std::vector<TupleRecord> recs;
    for (const auto& h : search_triples(3000, 1.1))
        recs.push_back(record_from_doubling(h.point, double_triple(h.point)));
    REQUIRE(recs.size() > 10);
    CheckConfig cfg;
    cfg.eps = Rational(9, 10);
    const auto rep = check(recs, cfg);
    CHECK(rep.summary.violations == recs.size());
    for (const auto& row : rep.rows) CHECK(row.quality > 2.0);
}

TEST_CASE("malformed records become per-record errors") {
    std::stringstream ss;
    ss << R"({"version":1,"n":3,"x":["1","8","-9"],"source":"manual","meta":{}})" << "\n";
    ss << R"({"version":1,"n":3,"x":["1","8","-8"],"source":"manual","meta":{}})" << "\n";
    ss << R"({"version":1,"n":3,"x":["1","80","-81"],"source":"manual","meta":{}})" << "\n";
    const auto rep = check(read_records_lenient(ss), CheckConfig{});
    CHECK(rep.summary.records == 3);
    CHECK(rep.summary.errors == 1);
    CHECK(rep.summary.evaluated == 2);
    CHECK(rep.rows[1].error.has_value());
    CHECK(rep.rows[1].line == 2);
    CHECK(rep.to_json()["records"][1].contains("error"));
}

TEST_CASE("unfactorable records report an error and processing continues") {
    // n4 output with a 600+ digit x0 that rho cannot split in budget
    const auto c = construct_n4(Rational(1, 10), 1)[0];
    std::vector<TupleRecord> recs{record_from_construction(c), manual({1, 8, -9})};
    const auto rep = check(recs, CheckConfig{});
    CHECK(rep.summary.records == 2);
    CHECK(rep.summary.evaluated + rep.summary.errors == 2);
    CHECK_FALSE(rep.rows[1].error.has_value());
}

TEST_CASE("summary is invariant under record order and thread count") {
    std::vector<TupleRecord> recs;
    for (const auto& h : search_triples(5000, 0.9)) recs.push_back(record_from_hit(h));
    CheckConfig cfg;
    cfg.eps = Rational(1, 10);
    cfg.form = ExcessForm::vojta;
    cfg.c_log = -0.5;
    const auto base = check(recs, cfg).to_json()["summary"];

    std::mt19937_64 rng(3);
    for (int i = 0; i < 3; ++i) {
        std::shuffle(recs.begin(), recs.end(), rng);
        CHECK(check(recs, cfg, 1 + i * 3).to_json()["summary"] == base);
    }
    std::size_t binned = 0;
    for (const auto& b : base["histogram"]) {
        CHECK(b["hi"].get<double>() - b["lo"].get<double>() == doctest::Approx(kHistogramBinWidth));
        binned += b["count"].get<std::size_t>();
    }
    CHECK(binned == recs.size());
}
