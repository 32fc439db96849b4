#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "abcq/cli.hpp"
#include "abcq/records.hpp"

using namespace abcq;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "abcq");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(is), {}};
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

fs::path scratch(const std::string& name) { return fs::temp_directory_path() / ("abcq_cli_" + name); }

}  // namespace

TEST_CASE("search triples to a file is deterministic") {
    const auto a = scratch("hits_a.jsonl"), b = scratch("hits_b.jsonl");
    auto r = run({"search", "triples", "--max-c", "10000", "--min-quality", "1", "--top", "20", "--out", a.string()});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("20 records") != std::string::npos);
    r = run({"search", "triples", "--max-c", "10000", "--top", "20", "--threads", "4", "--out", b.string()});
    CHECK(r.code == kExitOk);
    CHECK(slurp(a) == slurp(b));
    const auto recs = load_records(a);
    REQUIRE(recs.size() == 20);
    CHECK(recs[0].point == make_point({1, 4374, -4375}));
    fs::remove(a);
    fs::remove(b);
}

TEST_CASE("construct commands") {
    auto r = run({"construct", "p26-n4", "--epsilon", "15/100", "--count", "1"});
    CHECK(r.code == kExitOk);
    const auto rec = parse_record(r.out.substr(0, r.out.find('\n')));
    CHECK(rec.point == make_point({103, -729, 625, 1}));
    CHECK(rec.source == RecordSource::p26_n4);

    r = run({"construct", "double", "--point", "1,8,-9"});
    CHECK(r.code == kExitOk);
    CHECK(parse_record(r.out.substr(0, r.out.find('\n'))).point == make_point({1, 16, 64, -81}));

    r = run({"construct", "family2k", "--k", "1", "--k-to", "4"});
    CHECK(r.code == kExitOk);
    CHECK(count_lines(r.out) == 4);

    r = run({"construct", "p26-general", "--n", "5", "--primes", "7,11,13,17", "--epsilon", "1/2", "--count", "1"});
    CHECK(r.code == kExitOk);
    const auto g1 = r.out;
    r = run({"construct", "p26-general", "--n", "5", "--primes", "7,11,13,17", "--epsilon", "1/2", "--count", "1"});
    CHECK(r.out == g1);
}

TEST_CASE("exit codes") {
    auto r = run({"search", "triples", "--max-c", "100", "--bogus"});
    CHECK(r.code == kExitValidation);
    CHECK(r.err.find("Usage") != std::string::npos);

    CHECK(run({}).code == kExitValidation);
    CHECK(run({"construct", "p26-n4", "--epsilon", "abc"}).code == kExitValidation);
    CHECK(run({"construct", "p26-n4", "--epsilon", "-1/2"}).code == kExitValidation);
    CHECK(run({"construct", "double", "--point", "1,1,-1"}).code == kExitValidation);
    CHECK(run({"check", "--in", "/nonexistent/x.jsonl"}).code == kExitValidation);

    r = run({"construct", "family2k", "--k", "40"});
    CHECK(r.code == kExitResource);
    CHECK(r.out.find("\"kind\"") != std::string::npos);
    CHECK(run({"construct", "p26-n4", "--epsilon", "1/10", "--digit-budget", "30"}).code == kExitResource);

    CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("polyfield verify") {
    const auto r = run({"polyfield", "verify", "--trials", "1000", "--max-deg", "30", "--seed", "7"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.rfind("1000/1000 pass", 0) == 0);
}

TEST_CASE("check, degeneracy and stats on files") {
    const auto hits = scratch("check_in.jsonl"), dbl = scratch("check_dbl.jsonl"), rep = scratch("check_rep.json");
    REQUIRE(run({"search", "triples", "--max-c", "3000", "--out", hits.string()}).code == kExitOk);
    REQUIRE(run({"construct", "double", "--in", hits.string(), "--out", dbl.string()}).code == kExitOk);

    auto r = run({"check", "--in", dbl.string(), "--epsilon", "9/10", "--out", rep.string()});
    CHECK(r.code == kExitOk);
    const auto j = nlohmann::json::parse(slurp(rep));
    CHECK(j["summary"]["violations"] == j["summary"]["records"]);
    const auto first = slurp(rep);
    r = run({"check", "--in", dbl.string(), "--epsilon", "9/10", "--threads", "4", "--out", rep.string()});
    CHECK(slurp(rep) == first);

    r = run({"degeneracy", "--in", dbl.string(), "--degree", "2"});
    CHECK(r.code == kExitOk);
    const auto d = nlohmann::json::parse(r.out);
    CHECK(d["kernel_basis"].size() == 1);

    r = run({"stats", "--in", hits.string()});
    CHECK(r.code == kExitOk);
    CHECK(nlohmann::json::parse(r.out)["max_quality_point"] == "(1, 2400, -2401)");

    for (const auto& p : {hits, dbl, rep}) fs::remove(p);
}
