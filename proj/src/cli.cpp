#include "abcq/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "abcq/check.hpp"
#include "abcq/constructions.hpp"
#include "abcq/degeneracy.hpp"
#include "abcq/errors.hpp"
#include "abcq/polyfield.hpp"
#include "abcq/records.hpp"
#include "abcq/search.hpp"

namespace abcq {

namespace {

Rational parse_rational(const std::string& text) {
    static const std::regex kPattern(R"(^[0-9]+(/[0-9]+)?$)");
    if (!std::regex_match(text, kPattern)) throw ValidationError("epsilon must look like <num>/<den>: " + text);
    Rational q;
    q.set_str(text, 10);
    if (q.get_den() == 0) throw ValidationError("epsilon has zero denominator");
    q.canonicalize();
    return q;
}

std::vector<BigInt> parse_int_list(const std::string& text) {
    std::vector<BigInt> out;
    std::stringstream ss(text);
    std::string item;
    static const std::regex kInt(R"(^-?[0-9]+$)");
    while (std::getline(ss, item, ',')) {
        item.erase(0, item.find_first_not_of(' '));
        item.erase(item.find_last_not_of(' ') + 1);
        if (!std::regex_match(item, kInt)) throw ValidationError("not an integer: '" + item + "'");
        out.emplace_back(item, 10);
    }
    return out;
}

nlohmann::ordered_json plan_json(const ConstructionPlan& p) {
    nlohmann::ordered_json j;
    j["kind"] = to_string(p.kind);
    j["n"] = p.n;
    j["eps"] = p.eps.get_str();
    j["e1"] = p.e1;
    j["e2"] = p.e2;
    j["k"] = p.k;
    nlohmann::ordered_json primes = nlohmann::ordered_json::array();
    for (const auto& x : p.primes) primes.push_back(x.get_str());
    j["primes"] = std::move(primes);
    j["orders"] = p.orders;
    j["extra_exponents"] = p.extra_exponents;
    j["seed"] = std::to_string(p.seed);
    return j;
}

class Output {
public:
    Output(std::ostream& out, const std::string& path) : out_(out), path_(path) {
        if (!path_.empty()) {
            file_.open(path_, std::ios::binary);
            if (!file_) throw ValidationError("cannot open " + path_ + " for writing");
        }
    }
    std::ostream& stream() { return path_.empty() ? out_ : file_; }
    bool to_file() const { return !path_.empty(); }
    const std::string& path() const { return path_; }

private:
    std::ostream& out_;
    std::string path_;
    std::ofstream file_;
};

std::vector<TupleRecord> load_input(const std::string& path) {
    if (path.empty()) throw ValidationError("--in is required");
    return load_records(path);
}

void emit_records(std::ostream& out, const std::string& path, const std::vector<TupleRecord>& records) {
    Output o(out, path);
    write_records(o.stream(), records);
    if (o.to_file()) out << records.size() << " records written to " << o.path() << "\n";
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Search, construct and check high-quality abc n-tuples", "abcq"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    int threads = 1;
    std::string in_path, out_path, eps_text;
    std::size_t digit_budget = ConstructionOptions{}.digit_budget;

    auto* search = app.add_subcommand("search", "Enumerate triples or quadruples above a quality threshold");
    search->require_subcommand(1);
    std::uint64_t max_c = 0, max_abs = 0;
    double min_quality = 1.0;
    std::size_t top = 0;
    std::string coprimality = "overall";
    auto* s_tri = search->add_subcommand("triples", "a + b = c <= max-c, gcd(a, b) = 1");
    s_tri->add_option("--max-c", max_c, "Largest c")->required();
    s_tri->add_option("--min-quality", min_quality, "Report quality strictly above this")->capture_default_str();
    s_tri->add_option("--top", top, "Keep only the best k hits (0 = all)");
    s_tri->add_option("--threads", threads, "Worker threads");
    s_tri->add_option("--out", out_path, "JSONL output file");
    auto* s_quad = search->add_subcommand("quadruples", "x0 + x1 + x2 + x3 = 0, |x_i| <= max-abs");
    s_quad->add_option("--max-abs", max_abs, "Largest |x_i|")->required();
    s_quad->add_option("--min-quality", min_quality, "Report quality strictly above this")->capture_default_str();
    s_quad->add_option("--coprimality", coprimality, "overall | pairwise")
        ->check(CLI::IsMember({"overall", "pairwise"}))
        ->capture_default_str();
    s_quad->add_option("--top", top, "Keep only the best k hits (0 = all)");
    s_quad->add_option("--threads", threads, "Worker threads");
    s_quad->add_option("--out", out_path, "JSONL output file");

    auto* construct = app.add_subcommand("construct", "Generate extremal points");
    construct->require_subcommand(1);
    std::string point_text;
    unsigned long k_from = 1, k_to = 0;
    std::size_t count = 1, n_general = 5;
    std::string primes_text;
    auto* c_double = construct->add_subcommand("double", "(a, b, c) -> (a^2, 2ab, b^2, -c^2)");
    c_double->add_option("--in", in_path, "JSONL file of triples");
    c_double->add_option("--point", point_text, "A single triple, e.g. 1,8,-9");
    c_double->add_option("--out", out_path, "JSONL output file");
    auto* c_family = construct->add_subcommand("family2k", "(1, 3^(2^k) - 1, -3^(2^k))");
    c_family->add_option("--k", k_from, "First k (>= 1)")->capture_default_str();
    c_family->add_option("--k-to", k_to, "Last k (defaults to --k)");
    c_family->add_option("--digit-budget", digit_budget, "Largest integer size in digits")->capture_default_str();
    c_family->add_option("--out", out_path, "JSONL output file");
    auto* c_n4 = construct->add_subcommand("p26-n4", "(x0, -9^e1, 25^e2, 1) with e1 odd");
    c_n4->add_option("--epsilon", eps_text, "num/den in (0, 1]")->required();
    c_n4->add_option("--count", count, "Number of points")->capture_default_str();
    c_n4->add_option("--digit-budget", digit_budget, "Largest integer size in digits")->capture_default_str();
    c_n4->add_option("--out", out_path, "JSONL output file");
    auto* c_gen = construct->add_subcommand("p26-general", "(x0, -q1^e1, q2^e2, ..., q_{n-1}^e_{n-1}), n >= 5");
    c_gen->add_option("--n", n_general, "Number of coordinates")->capture_default_str();
    c_gen->add_option("--primes", primes_text, "n - 1 distinct primes > n, comma separated");
    c_gen->add_option("--epsilon", eps_text, "num/den in (0, 1]")->required();
    c_gen->add_option("--count", count, "Number of points")->capture_default_str();
    c_gen->add_option("--seed", seed, "Seed for the free exponents")->capture_default_str();
    c_gen->add_option("--digit-budget", digit_budget, "Largest integer size in digits")->capture_default_str();
    c_gen->add_option("--out", out_path, "JSONL output file");

    auto* chk = app.add_subcommand("check", "Evaluate the abc inequality on stored records");
    std::string form = "masser";
    double c_log = 0.0;
    chk->add_option("--in", in_path, "JSONL records")->required();
    chk->add_option("--epsilon", eps_text, "num/den >= 0 (default 0)");
    chk->add_option("--form", form, "masser | vojta")->check(CLI::IsMember({"masser", "vojta"}))->capture_default_str();
    chk->add_option("--c-log", c_log, "log C; excess above it counts as a violation")->capture_default_str();
    chk->add_option("--threads", threads, "Worker threads");
    chk->add_option("--out", out_path, "JSON report file");

    auto* deg = app.add_subcommand("degeneracy", "Exact kernel of low-degree forms through the points");
    unsigned degree = 2;
    deg->add_option("--in", in_path, "JSONL records (same n)")->required();
    deg->add_option("--degree", degree, "Form degree (>= 1)")->capture_default_str();
    deg->add_option("--out", out_path, "JSON report file");

    auto* poly = app.add_subcommand("polyfield", "Function-field checks over Q(t)");
    poly->require_subcommand(1);
    auto* p_verify = poly->add_subcommand("verify", "Mason-Stothers on random coprime triples");
    std::size_t trials = 1000;
    int max_deg = 30;
    p_verify->add_option("--trials", trials, "Number of triples")->capture_default_str();
    p_verify->add_option("--max-deg", max_deg, "Degree bound for a and b")->capture_default_str();
    p_verify->add_option("--seed", seed, "Random seed")->capture_default_str();

    auto* stats = app.add_subcommand("stats", "Summary of a record file");
    stats->add_option("--in", in_path, "JSONL records")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitValidation;
    }

    try {
        const SearchOptions sopts{threads, kDefaultMemoryBudget};
        const ConstructionOptions copts{digit_budget};
        if (*s_tri) {
            auto hits = search_triples(max_c, min_quality, sopts);
            if (top && hits.size() > top) hits.erase(hits.begin() + static_cast<long>(top), hits.end());
            std::vector<TupleRecord> recs;
            for (const auto& h : hits) recs.push_back(record_from_hit(h));
            emit_records(out, out_path, recs);
        } else if (*s_quad) {
            const auto mode = coprimality == "pairwise" ? Coprimality::pairwise : Coprimality::overall;
            auto hits = search_quadruples(max_abs, min_quality, mode, sopts);
            if (top && hits.size() > top) hits.erase(hits.begin() + static_cast<long>(top), hits.end());
            std::vector<TupleRecord> recs;
            for (const auto& h : hits) recs.push_back(record_from_hit(h));
            emit_records(out, out_path, recs);
        } else if (*c_double) {
            std::vector<TuplePoint> parents;
            if (!point_text.empty()) parents.push_back(TuplePoint::make(parse_int_list(point_text)));
            if (!in_path.empty()) {
                for (const auto& r : load_records(in_path)) parents.push_back(r.point);
            }
            if (parents.empty()) throw ValidationError("construct double needs --in or --point");
            std::vector<TupleRecord> recs;
            for (const auto& p : parents) {
                if (p.n() != 3) throw ValidationError("construct double: " + to_string(p) + " is not a triple");
                recs.push_back(record_from_doubling(p, double_triple(p)));
            }
            emit_records(out, out_path, recs);
        } else if (*c_family) {
            if (k_to == 0) k_to = k_from;
            if (k_from < 1 || k_to < k_from) throw ValidationError("need 1 <= --k <= --k-to");
            std::vector<TupleRecord> recs;
            for (unsigned long k = k_from; k <= k_to; ++k) recs.push_back(record_from_family(k, family_2k(k, copts)));
            emit_records(out, out_path, recs);
        } else if (*c_n4) {
            std::vector<TupleRecord> recs;
            for (const auto& c : construct_n4(parse_rational(eps_text), count, copts)) {
                recs.push_back(record_from_construction(c));
            }
            emit_records(out, out_path, recs);
        } else if (*c_gen) {
            std::optional<std::vector<BigInt>> primes;
            if (!primes_text.empty()) primes = parse_int_list(primes_text);
            std::vector<TupleRecord> recs;
            for (const auto& c : construct_general(n_general, parse_rational(eps_text), primes, count, seed, copts)) {
                recs.push_back(record_from_construction(c));
            }
            emit_records(out, out_path, recs);
        } else if (*chk) {
            CheckConfig cfg;
            cfg.eps = eps_text.empty() ? Rational(0) : parse_rational(eps_text);
            cfg.form = form == "vojta" ? ExcessForm::vojta : ExcessForm::masser;
            cfg.c_log = c_log;
            std::ifstream is(in_path, std::ios::binary);
            if (!is) throw ValidationError("cannot open " + in_path);
            const auto report = check(read_records_lenient(is), cfg, threads);
            Output o(out, out_path);
            o.stream() << report.to_json().dump(2) << "\n";
            if (o.to_file()) {
                out << report.summary.evaluated << " evaluated, " << report.summary.violations << " violations, "
                    << report.summary.errors << " errors\n";
            }
        } else if (*deg) {
            const auto recs = load_input(in_path);
            if (recs.empty()) throw ValidationError("degeneracy: no records in " + in_path);
            for (const auto& r : recs) {
                if (r.n() != recs.front().n()) throw ValidationError("degeneracy: records differ in n");
            }
            const auto report = find_degeneracy(recs, degree);
            Output o(out, out_path);
            o.stream() << report.to_json().dump(2) << "\n";
            if (o.to_file()) {
                out << "degree " << report.degree << ": rank " << report.rank << ", kernel dimension "
                    << report.kernel_basis.size() << (report.underdetermined ? " (underdetermined)" : "") << "\n";
            }
        } else if (*p_verify) {
            const auto s = polyfield_verify(trials, max_deg, seed);
            out << s.passed << "/" << s.trials << " pass (" << s.sharp << " sharp)\n";
            for (const auto& f : s.failures) err << "FAIL " << f << "\n";
            return s.failures.empty() ? kExitOk : kExitValidation;
        } else if (*stats) {
            const auto recs = load_input(in_path);
            std::map<std::size_t, std::size_t> by_n;
            std::map<std::string, std::size_t> by_source;
            std::optional<double> best;
            std::string best_point;
            std::size_t unfactored = 0;
            for (const auto& r : recs) {
                ++by_n[r.n()];
                ++by_source[to_string(r.source)];
                try {
                    const double q = quality(r.point);
                    if (!best || q > *best) {
                        best = q;
                        best_point = to_string(r.point);
                    }
                } catch (const ResourceError&) {
                    ++unfactored;
                }
            }
            nlohmann::ordered_json j;
            j["records"] = recs.size();
            nlohmann::ordered_json jn = nlohmann::ordered_json::object();
            for (const auto& [n, c] : by_n) jn[std::to_string(n)] = c;
            j["by_n"] = std::move(jn);
            j["by_source"] = by_source;
            j["max_quality"] = best ? nlohmann::ordered_json(*best) : nlohmann::ordered_json(nullptr);
            j["max_quality_point"] = best_point;
            j["unfactored"] = unfactored;
            out << j.dump(2) << "\n";
        }
    } catch (const DigitBudgetExceeded& e) {
        err << "resource error: " << e.what() << "\n";
        out << plan_json(e.plan()).dump() << "\n";
        return kExitResource;
    } catch (const ResourceError& e) {
        err << "resource error: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}

}  // namespace abcq
