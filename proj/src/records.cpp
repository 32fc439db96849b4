#include "abcq/records.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace abcq {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr const char* kSourceNames[] = {"search", "double", "family2k", "p26-n4", "p26-general", "manual"};

bool is_decimal_integer(const std::string& s) {
    std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    if (s[i] == '0' && s.size() > i + 1) return false;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
}

json big_list(const std::vector<BigInt>& xs) {
    json out = json::array();
    for (const auto& x : xs) out.push_back(x.get_str());
    return out;
}

}  // namespace

std::string to_string(RecordSource s) { return kSourceNames[static_cast<int>(s)]; }

std::optional<RecordSource> parse_source(const std::string& s) {
    for (int i = 0; i < 6; ++i) {
        if (s == kSourceNames[i]) return static_cast<RecordSource>(i);
    }
    return std::nullopt;
}

std::string serialize_record(const TupleRecord& r) {
    ordered_json j;
    j["version"] = r.version;
    j["n"] = r.n();
    ordered_json xs = ordered_json::array();
    for (const auto& x : r.point.coords()) xs.push_back(x.get_str());
    j["x"] = std::move(xs);
    j["source"] = to_string(r.source);
    j["meta"] = ordered_json(r.meta);
    return j.dump();
}

TupleRecord parse_record(const std::string& text, std::size_t line) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw RecordParseError(line, "<json>", e.what());
    }
    if (!j.is_object()) throw RecordParseError(line, "<json>", "record is not an object");

    TupleRecord r{kRecordVersion, make_point({1, 1, -2}), RecordSource::manual, json::object()};
    if (!j.contains("version") || !j["version"].is_number_integer()) {
        throw RecordParseError(line, "version", "missing or not an integer");
    }
    r.version = j["version"].get<int>();
    if (r.version != kRecordVersion) {
        throw RecordParseError(line, "version", "unsupported version " + std::to_string(r.version));
    }
    if (!j.contains("x") || !j["x"].is_array()) throw RecordParseError(line, "x", "missing or not an array");
    std::vector<BigInt> coords;
    for (const auto& e : j["x"]) {
        if (!e.is_string() || !is_decimal_integer(e.get<std::string>())) {
            throw RecordParseError(line, "x", "entries must be decimal integer strings");
        }
        coords.emplace_back(e.get<std::string>(), 10);
    }
    if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<long long>() != static_cast<long long>(coords.size())) {
        throw RecordParseError(line, "n", "missing or does not match the length of x");
    }
    const std::vector<BigInt> given = coords;
    try {
        r.point = TuplePoint::make(std::move(coords));
    } catch (const ValidationError& e) {
        throw RecordParseError(line, "x", e.what());
    }
    if (r.point.coords() != given) throw RecordParseError(line, "x", "point is not in canonical form");
    if (!j.contains("source") || !j["source"].is_string()) throw RecordParseError(line, "source", "missing");
    const auto src = parse_source(j["source"].get<std::string>());
    if (!src) throw RecordParseError(line, "source", "unknown source '" + j["source"].get<std::string>() + "'");
    r.source = *src;
    if (j.contains("meta")) {
        if (!j["meta"].is_object()) throw RecordParseError(line, "meta", "not an object");
        r.meta = j["meta"];
    }
    return r;
}

void write_records(std::ostream& os, const std::vector<TupleRecord>& records) {
    for (const auto& r : records) os << serialize_record(r) << '\n';
}

std::vector<LoadedRecord> read_records_lenient(std::istream& is) {
    std::vector<LoadedRecord> out;
    std::string text;
    std::size_t line = 0;
    while (std::getline(is, text)) {
        ++line;
        if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
        LoadedRecord lr;
        lr.line = line;
        try {
            lr.record = parse_record(text, line);
        } catch (const ValidationError& e) {
            lr.error = e.what();
        }
        out.push_back(std::move(lr));
    }
    return out;
}

std::vector<TupleRecord> read_records(std::istream& is) {
    std::vector<TupleRecord> out;
    std::string text;
    std::size_t line = 0;
    while (std::getline(is, text)) {
        ++line;
        if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
        out.push_back(parse_record(text, line));
    }
    return out;
}

void save_records(const std::filesystem::path& path, const std::vector<TupleRecord>& records) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw ValidationError("cannot open " + path.string() + " for writing");
    write_records(os, records);
    if (!os) throw ValidationError("write to " + path.string() + " failed");
}

std::vector<TupleRecord> load_records(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw ValidationError("cannot open " + path.string());
    return read_records(is);
}

std::string point_hash(const TuplePoint& p) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&](char ch) {
        h ^= static_cast<unsigned char>(ch);
        h *= 0x100000001b3ULL;
    };
    for (std::size_t i = 0; i < p.n(); ++i) {
        if (i) mix(',');
        for (char ch : p[i].get_str()) mix(ch);
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

TupleRecord record_from_hit(const SearchHit& hit) {
    return TupleRecord{kRecordVersion, hit.point, RecordSource::search, json::object()};
}

TupleRecord record_from_construction(const Constructed& c) {
    const auto& p = c.plan;
    json meta = json::object();
    meta["eps"] = p.eps.get_str();
    meta["e1"] = p.e1;
    meta["e2"] = p.e2;
    RecordSource src = RecordSource::p26_n4;
    if (p.kind == ConstructionKind::p26_general) {
        src = RecordSource::p26_general;
        meta["primes"] = big_list(p.primes);
        meta["orders"] = p.orders;
        meta["extra_exponents"] = p.extra_exponents;
        meta["seed"] = std::to_string(p.seed);
    }
    return TupleRecord{kRecordVersion, c.point, src, std::move(meta)};
}

TupleRecord record_from_doubling(const TuplePoint& parent, const TuplePoint& doubled) {
    json meta = json::object();
    meta["parent"] = point_hash(parent);
    return TupleRecord{kRecordVersion, doubled, RecordSource::doubling, std::move(meta)};
}

TupleRecord record_from_family(unsigned long k, const TuplePoint& t) {
    json meta = json::object();
    meta["k"] = k;
    return TupleRecord{kRecordVersion, t, RecordSource::family2k, std::move(meta)};
}

}  // namespace abcq
