#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "abcq/constructions.hpp"
#include "abcq/counting.hpp"
#include "abcq/errors.hpp"
#include "abcq/search.hpp"

namespace abcq {

inline constexpr int kRecordVersion = 1;

enum class RecordSource { search, doubling, family2k, p26_n4, p26_general, manual };

std::string to_string(RecordSource s);
std::optional<RecordSource> parse_source(const std::string& s);

// One persisted point.  Derived statistics are never stored.
struct TupleRecord {
    int version = kRecordVersion;
    TuplePoint point;
    RecordSource source = RecordSource::manual;
    nlohmann::json meta = nlohmann::json::object();

    std::size_t n() const { return point.n(); }
    friend bool operator==(const TupleRecord&, const TupleRecord&) = default;
};

class RecordParseError : public ValidationError {
public:
    RecordParseError(std::size_t line, std::string field, const std::string& what)
        : ValidationError("line " + std::to_string(line) + ", field '" + field + "': " + what),
          line_(line),
          field_(std::move(field)) {}
    std::size_t line() const { return line_; }
    const std::string& field() const { return field_; }

private:
    std::size_t line_;
    std::string field_;
};

// One JSON object, keys in the order version, n, x, source, meta.
std::string serialize_record(const TupleRecord& r);
// `line` is only used in error messages.
TupleRecord parse_record(const std::string& text, std::size_t line = 1);

void write_records(std::ostream& os, const std::vector<TupleRecord>& records);
std::vector<TupleRecord> read_records(std::istream& is);
void save_records(const std::filesystem::path& path, const std::vector<TupleRecord>& records);
std::vector<TupleRecord> load_records(const std::filesystem::path& path);

// Lenient reader: every nonblank line yields either a record or its error.
struct LoadedRecord {
    std::size_t line = 0;
    std::optional<TupleRecord> record;
    std::string error;
};
std::vector<LoadedRecord> read_records_lenient(std::istream& is);

// 16 hex digits of FNV-1a over the decimal coordinates; used as the
// parent reference in derived records.
std::string point_hash(const TuplePoint& p);

TupleRecord record_from_hit(const SearchHit& hit);
TupleRecord record_from_construction(const Constructed& c);
TupleRecord record_from_doubling(const TuplePoint& parent, const TuplePoint& doubled);
TupleRecord record_from_family(unsigned long k, const TuplePoint& t);

}  // namespace abcq
