#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "abcq/counting.hpp"
#include "abcq/records.hpp"

namespace abcq {

// The constant C only enters as a report threshold: a record "violates" when
// its excess exceeds c_log = log C.
struct CheckConfig {
    Rational eps = 0;
    ExcessForm form = ExcessForm::masser;
    double c_log = 0.0;
};

struct RecordCheck {
    std::size_t index = 0;
    std::size_t line = 0;
    std::optional<std::string> error;
    std::string point;
    double height = 0.0;
    double trunc = 0.0;
    double quality = 0.0;
    double excess = 0.0;
    bool violation = false;
    bool infinite_quality = false;
};

struct HistogramBin {
    double lo = 0.0;
    double hi = 0.0;
    std::size_t count = 0;
};

struct CheckSummary {
    std::size_t records = 0;
    std::size_t evaluated = 0;
    std::size_t errors = 0;
    std::size_t violations = 0;
    std::size_t infinite_quality = 0;
    std::optional<double> max_excess;
    std::vector<HistogramBin> histogram;
};

struct CheckReport {
    CheckConfig config;
    std::vector<RecordCheck> rows;
    CheckSummary summary;

    nlohmann::ordered_json to_json() const;
};

inline constexpr double kHistogramBinWidth = 0.25;

// Rows keep input order; the summary depends only on the multiset of
// records.  Factoring failures become per-record errors.
CheckReport check(const std::vector<LoadedRecord>& records, const CheckConfig& cfg, int threads = 1);
CheckReport check(const std::vector<TupleRecord>& records, const CheckConfig& cfg, int threads = 1);

}  // namespace abcq
