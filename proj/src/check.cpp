#include "abcq/check.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace abcq {

namespace {

RecordCheck evaluate(const TupleRecord& r, const CheckConfig& cfg) {
    RecordCheck row;
    row.point = to_string(r.point);
    row.height = height(r.point);
    const BigInt rad = conductor(r.point);
    row.trunc = log_abs(rad);
    row.quality = certified_quality(r.point.max_abs(), rad);
    row.infinite_quality = std::isinf(row.quality);
    row.excess = excess_from_logs(row.height, row.trunc, cfg.eps, cfg.form);
    row.violation = row.excess > cfg.c_log;
    return row;
}

}  // namespace

CheckReport check(const std::vector<LoadedRecord>& records, const CheckConfig& cfg, int threads) {
    if (cfg.eps < 0) throw DomainError("check: epsilon must be nonnegative");
    CheckReport report;
    report.config = cfg;
    report.rows.resize(records.size());
    const long count = static_cast<long>(records.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, threads))
    for (long i = 0; i < count; ++i) {
        const auto& in = records[static_cast<std::size_t>(i)];
        RecordCheck row;
        if (in.record) {
            try {
                row = evaluate(*in.record, cfg);
            } catch (const std::exception& e) {
                row = RecordCheck{};
                row.point = to_string(in.record->point);
                row.error = e.what();
            }
        } else {
            row.error = in.error;
        }
        row.index = static_cast<std::size_t>(i);
        row.line = in.line;
        report.rows[static_cast<std::size_t>(i)] = std::move(row);
    }

    auto& s = report.summary;
    s.records = records.size();
    std::map<long long, std::size_t> bins;
    for (const auto& row : report.rows) {
        if (row.error) {
            ++s.errors;
            continue;
        }
        ++s.evaluated;
        if (row.infinite_quality) ++s.infinite_quality;
        if (row.violation) ++s.violations;
        if (!s.max_excess || row.excess > *s.max_excess) s.max_excess = row.excess;
        ++bins[static_cast<long long>(std::floor(row.excess / kHistogramBinWidth))];
    }
    for (const auto& [k, n] : bins) {
        s.histogram.push_back({static_cast<double>(k) * kHistogramBinWidth, static_cast<double>(k + 1) * kHistogramBinWidth, n});
    }
    return report;
}

CheckReport check(const std::vector<TupleRecord>& records, const CheckConfig& cfg, int threads) {
    std::vector<LoadedRecord> wrapped;
    wrapped.reserve(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) wrapped.push_back({i + 1, records[i], {}});
    return check(wrapped, cfg, threads);
}

nlohmann::ordered_json CheckReport::to_json() const {
    using nlohmann::ordered_json;
    ordered_json j;
    j["config"]["eps"] = config.eps.get_str();
    j["config"]["form"] = config.form == ExcessForm::masser ? "masser" : "vojta";
    j["config"]["C_log"] = config.c_log;
    ordered_json rows_j = ordered_json::array();
    for (const auto& r : rows) {
        ordered_json row;
        row["index"] = r.index;
        row["line"] = r.line;
        if (r.error) {
            if (!r.point.empty()) row["point"] = r.point;
            row["error"] = *r.error;
        } else {
            row["point"] = r.point;
            row["height"] = r.height;
            row["trunc"] = r.trunc;
            row["quality"] = r.infinite_quality ? ordered_json("inf") : ordered_json(r.quality);
            row["excess"] = r.excess;
            row["violation"] = r.violation;
        }
        rows_j.push_back(std::move(row));
    }
    j["records"] = std::move(rows_j);
    ordered_json sum;
    sum["records"] = summary.records;
    sum["evaluated"] = summary.evaluated;
    sum["errors"] = summary.errors;
    sum["violations"] = summary.violations;
    sum["infinite_quality"] = summary.infinite_quality;
    sum["max_excess"] = summary.max_excess ? ordered_json(*summary.max_excess) : ordered_json(nullptr);
    ordered_json hist = ordered_json::array();
    for (const auto& b : summary.histogram) hist.push_back({{"lo", b.lo}, {"hi", b.hi}, {"count", b.count}});
    sum["histogram"] = std::move(hist);
    j["summary"] = std::move(sum);
    return j;
}

}  // namespace abcq
