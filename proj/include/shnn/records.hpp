#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace shnn {

inline constexpr int kRecordsSchemaVersion = 1;

/// One training run; the unit of CSV reporting.
struct ExperimentRecord {
    std::string system;
    std::string sampler;
    std::string width;  ///< "1000" or "N1xN2" for deeper nets
    std::uint64_t seed = 0;
    double rel_l2 = 0.0;
    double train_time_s = 0.0;
    double residual = 0.0;
    std::string timestamp;  ///< ISO 8601 UTC
    std::string note;       ///< free text, e.g. "fd h=0.1 corrected"

    bool operator==(const ExperimentRecord&) const = default;
};

/// Aggregate row emitted by sweeps and the stats command.
struct SweepRow {
    std::string system;
    std::string sampler;
    std::string sweep_param;  ///< "width" or "freq"
    double sweep_value = 0.0;
    std::size_t n_seeds = 0;
    double mean_rel_l2 = 0.0;
    double min_rel_l2 = 0.0;
    double max_rel_l2 = 0.0;
    double mean_train_time_s = 0.0;
};

/// Doubles are printed with 17 significant digits so values round-trip exactly.
std::string format_full(double v);

std::string records_header();
std::string record_to_csv(const ExperimentRecord& r);
ExperimentRecord record_from_csv(const std::string& line);

std::string sweep_header();
std::string sweep_row_to_csv(const SweepRow& row);

/// Appends rows to path, writing the header when the file is created.
void append_records(const std::string& path, const std::vector<ExperimentRecord>& rows);
void append_sweep_rows(const std::string& path, const std::vector<SweepRow>& rows);

/// Reads every record row (skips the header).
std::vector<ExperimentRecord> read_records(const std::string& path);

std::string now_utc_iso8601();

}  // namespace shnn
