#ifndef TILEGUARD_REPORT_HPP
#define TILEGUARD_REPORT_HPP

#include "tileguard/metrics.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tileguard::cli {

struct ReportRow {
    std::string tile;
    metrics::InspectionRecord record;
};

/// Settings echoed into the report header, then one row per (tile, method).
struct Report {
    std::string reference;
    std::string structuring_element;
    std::string threshold;
    std::string erosion_variant;
    std::string metric_pair;
    std::size_t count_tolerance = 0;
    bool binarize_all = false;
    double psnr_max = 1.0;
    std::vector<ReportRow> rows;
};

/// Orders rows by (tile, method name).
void sort_rows(std::vector<ReportRow>& rows);

/*
 * JSON layout (keys in this order):
 *   {"reference", "structuring_element", "threshold", "erosion_variant",
 *    "metric_pair", "count_tolerance", "binarize_all", "psnr_max",
 *    "records": [{"tile", "method", "reference_count", "test_count",
 *                 "delta_d", "verdict", "mse", "psnr_db",
 *                 "elapsed_seconds", "elementary_ops"}, ...]}
 * An infinite psnr_db is written as the string "inf".
 */
nlohmann::ordered_json to_json(const Report& report);
Report report_from_json(const nlohmann::json& doc);

/// CSV with the same columns as a JSON record, RFC 4180 quoting.
std::string to_csv(const Report& report);

/// Zeroes every "elapsed_seconds" field, the only run-to-run varying data.
void mask_timing(nlohmann::ordered_json& doc);

/// Quotes a CSV field when it contains a comma, quote, CR or LF.
std::string csv_field(std::string_view text);

/// Shortest round-trip decimal text; "inf" for +infinity.
std::string format_number(double value);

/// Writes psnr.csv, mse.csv and time.csv into `dir`: one row per tile,
/// one column per method. Throws std::invalid_argument on an empty set.
std::vector<std::filesystem::path> write_plot_data(std::span<const ReportRow> rows,
                                                   const std::filesystem::path& dir);

} // namespace tileguard::cli

#endif
