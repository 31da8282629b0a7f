#ifndef TILEGUARD_INSPECT_HPP
#define TILEGUARD_INSPECT_HPP

#include "tileguard/pipelines.hpp"
#include "tileguard/report.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tileguard::cli {

/// Which image pair PSNR/MSE compare.
enum class MetricPair {
    Residual, ///< reference residual vs test residual of the same method
    Input,    ///< reference tile vs test tile
};

std::string_view metric_pair_name(MetricPair pair) noexcept;
std::optional<MetricPair> parse_metric_pair(std::string_view name) noexcept;

enum class OutputFormat { Json, Csv };

struct RunConfig {
    std::filesystem::path reference;
    /// Files or directories; directories contribute their .pgm/.png files.
    std::vector<std::filesystem::path> tests;
    std::vector<detect::Method> methods{detect::kAllMethods.begin(), detect::kAllMethods.end()};
    std::string structuring_element = "square:3";
    std::string threshold = "otsu";
    detect::ErosionVariant erosion_variant = detect::ErosionVariant::Literal;
    MetricPair metric_pair = MetricPair::Residual;
    std::size_t count_tolerance = 0;
    bool binarize_all = false;
    double psnr_max = 1.0;
    OutputFormat format = OutputFormat::Json;
    std::optional<std::filesystem::path> out;
    std::optional<std::filesystem::path> dump_residuals;
    unsigned jobs = 1;
    bool mask_timing = false;
};

inline constexpr int kExitAllDefectFree = 0;
inline constexpr int kExitDefective = 1;
inline constexpr int kExitError = 2;

struct InspectionOutcome {
    Report report;
    int exit_code; ///< kExitAllDefectFree or kExitDefective
};

/// Directories expand to their image files in lexicographic order.
std::vector<std::filesystem::path> expand_test_paths(
    const std::vector<std::filesystem::path>& inputs);

/// Runs every selected method on the reference and each test tile.
/// Throws on I/O errors, invalid settings and dimension mismatches.
InspectionOutcome inspect(const RunConfig& config);

std::string render_report(const Report& report, OutputFormat format, bool mask_timing);

/// inspect() plus report output; maps any exception to kExitError with a
/// message on `err`.
int run_inspect_command(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace tileguard::cli

#endif
