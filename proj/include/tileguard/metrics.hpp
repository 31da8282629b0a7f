#ifndef TILEGUARD_METRICS_HPP
#define TILEGUARD_METRICS_HPP

#include "tileguard/image.hpp"
#include "tileguard/pipelines.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace tileguard::metrics {

enum class Verdict { DefectFree, Defective };

std::string_view verdict_name(Verdict verdict) noexcept; // "defect-free" | "defective"
std::optional<Verdict> parse_verdict(std::string_view name) noexcept;

struct Classification {
    std::int64_t delta_d; ///< reference count minus test count
    Verdict verdict;

    friend bool operator==(const Classification&, const Classification&) = default;
};

/**
 * Pixel-count rule: delta_d = reference - test, and the tile is defective
 * when delta_d < 0. With a tolerance k, deficits of at most k pixels are
 * still accepted (|delta_d| <= k counts as defect-free).
 */
Classification classify(std::size_t reference_count, std::size_t test_count,
                        std::size_t tolerance = 0) noexcept;

/// Mean of squared per-pixel differences on the [0, 1] scale.
double mse(const Image& a, const Image& b);

/// 10 log10(max^2 / mse) in dB; +infinity when mse is zero.
double psnr(double mse_value, double max_intensity = 1.0);

struct InspectionRecord {
    detect::Method method;
    std::size_t reference_count;
    std::size_t test_count;
    std::int64_t delta_d;
    Verdict verdict;
    double mse;
    double psnr_db; ///< +infinity iff mse == 0
    double elapsed_seconds;
    int elementary_ops;
};

struct RecordOptions {
    std::size_t count_tolerance = 0;
    double max_intensity = 1.0;
};

/// Combines reference and test results of one method with the quality
/// metrics of (metric_a, metric_b).
InspectionRecord build_record(detect::Method method, const detect::ResidualResult& reference,
                              const detect::ResidualResult& test, const Image& metric_a,
                              const Image& metric_b, const RecordOptions& options = {});

} // namespace tileguard::metrics

#endif
