#include "tileguard/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace tileguard::metrics {

std::string_view verdict_name(Verdict verdict) noexcept
{
    return verdict == Verdict::Defective ? "defective" : "defect-free";
}

std::optional<Verdict> parse_verdict(std::string_view name) noexcept
{
    if (name == "defective") {
        return Verdict::Defective;
    }
    if (name == "defect-free") {
        return Verdict::DefectFree;
    }
    return std::nullopt;
}

Classification classify(std::size_t reference_count, std::size_t test_count,
                        std::size_t tolerance) noexcept
{
    const auto delta = static_cast<std::int64_t>(reference_count) -
                       static_cast<std::int64_t>(test_count);
    const auto allowed = static_cast<std::int64_t>(tolerance);
    return {delta, delta < -allowed ? Verdict::Defective : Verdict::DefectFree};
}

double mse(const Image& a, const Image& b)
{
    require_same_shape(a, b, "mse");
    const auto pa = a.pixels();
    const auto pb = b.pixels();
    double sum = 0.0;
    for (std::size_t i = 0; i < pa.size(); ++i) {
        const double d = static_cast<double>(pa[i]) - static_cast<double>(pb[i]);
        sum += d * d;
    }
    return sum / static_cast<double>(pa.size());
}

double psnr(double mse_value, double max_intensity)
{
    if (!(mse_value >= 0.0)) {
        throw std::invalid_argument("mse must be non-negative");
    }
    if (!(max_intensity > 0.0)) {
        throw std::invalid_argument("max intensity must be positive");
    }
    if (mse_value == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return 10.0 * std::log10(max_intensity * max_intensity / mse_value);
}

InspectionRecord build_record(detect::Method method, const detect::ResidualResult& reference,
                              const detect::ResidualResult& test, const Image& metric_a,
                              const Image& metric_b, const RecordOptions& options)
{
    const auto cls = classify(reference.count, test.count, options.count_tolerance);
    const double err = mse(metric_a, metric_b);
    return {method,
            reference.count,
            test.count,
            cls.delta_d,
            cls.verdict,
            err,
            psnr(err, options.max_intensity),
            test.elapsed_seconds,
            test.elementary_ops};
}

} // namespace tileguard::metrics
