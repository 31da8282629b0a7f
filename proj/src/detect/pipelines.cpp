#include "tileguard/pipelines.hpp"

#include "tileguard/morphology.hpp"

#include <chrono>
#include <stdexcept>

namespace tileguard::detect {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Wraps the two kernels so each pipeline reports the passes it actually ran.
class Kernels {
public:
    explicit Kernels(const StructuringElement& se) : se_(se) {}

    Image dilate(const Image& img)
    {
        ++passes_;
        return tileguard::dilate(img, se_);
    }
    Image erode(const Image& img)
    {
        ++passes_;
        return tileguard::erode(img, se_);
    }
    Image opening(const Image& img) { return dilate(erode(img)); }
    Image closing(const Image& img) { return erode(dilate(img)); }
    Image smooth(const Image& img) { return closing(opening(closing(img))); }

    int passes() const noexcept { return passes_; }

private:
    const StructuringElement& se_;
    int passes_ = 0;
};

void require_origin(const StructuringElement& se)
{
    if (!se.contains_origin()) {
        throw std::invalid_argument(
            "smoothing pipelines need a structuring element whose origin cell is set");
    }
}

ResidualResult finish(Method method, Image residual, Clock::time_point start, int passes)
{
    const auto count = pixel_count(residual);
    return {method, std::move(residual), count, seconds_since(start), passes};
}

} // namespace

std::string_view method_name(Method method) noexcept
{
    switch (method) {
    case Method::DilationPipeline: return "dilation";
    case Method::ErosionPipeline: return "erosion";
    case Method::Smee: return "smee";
    case Method::BoundaryExtraction: return "boundary";
    }
    return "unknown";
}

std::optional<Method> parse_method(std::string_view name) noexcept
{
    for (Method m : kAllMethods) {
        if (method_name(m) == name) {
            return m;
        }
    }
    return std::nullopt;
}

std::string_view erosion_variant_name(ErosionVariant variant) noexcept
{
    return variant == ErosionVariant::Literal ? "literal" : "difference";
}

std::optional<ErosionVariant> parse_erosion_variant(std::string_view name) noexcept
{
    if (name == "literal") {
        return ErosionVariant::Literal;
    }
    if (name == "difference") {
        return ErosionVariant::Difference;
    }
    return std::nullopt;
}

Image smooth(const Image& binary, const StructuringElement& se)
{
    require_origin(se);
    if (!binary.is_binary()) {
        throw std::invalid_argument("smooth expects a binary image");
    }
    Kernels k(se);
    return k.smooth(binary);
}

ResidualResult dilation_pipeline(const Image& img, const StructuringElement& se,
                                 const Threshold& threshold)
{
    require_origin(se);
    const auto start = Clock::now();
    Kernels k(se);
    const Image smoothed = k.smooth(binarize(img, threshold));
    Image residual = subtract(k.dilate(smoothed), smoothed);
    return finish(Method::DilationPipeline, std::move(residual), start, k.passes());
}

ResidualResult erosion_pipeline(const Image& img, const StructuringElement& se,
                                const Threshold& threshold, ErosionVariant variant)
{
    require_origin(se);
    const auto start = Clock::now();
    Kernels k(se);
    const Image smoothed = k.smooth(binarize(img, threshold));
    const Image eroded = k.erode(smoothed);
    Image residual = variant == ErosionVariant::Literal ? add(eroded, smoothed)
                                                        : subtract(smoothed, eroded);
    return finish(Method::ErosionPipeline, std::move(residual), start, k.passes());
}

ResidualResult smee(const Image& img, const StructuringElement& se)
{
    const auto start = Clock::now();
    Kernels k(se);
    Image residual = subtract(k.dilate(img), img);
    return finish(Method::Smee, std::move(residual), start, k.passes());
}

ResidualResult boundary_extraction(const Image& img, const StructuringElement& se)
{
    const auto start = Clock::now();
    Kernels k(se);
    Image residual = subtract(img, k.erode(img));
    return finish(Method::BoundaryExtraction, std::move(residual), start, k.passes());
}

ResidualResult run_method(Method method, const Image& img, const StructuringElement& se,
                          const PipelineOptions& options)
{
    const auto start = Clock::now();
    auto result = [&] {
        switch (method) {
        case Method::DilationPipeline:
            return dilation_pipeline(img, se, options.threshold);
        case Method::ErosionPipeline:
            return erosion_pipeline(img, se, options.threshold, options.erosion_variant);
        case Method::Smee:
            return options.binarize_all ? smee(binarize(img, options.threshold), se)
                                        : smee(img, se);
        case Method::BoundaryExtraction:
            return options.binarize_all
                       ? boundary_extraction(binarize(img, options.threshold), se)
                       : boundary_extraction(img, se);
        }
        throw std::invalid_argument("unknown detection method");
    }();
    result.elapsed_seconds = seconds_since(start);
    return result;
}

int elementary_op_cost(Method method) noexcept
{
    switch (method) {
    case Method::DilationPipeline:
    case Method::ErosionPipeline:
        return 7;
    case Method::Smee:
    case Method::BoundaryExtraction:
        return 1;
    }
    return 0;
}

} // namespace tileguard::detect
