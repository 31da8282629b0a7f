#ifndef TILEGUARD_PIPELINES_HPP
#define TILEGUARD_PIPELINES_HPP

#include "tileguard/image.hpp"
#include "tileguard/structuring_element.hpp"
#include "tileguard/threshold.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace tileguard::detect {

enum class Method { DilationPipeline, ErosionPipeline, Smee, BoundaryExtraction };

inline constexpr std::array<Method, 4> kAllMethods{
    Method::DilationPipeline, Method::ErosionPipeline, Method::Smee, Method::BoundaryExtraction};

/// Short names used on the command line and in reports:
/// dilation, erosion, smee, boundary.
std::string_view method_name(Method method) noexcept;
std::optional<Method> parse_method(std::string_view name) noexcept;

/// How the erosion pipeline combines the smoothed image with its erosion.
enum class ErosionVariant {
    Literal,    ///< P + erode(P), which equals P when the origin is in the SE
    Difference, ///< P - erode(P), the inner boundary of P
};

std::string_view erosion_variant_name(ErosionVariant variant) noexcept;
std::optional<ErosionVariant> parse_erosion_variant(std::string_view name) noexcept;

struct PipelineOptions {
    Threshold threshold = Threshold::otsu();
    ErosionVariant erosion_variant = ErosionVariant::Literal;
    /// Binarize before SMEE and boundary extraction too.
    bool binarize_all = false;
};

struct ResidualResult {
    Method method;
    Image residual;
    std::size_t count;      ///< pixel_count(residual)
    double elapsed_seconds; ///< steady-clock wall time of the pipeline
    int elementary_ops;     ///< erode/dilate passes executed
};

/// close(open(close(binary))) with one SE; the common prefix of the
/// dilation and erosion pipelines.
Image smooth(const Image& binary, const StructuringElement& se);

/// dilate(P) - P, with P = smooth(binarize(img)). The residual is the
/// outer ring of the smoothed foreground.
ResidualResult dilation_pipeline(const Image& img, const StructuringElement& se,
                                 const Threshold& threshold);

/// P + erode(P) (or P - erode(P) for the Difference variant).
ResidualResult erosion_pipeline(const Image& img, const StructuringElement& se,
                                const Threshold& threshold,
                                ErosionVariant variant = ErosionVariant::Literal);

/// dilate(img) - img on the input as given (grayscale allowed).
ResidualResult smee(const Image& img, const StructuringElement& se);

/// img - erode(img) on the input as given (grayscale allowed).
ResidualResult boundary_extraction(const Image& img, const StructuringElement& se);

ResidualResult run_method(Method method, const Image& img, const StructuringElement& se,
                          const PipelineOptions& options = {});

/// Fixed erode/dilate pass count of each method.
int elementary_op_cost(Method method) noexcept;

} // namespace tileguard::detect

#endif
