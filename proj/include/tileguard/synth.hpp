#ifndef TILEGUARD_SYNTH_HPP
#define TILEGUARD_SYNTH_HPP

#include "tileguard/image.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

namespace tileguard::synth {

struct PlainPattern {
    friend bool operator==(const PlainPattern&, const PlainPattern&) = default;
};

/// Grout lines on every row and column index divisible by `spacing`.
struct GridPattern {
    int spacing = 8;
    float intensity = 0.5f;

    friend bool operator==(const GridPattern&, const GridPattern&) = default;
};

struct TileSpec {
    int width = 128;
    int height = 128;
    float base_intensity = 0.8f;
    std::variant<PlainPattern, GridPattern> pattern = PlainPattern{};
    /// Uniform noise in [-a, a] added after the pattern, then clamped.
    float noise_amplitude = 0.0f;
    std::uint64_t seed = 0;
};

enum class DefectKind { Crack, Pinhole, Blob, Spot };

std::string_view defect_kind_name(DefectKind kind) noexcept;
std::optional<DefectKind> parse_defect_kind(std::string_view name) noexcept;

/// Pixel position; x is the column, y the row.
struct Point {
    int x;
    int y;

    friend bool operator==(const Point&, const Point&) = default;
};

struct CrackGeometry {
    std::vector<Point> vertices; ///< polyline, at least one vertex
    double thickness = 1.0;
};

struct PinholeGeometry {
    Point at;
};

struct DiskGeometry {
    Point center;
    double radius = 1.0;
};

using DefectGeometry = std::variant<CrackGeometry, PinholeGeometry, DiskGeometry>;

struct DefectSpec {
    DefectKind kind;
    DefectGeometry geometry;
    float intensity = 0.0f;
    std::uint64_t seed = 0;
};

/// Deterministic in the spec: equal specs give bit-identical images.
Image generate_reference(const TileSpec& spec);

/**
 * Copy of `base` with the defect's pixels set to its intensity.
 *
 * Cracks cover pixels whose center is within thickness/2 of a polyline
 * segment; blobs and spots cover pixels whose center is within the radius.
 * Throws std::invalid_argument when the geometry leaves the tile or does
 * not match the kind.
 */
Image inject_defect(const Image& base, const DefectSpec& defect);

/// Pixels that inject_defect would write, in row-major order.
std::vector<Point> defect_footprint(const DefectSpec& defect, int width, int height);

/// Defect of the given kind with geometry drawn from `seed`, sized to fit a
/// width x height tile.
DefectSpec random_defect(DefectKind kind, int width, int height, float intensity,
                         std::uint64_t seed);

/// Closed-form number of grid-line pixels in a width x height tile.
std::size_t grid_line_pixel_count(int width, int height, int spacing);

} // namespace tileguard::synth

#endif
