#ifndef TILEGUARD_THRESHOLD_HPP
#define TILEGUARD_THRESHOLD_HPP

#include "tileguard/image.hpp"

#include <optional>

namespace tileguard {

struct Threshold {
    enum class Mode { Otsu, Fixed };

    Mode mode = Mode::Otsu;
    float value = 0.5f; // only read when mode == Fixed

    static Threshold otsu() { return {}; }
    static Threshold fixed(float value);

    friend bool operator==(const Threshold&, const Threshold&) = default;
};

/// 8-bit histogram bin of an intensity: round(v * 255).
int intensity_bin(float value) noexcept;

/**
 * Otsu level over the 256-bin histogram. Pixels whose bin is >= the
 * returned level form the foreground class. Returns nullopt when no split
 * has positive between-class variance (constant images). Ties resolve to
 * the smallest level.
 */
std::optional<int> otsu_level(const Image& img);

/**
 * Binary image: 1 where the intensity reaches the threshold.
 *
 * Fixed mode compares v >= value. Otsu mode compares intensity bins
 * against otsu_level(); a constant image yields all background.
 */
Image binarize(const Image& img, const Threshold& threshold);

} // namespace tileguard

#endif
