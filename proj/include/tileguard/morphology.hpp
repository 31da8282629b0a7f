#ifndef TILEGUARD_MORPHOLOGY_HPP
#define TILEGUARD_MORPHOLOGY_HPP

#include "tileguard/image.hpp"
#include "tileguard/structuring_element.hpp"

#include <cstddef>

namespace tileguard {

// Flat-SE grayscale morphology. On binary images these reduce to the set
// operators. Reads outside the image see 0 for dilation and 1 for erosion,
// the neutral elements of max and min.

/// out(p) = max over offsets d of in(p - d).
Image dilate(const Image& img, const StructuringElement& se);
/// out(p) = min over offsets d of in(p + d).
Image erode(const Image& img, const StructuringElement& se);
/// dilate(erode(img))
Image opening(const Image& img, const StructuringElement& se);
/// erode(dilate(img))
Image closing(const Image& img, const StructuringElement& se);

/// max(a - b, 0) per pixel; set difference on binary inputs.
Image subtract(const Image& a, const Image& b);
/// min(a + b, 1) per pixel; set union on binary inputs.
Image add(const Image& a, const Image& b);
Image complement(const Image& img);

/// Number of pixels with value > 0.
std::size_t pixel_count(const Image& img) noexcept;

} // namespace tileguard

#endif
