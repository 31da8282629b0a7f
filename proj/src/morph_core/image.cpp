#include "tileguard/image.hpp"

#include <algorithm>
#include <cmath>

namespace tileguard {

namespace {

void check_dimensions(int width, int height)
{
    if (width <= 0 || height <= 0) {
        throw std::invalid_argument("image dimensions must be positive, got " +
                                    std::to_string(width) + "x" + std::to_string(height));
    }
}

bool in_unit_range(float v) noexcept { return v >= 0.0f && v <= 1.0f; }

} // namespace

Image::Image(int width, int height, float fill) : width_(width), height_(height)
{
    check_dimensions(width, height);
    if (!in_unit_range(fill)) {
        throw std::invalid_argument("fill intensity outside [0, 1]");
    }
    pixels_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill);
}

Image::Image(int width, int height, std::vector<float> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels))
{
    check_dimensions(width, height);
    const auto expected = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    if (pixels_.size() != expected) {
        throw std::invalid_argument("pixel buffer holds " + std::to_string(pixels_.size()) +
                                    " values, expected " + std::to_string(expected));
    }
    // NaN fails in_unit_range as well.
    if (!std::all_of(pixels_.begin(), pixels_.end(), in_unit_range)) {
        throw std::invalid_argument("pixel intensity outside [0, 1]");
    }
}

void Image::set(int row, int col, float value)
{
    if (!contains(row, col)) {
        throw std::out_of_range("pixel (" + std::to_string(row) + ", " + std::to_string(col) +
                                ") outside " + std::to_string(width_) + "x" +
                                std::to_string(height_) + " image");
    }
    if (!in_unit_range(value)) {
        throw std::invalid_argument("pixel intensity outside [0, 1]");
    }
    pixels_[index(row, col)] = value;
}

bool Image::is_binary() const noexcept
{
    return std::all_of(pixels_.begin(), pixels_.end(),
                       [](float v) { return v == 0.0f || v == 1.0f; });
}

void require_same_shape(const Image& a, const Image& b, const std::string& what)
{
    if (!a.same_shape(b)) {
        throw DimensionMismatch(what + ": " + std::to_string(a.width()) + "x" +
                                std::to_string(a.height()) + " vs " + std::to_string(b.width()) +
                                "x" + std::to_string(b.height()));
    }
}

} // namespace tileguard
