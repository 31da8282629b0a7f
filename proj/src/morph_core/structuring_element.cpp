#include "tileguard/structuring_element.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tileguard {

StructuringElement::StructuringElement(int width, int height, std::vector<bool> mask,
                                       int origin_row, int origin_col)
    : width_(width), height_(height), mask_(std::move(mask)), origin_row_(origin_row),
      origin_col_(origin_col)
{
    if (width <= 0 || height <= 0) {
        throw std::invalid_argument("structuring element dimensions must be positive");
    }
    if (mask_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
        throw std::invalid_argument("structuring element mask size does not match " +
                                    std::to_string(width) + "x" + std::to_string(height));
    }
    if (origin_row < 0 || origin_row >= height || origin_col < 0 || origin_col >= width) {
        throw std::invalid_argument("structuring element origin outside mask");
    }
    for (int r = 0; r < height; ++r) {
        for (int c = 0; c < width; ++c) {
            if (mask_[static_cast<std::size_t>(r * width + c)]) {
                offsets_.push_back({r - origin_row, c - origin_col});
            }
        }
    }
    if (offsets_.empty()) {
        throw std::invalid_argument("structuring element mask has no true cell");
    }
}

StructuringElement StructuringElement::square(int size)
{
    if (size <= 0) {
        throw std::invalid_argument("square size must be positive");
    }
    return {size, size, std::vector<bool>(static_cast<std::size_t>(size * size), true), size / 2,
            size / 2};
}

StructuringElement StructuringElement::cross(int size)
{
    if (size <= 0) {
        throw std::invalid_argument("cross size must be positive");
    }
    const int mid = size / 2;
    std::vector<bool> mask(static_cast<std::size_t>(size * size), false);
    for (int i = 0; i < size; ++i) {
        mask[static_cast<std::size_t>(mid * size + i)] = true;
        mask[static_cast<std::size_t>(i * size + mid)] = true;
    }
    return {size, size, std::move(mask), mid, mid};
}

StructuringElement StructuringElement::disk(int radius)
{
    if (radius < 0) {
        throw std::invalid_argument("disk radius must be non-negative");
    }
    const int size = 2 * radius + 1;
    std::vector<bool> mask(static_cast<std::size_t>(size * size), false);
    for (int r = 0; r < size; ++r) {
        for (int c = 0; c < size; ++c) {
            const int dy = r - radius;
            const int dx = c - radius;
            mask[static_cast<std::size_t>(r * size + c)] = dx * dx + dy * dy <= radius * radius;
        }
    }
    return {size, size, std::move(mask), radius, radius};
}

StructuringElement StructuringElement::reflected() const
{
    std::vector<bool> flipped(mask_.size());
    for (int r = 0; r < height_; ++r) {
        for (int c = 0; c < width_; ++c) {
            flipped[static_cast<std::size_t>((height_ - 1 - r) * width_ + (width_ - 1 - c))] =
                mask_[static_cast<std::size_t>(r * width_ + c)];
        }
    }
    return {width_, height_, std::move(flipped), height_ - 1 - origin_row_,
            width_ - 1 - origin_col_};
}

} // namespace tileguard
