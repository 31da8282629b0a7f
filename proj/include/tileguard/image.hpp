#ifndef TILEGUARD_IMAGE_HPP
#define TILEGUARD_IMAGE_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tileguard {

/// Raised when two images that must share a shape do not.
class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/**
 * @brief Row-major grid of normalized intensities in [0, 1].
 *
 * A binary image is the special case where every pixel is 0 (background)
 * or 1 (foreground). Constructors reject out-of-range values, so every
 * Image that exists satisfies the invariants.
 */
class Image {
public:
    Image(int width, int height, float fill = 0.0f);
    Image(int width, int height, std::vector<float> pixels);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    std::size_t size() const noexcept { return pixels_.size(); }

    float operator()(int row, int col) const { return pixels_[index(row, col)]; }
    void set(int row, int col, float value);
    bool contains(int row, int col) const noexcept
    {
        return row >= 0 && row < height_ && col >= 0 && col < width_;
    }

    std::span<const float> pixels() const noexcept { return pixels_; }

    bool is_binary() const noexcept;
    bool same_shape(const Image& other) const noexcept
    {
        return width_ == other.width_ && height_ == other.height_;
    }

    friend bool operator==(const Image&, const Image&) = default;

private:
    std::size_t index(int row, int col) const noexcept
    {
        return static_cast<std::size_t>(row) * static_cast<std::size_t>(width_) +
               static_cast<std::size_t>(col);
    }

    int width_;
    int height_;
    std::vector<float> pixels_;
};

/// Throws DimensionMismatch naming `what` unless a and b share a shape.
void require_same_shape(const Image& a, const Image& b, const std::string& what);

} // namespace tileguard

#endif
