#ifndef TILEGUARD_STRUCTURING_ELEMENT_HPP
#define TILEGUARD_STRUCTURING_ELEMENT_HPP

#include <span>
#include <vector>

namespace tileguard {

/// Displacement of a true mask cell relative to the origin.
struct Offset {
    int drow;
    int dcol;

    friend bool operator==(const Offset&, const Offset&) = default;
};

/**
 * @brief Flat boolean probe with a designated origin.
 *
 * The mask is stored row-major. At least one cell is true and the origin
 * lies inside the mask; whether the origin cell itself is set is queried
 * with contains_origin() since only some callers require it.
 */
class StructuringElement {
public:
    StructuringElement(int width, int height, std::vector<bool> mask, int origin_row,
                       int origin_col);

    /// size x size block, origin at (size/2, size/2).
    static StructuringElement square(int size);
    /// size x size plus sign: the middle row and middle column.
    static StructuringElement cross(int size);
    /// (2r+1) x (2r+1) cells with dx^2 + dy^2 <= r^2.
    static StructuringElement disk(int radius);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    int origin_row() const noexcept { return origin_row_; }
    int origin_col() const noexcept { return origin_col_; }
    bool at(int row, int col) const { return mask_.at(static_cast<std::size_t>(row * width_ + col)); }
    bool contains_origin() const { return at(origin_row_, origin_col_); }

    std::span<const Offset> offsets() const noexcept { return offsets_; }

    /// Point reflection through the origin: every offset is negated.
    StructuringElement reflected() const;

    friend bool operator==(const StructuringElement& a, const StructuringElement& b)
    {
        return a.width_ == b.width_ && a.height_ == b.height_ && a.mask_ == b.mask_ &&
               a.origin_row_ == b.origin_row_ && a.origin_col_ == b.origin_col_;
    }

private:
    int width_;
    int height_;
    std::vector<bool> mask_;
    int origin_row_;
    int origin_col_;
    std::vector<Offset> offsets_;
};

} // namespace tileguard

#endif
