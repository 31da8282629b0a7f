#include "tileguard/morphology.hpp"

#include <algorithm>

namespace tileguard {

namespace {

// Offset-major sweep: for each SE offset, fold the shifted image into the
// accumulator over the rows/cols where the shifted read stays in bounds.
// Out-of-bounds reads contribute `pad`, which is the fold's neutral element
// for in-range intensities, so initializing with it is exact.
template <typename Fold>
Image sweep(const Image& img, const StructuringElement& se, int sign, float pad, Fold fold)
{
    const int width = img.width();
    const int height = img.height();
    const auto in = img.pixels();
    std::vector<float> acc(in.size(), pad);

    for (const Offset& off : se.offsets()) {
        const int dr = sign * off.drow;
        const int dc = sign * off.dcol;
        const int row_begin = std::max(0, -dr);
        const int row_end = std::min(height, height - dr);
        const int col_begin = std::max(0, -dc);
        const int col_end = std::min(width, width - dc);
        for (int r = row_begin; r < row_end; ++r) {
            float* out_row = acc.data() + static_cast<std::ptrdiff_t>(r) * width;
            const float* in_row = in.data() + static_cast<std::ptrdiff_t>(r + dr) * width + dc;
            for (int c = col_begin; c < col_end; ++c) {
                out_row[c] = fold(out_row[c], in_row[c]);
            }
        }
    }
    return {width, height, std::move(acc)};
}

template <typename Op>
Image combine(const Image& a, const Image& b, const char* what, Op op)
{
    require_same_shape(a, b, what);
    const auto pa = a.pixels();
    const auto pb = b.pixels();
    std::vector<float> out(pa.size());
    for (std::size_t i = 0; i < pa.size(); ++i) {
        out[i] = op(pa[i], pb[i]);
    }
    return {a.width(), a.height(), std::move(out)};
}

} // namespace

Image dilate(const Image& img, const StructuringElement& se)
{
    return sweep(img, se, -1, 0.0f, [](float a, float b) { return std::max(a, b); });
}

Image erode(const Image& img, const StructuringElement& se)
{
    return sweep(img, se, +1, 1.0f, [](float a, float b) { return std::min(a, b); });
}

Image opening(const Image& img, const StructuringElement& se) { return dilate(erode(img, se), se); }

Image closing(const Image& img, const StructuringElement& se) { return erode(dilate(img, se), se); }

Image subtract(const Image& a, const Image& b)
{
    return combine(a, b, "subtract", [](float x, float y) { return std::max(x - y, 0.0f); });
}

Image add(const Image& a, const Image& b)
{
    return combine(a, b, "add", [](float x, float y) { return std::min(x + y, 1.0f); });
}

Image complement(const Image& img)
{
    std::vector<float> out(img.size());
    std::transform(img.pixels().begin(), img.pixels().end(), out.begin(),
                   [](float v) { return 1.0f - v; });
    return {img.width(), img.height(), std::move(out)};
}

std::size_t pixel_count(const Image& img) noexcept
{
    const auto px = img.pixels();
    return static_cast<std::size_t>(
        std::count_if(px.begin(), px.end(), [](float v) { return v > 0.0f; }));
}

} // namespace tileguard
