#include "tileguard/threshold.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace tileguard {

Threshold Threshold::fixed(float value)
{
    if (!(value >= 0.0f && value <= 1.0f)) {
        throw std::invalid_argument("fixed threshold outside [0, 1]");
    }
    return {Mode::Fixed, value};
}

int intensity_bin(float value) noexcept
{
    return static_cast<int>(std::lround(static_cast<double>(value) * 255.0));
}

std::optional<int> otsu_level(const Image& img)
{
    std::array<double, 256> histogram{};
    for (float v : img.pixels()) {
        histogram[static_cast<std::size_t>(intensity_bin(v))] += 1.0;
    }
    const double total = static_cast<double>(img.size());
    double total_moment = 0.0;
    for (std::size_t i = 0; i < histogram.size(); ++i) {
        total_moment += static_cast<double>(i) * histogram[i];
    }

    // Level k puts bins [0, k) in the background class.
    double background_weight = 0.0;
    double background_moment = 0.0;
    double best_variance = 0.0;
    std::optional<int> best;
    for (int k = 1; k < 256; ++k) {
        background_weight += histogram[static_cast<std::size_t>(k - 1)];
        background_moment += static_cast<double>(k - 1) * histogram[static_cast<std::size_t>(k - 1)];
        const double foreground_weight = total - background_weight;
        if (background_weight == 0.0 || foreground_weight == 0.0) {
            continue;
        }
        const double w0 = background_weight / total;
        const double w1 = foreground_weight / total;
        const double mu0 = background_moment / background_weight;
        const double mu1 = (total_moment - background_moment) / foreground_weight;
        const double variance = w0 * w1 * (mu0 - mu1) * (mu0 - mu1);
        if (variance > best_variance) {
            best_variance = variance;
            best = k;
        }
    }
    return best;
}

Image binarize(const Image& img, const Threshold& threshold)
{
    std::vector<float> out(img.size(), 0.0f);
    const auto in = img.pixels();
    if (threshold.mode == Threshold::Mode::Fixed) {
        for (std::size_t i = 0; i < in.size(); ++i) {
            out[i] = in[i] >= threshold.value ? 1.0f : 0.0f;
        }
    } else if (const auto level = otsu_level(img)) {
        for (std::size_t i = 0; i < in.size(); ++i) {
            out[i] = intensity_bin(in[i]) >= *level ? 1.0f : 0.0f;
        }
    }
    return {img.width(), img.height(), std::move(out)};
}

} // namespace tileguard
