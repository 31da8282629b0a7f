#include "tileguard/descriptors.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

namespace tileguard::cli {

namespace {

template <typename T>
T parse_number(std::string_view text, std::string_view descriptor)
{
    T value{};
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end || text.empty()) {
        throw std::invalid_argument("bad number in descriptor '" + std::string(descriptor) + "'");
    }
    return value;
}

} // namespace

StructuringElement parse_structuring_element(std::string_view descriptor)
{
    const auto colon = descriptor.find(':');
    if (colon == std::string_view::npos) {
        throw std::invalid_argument("structuring element descriptor '" + std::string(descriptor) +
                                    "' must look like square:3, cross:3 or disk:1");
    }
    const auto shape = descriptor.substr(0, colon);
    const int size = parse_number<int>(descriptor.substr(colon + 1), descriptor);
    if (shape == "square" && size > 0) {
        return StructuringElement::square(size);
    }
    if (shape == "cross" && size > 0) {
        return StructuringElement::cross(size);
    }
    if (shape == "disk" && size >= 0) {
        return StructuringElement::disk(size);
    }
    throw std::invalid_argument("unknown or invalid structuring element '" +
                                std::string(descriptor) + "'");
}

Threshold parse_threshold(std::string_view descriptor)
{
    if (descriptor == "otsu") {
        return Threshold::otsu();
    }
    if (descriptor.starts_with("fixed:")) {
        return Threshold::fixed(parse_number<float>(descriptor.substr(6), descriptor));
    }
    throw std::invalid_argument("threshold descriptor '" + std::string(descriptor) +
                                "' must be otsu or fixed:<value>");
}

std::string describe(const Threshold& threshold)
{
    if (threshold.mode == Threshold::Mode::Otsu) {
        return "otsu";
    }
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, threshold.value);
    return "fixed:" + std::string(buf, ptr);
}

} // namespace tileguard::cli
