#ifndef TILEGUARD_DESCRIPTORS_HPP
#define TILEGUARD_DESCRIPTORS_HPP

#include "tileguard/structuring_element.hpp"
#include "tileguard/threshold.hpp"

#include <string>
#include <string_view>

namespace tileguard::cli {

/// "square:k", "cross:k" or "disk:r". Throws std::invalid_argument.
StructuringElement parse_structuring_element(std::string_view descriptor);

/// "otsu" or "fixed:v" with v in [0, 1]. Throws std::invalid_argument.
Threshold parse_threshold(std::string_view descriptor);

std::string describe(const Threshold& threshold);

} // namespace tileguard::cli

#endif
