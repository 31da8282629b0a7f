#ifndef TILEGUARD_IMAGE_IO_HPP
#define TILEGUARD_IMAGE_IO_HPP

#include "tileguard/image.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>

namespace tileguard::io {

class ImageIoError : public std::runtime_error {
public:
    enum class Kind { NotFound, UnsupportedFormat, Malformed, UnsupportedDepth, Truncated, WriteFailed };

    ImageIoError(Kind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

/**
 * Reads a PGM (P2 or P5, maxval up to 65535) or PNG (8 bits per channel)
 * image. Intensities are divided by the format maximum; colour PNGs are
 * reduced with luma weights 0.299 / 0.587 / 0.114.
 */
Image load_image(const std::filesystem::path& path);

/// Writes P5 PGM or 8-bit grayscale PNG, chosen by extension. Each pixel is
/// stored as round(v * 255).
void save_image(const Image& img, const std::filesystem::path& path);

/// True for extensions load_image/save_image understand (.pgm, .png).
bool is_image_path(const std::filesystem::path& path);

} // namespace tileguard::io

#endif
