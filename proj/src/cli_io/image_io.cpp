#include "tileguard/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>
#include <vector>

namespace tileguard::io {

namespace {

using Kind = ImageIoError::Kind;

std::string lower_extension(const std::filesystem::path& path)
{
    auto ext = path.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return ext;
}

std::vector<unsigned char> read_bytes(const std::filesystem::path& path)
{
    std::error_code ec;
    if (!std::filesystem::is_regular_file(path, ec)) {
        throw ImageIoError(Kind::NotFound, "no such image file: " + path.string());
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ImageIoError(Kind::NotFound, "cannot open image file: " + path.string());
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

float to_unit(std::uint32_t value, std::uint32_t maxval)
{
    return static_cast<float>(static_cast<double>(value) / static_cast<double>(maxval));
}

std::uint8_t to_byte(float v)
{
    return static_cast<std::uint8_t>(std::lround(static_cast<double>(v) * 255.0));
}

class PgmReader {
public:
    PgmReader(const std::vector<unsigned char>& bytes, const std::string& name)
        : bytes_(bytes), name_(name)
    {
    }

    Image read()
    {
        const bool ascii = bytes_[1] == '2';
        pos_ = 2;
        const auto width = header_field("width");
        const auto height = header_field("height");
        const auto maxval = header_field("maxval");
        if (width == 0 || height == 0) {
            malformed("zero image dimension");
        }
        if (maxval == 0 || maxval > 65535) {
            throw ImageIoError(Kind::UnsupportedDepth,
                               name_ + ": unsupported PGM maxval " + std::to_string(maxval));
        }
        if (width > 1u << 16 || height > 1u << 16) {
            malformed("dimensions too large");
        }
        const std::size_t count = static_cast<std::size_t>(width) * height;
        std::vector<float> pixels(count);
        if (ascii) {
            for (std::size_t i = 0; i < count; ++i) {
                skip_space();
                if (pos_ >= bytes_.size()) {
                    truncated(i, count);
                }
                pixels[i] = to_unit(sample(maxval), maxval);
            }
        } else {
            // Exactly one whitespace byte separates the header from the raster.
            if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) {
                malformed("missing whitespace before raster");
            }
            ++pos_;
            const std::size_t sample_bytes = maxval < 256 ? 1 : 2;
            const std::size_t needed = count * sample_bytes;
            if (bytes_.size() - pos_ < needed) {
                throw ImageIoError(Kind::Truncated,
                                   name_ + ": truncated PGM payload at byte offset " +
                                       std::to_string(bytes_.size()) + " (raster starts at " +
                                       std::to_string(pos_) + ", needs " + std::to_string(needed) +
                                       " bytes)");
            }
            for (std::size_t i = 0; i < count; ++i) {
                std::uint32_t v = bytes_[pos_];
                if (sample_bytes == 2) {
                    v = (v << 8) | bytes_[pos_ + 1];
                }
                if (v > maxval) {
                    malformed("sample exceeds maxval at byte offset " + std::to_string(pos_));
                }
                pos_ += sample_bytes;
                pixels[i] = to_unit(v, maxval);
            }
        }
        return {static_cast<int>(width), static_cast<int>(height), std::move(pixels)};
    }

private:
    [[noreturn]] void malformed(const std::string& why) const
    {
        throw ImageIoError(Kind::Malformed, name_ + ": malformed PGM header: " + why);
    }

    [[noreturn]] void truncated(std::size_t got, std::size_t want) const
    {
        throw ImageIoError(Kind::Truncated, name_ + ": truncated PGM payload at byte offset " +
                                                std::to_string(pos_) + " (read " +
                                                std::to_string(got) + " of " +
                                                std::to_string(want) + " samples)");
    }

    void skip_space()
    {
        while (pos_ < bytes_.size()) {
            if (bytes_[pos_] == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n') {
                    ++pos_;
                }
            } else if (std::isspace(bytes_[pos_])) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    std::uint32_t parse_uint(const char* what)
    {
        const std::size_t start = pos_;
        std::uint64_t v = 0;
        while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
            v = v * 10 + static_cast<std::uint64_t>(bytes_[pos_] - '0');
            if (v > 0xFFFFFFFFu) {
                malformed(std::string(what) + " out of range");
            }
            ++pos_;
        }
        if (pos_ == start) {
            malformed(std::string("expected ") + what + " at byte offset " + std::to_string(start));
        }
        return static_cast<std::uint32_t>(v);
    }

    std::uint32_t header_field(const char* what)
    {
        skip_space();
        if (pos_ >= bytes_.size()) {
            malformed(std::string("missing ") + what);
        }
        return parse_uint(what);
    }

    std::uint32_t sample(std::uint32_t maxval)
    {
        const std::size_t at = pos_;
        if (!std::isdigit(bytes_[pos_])) {
            malformed("non-numeric sample at byte offset " + std::to_string(at));
        }
        const auto v = parse_uint("sample");
        if (v > maxval) {
            malformed("sample exceeds maxval at byte offset " + std::to_string(at));
        }
        return v;
    }

    const std::vector<unsigned char>& bytes_;
    std::string name_;
    std::size_t pos_ = 0;
};

Image read_png(const std::vector<unsigned char>& bytes, const std::string& name)
{
    png_image png;
    std::memset(&png, 0, sizeof png);
    png.version = PNG_IMAGE_VERSION;
    if (!png_image_begin_read_from_memory(&png, bytes.data(), bytes.size())) {
        const std::string why = png.message;
        png_image_free(&png);
        throw ImageIoError(Kind::Malformed, name + ": malformed PNG: " + why);
    }
    if ((png.format & PNG_FORMAT_FLAG_LINEAR) != 0) {
        png_image_free(&png);
        throw ImageIoError(Kind::UnsupportedDepth,
                           name + ": unsupported PNG bit depth (16 bits per channel)");
    }
    const bool color = (png.format & PNG_FORMAT_FLAG_COLOR) != 0;
    png.format = color ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
    std::vector<png_byte> raster(PNG_IMAGE_SIZE(png));
    if (!png_image_finish_read(&png, nullptr, raster.data(), 0, nullptr)) {
        const std::string why = png.message;
        png_image_free(&png);
        throw ImageIoError(Kind::Truncated, name + ": cannot decode PNG: " + why);
    }

    const std::size_t count = static_cast<std::size_t>(png.width) * png.height;
    std::vector<float> pixels(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (color) {
            const double luma = 0.299 * raster[3 * i] + 0.587 * raster[3 * i + 1] +
                                0.114 * raster[3 * i + 2];
            pixels[i] = static_cast<float>(std::clamp(luma / 255.0, 0.0, 1.0));
        } else {
            pixels[i] = to_unit(raster[i], 255);
        }
    }
    return {static_cast<int>(png.width), static_cast<int>(png.height), std::move(pixels)};
}

void write_pgm(const Image& img, const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw ImageIoError(Kind::WriteFailed, "cannot write image file: " + path.string());
    }
    out << "P5\n" << img.width() << ' ' << img.height() << "\n255\n";
    std::vector<char> raster(img.size());
    std::transform(img.pixels().begin(), img.pixels().end(), raster.begin(),
                   [](float v) { return static_cast<char>(to_byte(v)); });
    out.write(raster.data(), static_cast<std::streamsize>(raster.size()));
    if (!out) {
        throw ImageIoError(Kind::WriteFailed, "failed writing image file: " + path.string());
    }
}

void write_png(const Image& img, const std::filesystem::path& path)
{
    std::vector<png_byte> raster(img.size());
    std::transform(img.pixels().begin(), img.pixels().end(), raster.begin(), to_byte);

    png_image png;
    std::memset(&png, 0, sizeof png);
    png.version = PNG_IMAGE_VERSION;
    png.width = static_cast<png_uint_32>(img.width());
    png.height = static_cast<png_uint_32>(img.height());
    png.format = PNG_FORMAT_GRAY;
    if (!png_image_write_to_file(&png, path.c_str(), 0, raster.data(), 0, nullptr)) {
        const std::string why = png.message;
        png_image_free(&png);
        throw ImageIoError(Kind::WriteFailed,
                           "cannot write image file: " + path.string() + ": " + why);
    }
}

} // namespace

bool is_image_path(const std::filesystem::path& path)
{
    const auto ext = lower_extension(path);
    return ext == ".pgm" || ext == ".png";
}

Image load_image(const std::filesystem::path& path)
{
    const auto bytes = read_bytes(path);
    const auto name = path.string();
    if (bytes.size() >= 2 && bytes[0] == 'P' && (bytes[1] == '2' || bytes[1] == '5')) {
        return PgmReader(bytes, name).read();
    }
    static constexpr unsigned char kPngSignature[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1A, '\n'};
    if (bytes.size() >= 8 && std::equal(std::begin(kPngSignature), std::end(kPngSignature), bytes.begin())) {
        return read_png(bytes, name);
    }
    throw ImageIoError(Kind::UnsupportedFormat, name + ": not a PGM (P2/P5) or PNG file");
}

void save_image(const Image& img, const std::filesystem::path& path)
{
    std::error_code ec;
    if (std::filesystem::is_directory(path, ec)) {
        throw ImageIoError(Kind::WriteFailed, "cannot write image over a directory: " + path.string());
    }
    const auto ext = lower_extension(path);
    if (ext == ".pgm") {
        write_pgm(img, path);
    } else if (ext == ".png") {
        write_png(img, path);
    } else {
        throw ImageIoError(Kind::UnsupportedFormat,
                           "unsupported output extension '" + ext + "' for " + path.string());
    }
}

} // namespace tileguard::io
