#include "tileguard/synth.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace tileguard::synth {

namespace {

// std::mt19937_64's sequence is fixed by the standard; the distributions
// are not, so the conversion to [0, 1) is done here.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    int uniform_int(int lo, int hi) // inclusive
    {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(engine_() % span);
    }

private:
    std::mt19937_64 engine_;
};

bool inside(Point p, int width, int height)
{
    return p.x >= 0 && p.x < width && p.y >= 0 && p.y < height;
}

[[noreturn]] void out_of_bounds(std::string_view what)
{
    throw std::invalid_argument(std::string(what) + " geometry leaves the tile");
}

double segment_distance_sq(double px, double py, Point a, Point b)
{
    const double vx = b.x - a.x;
    const double vy = b.y - a.y;
    const double wx = px - a.x;
    const double wy = py - a.y;
    const double len_sq = vx * vx + vy * vy;
    double t = len_sq > 0.0 ? (wx * vx + wy * vy) / len_sq : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    const double dx = wx - t * vx;
    const double dy = wy - t * vy;
    return dx * dx + dy * dy;
}

std::vector<Point> crack_pixels(const CrackGeometry& crack, int width, int height)
{
    if (crack.vertices.empty()) {
        throw std::invalid_argument("crack needs at least one vertex");
    }
    if (!(crack.thickness > 0.0)) {
        throw std::invalid_argument("crack thickness must be positive");
    }
    for (Point v : crack.vertices) {
        if (!inside(v, width, height)) {
            out_of_bounds("crack");
        }
    }
    const double half = crack.thickness / 2.0;
    const double half_sq = half * half;
    std::vector<Point> pixels;
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            bool hit = false;
            if (crack.vertices.size() == 1) {
                hit = segment_distance_sq(x, y, crack.vertices[0], crack.vertices[0]) <= half_sq;
            }
            for (std::size_t i = 1; i < crack.vertices.size() && !hit; ++i) {
                hit = segment_distance_sq(x, y, crack.vertices[i - 1], crack.vertices[i]) <= half_sq;
            }
            if (hit) {
                pixels.push_back({x, y});
            }
        }
    }
    return pixels;
}

std::vector<Point> disk_pixels(const DiskGeometry& disk, int width, int height)
{
    if (!(disk.radius >= 0.0)) {
        throw std::invalid_argument("disk radius must be non-negative");
    }
    const int reach = static_cast<int>(std::floor(disk.radius));
    if (!inside({disk.center.x - reach, disk.center.y - reach}, width, height) ||
        !inside({disk.center.x + reach, disk.center.y + reach}, width, height)) {
        out_of_bounds("disk");
    }
    const double r_sq = disk.radius * disk.radius;
    std::vector<Point> pixels;
    for (int y = disk.center.y - reach; y <= disk.center.y + reach; ++y) {
        for (int x = disk.center.x - reach; x <= disk.center.x + reach; ++x) {
            const double dx = x - disk.center.x;
            const double dy = y - disk.center.y;
            if (dx * dx + dy * dy <= r_sq) {
                pixels.push_back({x, y});
            }
        }
    }
    return pixels;
}

} // namespace

std::string_view defect_kind_name(DefectKind kind) noexcept
{
    switch (kind) {
    case DefectKind::Crack: return "crack";
    case DefectKind::Pinhole: return "pinhole";
    case DefectKind::Blob: return "blob";
    case DefectKind::Spot: return "spot";
    }
    return "unknown";
}

std::optional<DefectKind> parse_defect_kind(std::string_view name) noexcept
{
    for (auto kind : {DefectKind::Crack, DefectKind::Pinhole, DefectKind::Blob, DefectKind::Spot}) {
        if (defect_kind_name(kind) == name) {
            return kind;
        }
    }
    return std::nullopt;
}

Image generate_reference(const TileSpec& spec)
{
    Image tile(spec.width, spec.height, spec.base_intensity);
    if (const auto* grid = std::get_if<GridPattern>(&spec.pattern)) {
        if (grid->spacing <= 0) {
            throw std::invalid_argument("grid spacing must be positive");
        }
        for (int y = 0; y < spec.height; ++y) {
            for (int x = 0; x < spec.width; ++x) {
                if (y % grid->spacing == 0 || x % grid->spacing == 0) {
                    tile.set(y, x, grid->intensity);
                }
            }
        }
    }
    if (!(spec.noise_amplitude >= 0.0f && spec.noise_amplitude <= 1.0f)) {
        throw std::invalid_argument("noise amplitude outside [0, 1]");
    }
    if (spec.noise_amplitude > 0.0f) {
        Rng rng(spec.seed);
        const double amp = spec.noise_amplitude;
        for (int y = 0; y < spec.height; ++y) {
            for (int x = 0; x < spec.width; ++x) {
                const double v = tile(y, x) + amp * (2.0 * rng.unit() - 1.0);
                tile.set(y, x, static_cast<float>(std::clamp(v, 0.0, 1.0)));
            }
        }
    }
    return tile;
}

std::vector<Point> defect_footprint(const DefectSpec& defect, int width, int height)
{
    const bool matches = std::visit(
        [&](const auto& g) {
            using G = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<G, CrackGeometry>) {
                return defect.kind == DefectKind::Crack;
            } else if constexpr (std::is_same_v<G, PinholeGeometry>) {
                return defect.kind == DefectKind::Pinhole;
            } else {
                return defect.kind == DefectKind::Blob || defect.kind == DefectKind::Spot;
            }
        },
        defect.geometry);
    if (!matches) {
        throw std::invalid_argument("geometry does not match defect kind " +
                                    std::string(defect_kind_name(defect.kind)));
    }

    if (const auto* crack = std::get_if<CrackGeometry>(&defect.geometry)) {
        return crack_pixels(*crack, width, height);
    }
    if (const auto* pin = std::get_if<PinholeGeometry>(&defect.geometry)) {
        if (!inside(pin->at, width, height)) {
            out_of_bounds("pinhole");
        }
        return {pin->at};
    }
    return disk_pixels(std::get<DiskGeometry>(defect.geometry), width, height);
}

Image inject_defect(const Image& base, const DefectSpec& defect)
{
    if (!(defect.intensity >= 0.0f && defect.intensity <= 1.0f)) {
        throw std::invalid_argument("defect intensity outside [0, 1]");
    }
    Image out = base;
    for (Point p : defect_footprint(defect, base.width(), base.height())) {
        out.set(p.y, p.x, defect.intensity);
    }
    return out;
}

DefectSpec random_defect(DefectKind kind, int width, int height, float intensity,
                         std::uint64_t seed)
{
    if (width <= 0 || height <= 0) {
        throw std::invalid_argument("tile dimensions must be positive");
    }
    Rng rng(seed);
    const int short_side = std::min(width, height);
    DefectSpec spec{kind, PinholeGeometry{}, intensity, seed};

    switch (kind) {
    case DefectKind::Pinhole:
        spec.geometry = PinholeGeometry{{rng.uniform_int(0, width - 1), rng.uniform_int(0, height - 1)}};
        break;
    case DefectKind::Crack: {
        // A jagged polyline across the middle half of the tile.
        CrackGeometry crack;
        crack.thickness = 1.0 + rng.uniform_int(0, 2);
        const int segments = 3 + rng.uniform_int(0, 3);
        const int x0 = width / 4;
        const int x1 = width - 1 - width / 4;
        for (int i = 0; i <= segments; ++i) {
            const int x = x0 + (x1 - x0) * i / segments;
            crack.vertices.push_back({x, rng.uniform_int(height / 4, height - 1 - height / 4)});
        }
        spec.geometry = std::move(crack);
        break;
    }
    case DefectKind::Blob:
    case DefectKind::Spot: {
        // Blobs (water drops) run larger than colour spots.
        const int max_radius = std::max(1, short_side / (kind == DefectKind::Blob ? 8 : 16));
        const int min_radius = std::max(1, max_radius / 2);
        const int r = rng.uniform_int(min_radius, max_radius);
        if (2 * r + 1 > short_side) {
            throw std::invalid_argument("tile too small for a disk defect");
        }
        spec.geometry = DiskGeometry{
            {rng.uniform_int(r, width - 1 - r), rng.uniform_int(r, height - 1 - r)},
            static_cast<double>(r)};
        break;
    }
    }
    return spec;
}

std::size_t grid_line_pixel_count(int width, int height, int spacing)
{
    if (width <= 0 || height <= 0 || spacing <= 0) {
        throw std::invalid_argument("grid dimensions and spacing must be positive");
    }
    const auto line_rows = static_cast<std::size_t>((height + spacing - 1) / spacing);
    const auto line_cols = static_cast<std::size_t>((width + spacing - 1) / spacing);
    const auto w = static_cast<std::size_t>(width);
    const auto h = static_cast<std::size_t>(height);
    return line_rows * w + line_cols * h - line_rows * line_cols;
}

} // namespace tileguard::synth
