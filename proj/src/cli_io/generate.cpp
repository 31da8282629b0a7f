#include "tileguard/generate.hpp"

#include "tileguard/image_io.hpp"

#include <set>
#include <stdexcept>

namespace tileguard::cli {

namespace {

synth::Point point_from(const nlohmann::json& v)
{
    if (!v.is_array() || v.size() != 2) {
        throw std::invalid_argument("points must be [x, y] pairs");
    }
    return {v[0].get<int>(), v[1].get<int>()};
}

synth::TileSpec tile_from(const nlohmann::json& t)
{
    synth::TileSpec spec;
    spec.width = t.value("width", spec.width);
    spec.height = t.value("height", spec.height);
    spec.base_intensity = t.value("base_intensity", spec.base_intensity);
    spec.noise_amplitude = t.value("noise_amplitude", spec.noise_amplitude);
    spec.seed = t.value("seed", spec.seed);
    if (t.contains("pattern")) {
        const auto& p = t.at("pattern");
        if (p.is_string() && p.get<std::string>() == "plain") {
            spec.pattern = synth::PlainPattern{};
        } else if (p.is_object() && p.contains("grid")) {
            const auto& g = p.at("grid");
            spec.pattern = synth::GridPattern{g.at("spacing").get<int>(),
                                              g.at("intensity").get<float>()};
        } else {
            throw std::invalid_argument("pattern must be \"plain\" or {\"grid\": {...}}");
        }
    }
    return spec;
}

synth::DefectSpec defect_from(const nlohmann::json& d, const synth::TileSpec& tile)
{
    const auto kind_name = d.at("kind").get<std::string>();
    const auto kind = synth::parse_defect_kind(kind_name);
    if (!kind) {
        throw std::invalid_argument("unknown defect kind '" + kind_name +
                                    "' (crack, pinhole, blob, spot)");
    }
    const float intensity = d.value("intensity", 0.0f);
    const std::uint64_t seed = d.value("seed", std::uint64_t{0});

    if (d.contains("vertices")) {
        synth::CrackGeometry crack;
        for (const auto& v : d.at("vertices")) {
            crack.vertices.push_back(point_from(v));
        }
        crack.thickness = d.value("thickness", 1.0);
        return {*kind, std::move(crack), intensity, seed};
    }
    if (d.contains("at")) {
        return {*kind, synth::PinholeGeometry{point_from(d.at("at"))}, intensity, seed};
    }
    if (d.contains("center")) {
        return {*kind, synth::DiskGeometry{point_from(d.at("center")), d.at("radius").get<double>()},
                intensity, seed};
    }
    return synth::random_defect(*kind, tile.width, tile.height, intensity, seed);
}

} // namespace

GenerationPlan parse_generation_plan(const nlohmann::json& doc)
{
    GenerationPlan plan;
    if (doc.contains("tile")) {
        plan.tile = tile_from(doc.at("tile"));
    }
    plan.reference_name = doc.value("reference", plan.reference_name);
    const auto format = doc.value("format", std::string("pgm"));
    if (format != "pgm" && format != "png") {
        throw std::invalid_argument("format must be pgm or png");
    }
    plan.extension = "." + format;

    std::set<std::string> names{plan.reference_name};
    if (doc.contains("defects")) {
        for (const auto& d : doc.at("defects")) {
            NamedDefect nd{d.value("name", d.at("kind").get<std::string>()), defect_from(d, plan.tile)};
            if (!names.insert(nd.name).second) {
                throw std::invalid_argument("duplicate output name '" + nd.name + "'");
            }
            plan.defects.push_back(std::move(nd));
        }
    }
    return plan;
}

std::vector<std::filesystem::path> write_generation(const GenerationPlan& plan,
                                                    const std::filesystem::path& out_dir)
{
    std::filesystem::create_directories(out_dir);
    const Image reference = synth::generate_reference(plan.tile);
    std::vector<std::filesystem::path> written;

    const auto ref_path = out_dir / (plan.reference_name + plan.extension);
    io::save_image(reference, ref_path);
    written.push_back(ref_path);
    for (const auto& nd : plan.defects) {
        const auto path = out_dir / (nd.name + plan.extension);
        io::save_image(synth::inject_defect(reference, nd.defect), path);
        written.push_back(path);
    }
    return written;
}

} // namespace tileguard::cli
