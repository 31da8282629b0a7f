#ifndef TILEGUARD_GENERATE_HPP
#define TILEGUARD_GENERATE_HPP

#include "tileguard/synth.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace tileguard::cli {

struct NamedDefect {
    std::string name;
    synth::DefectSpec defect;
};

/// A reference tile plus defective variants, each carrying one defect.
struct GenerationPlan {
    synth::TileSpec tile;
    std::string reference_name = "reference";
    std::string extension = ".pgm";
    std::vector<NamedDefect> defects;
};

/**
 * Parses a generation spec:
 *
 *   {
 *     "tile": {"width": 128, "height": 128, "base_intensity": 1.0,
 *              "pattern": "plain" | {"grid": {"spacing": 8, "intensity": 0.5}},
 *              "noise_amplitude": 0.0, "seed": 1},
 *     "format": "pgm" | "png",
 *     "reference": "reference",
 *     "defects": [
 *       {"name": "crack", "kind": "crack", "intensity": 0.0, "seed": 7},
 *       {"name": "hole", "kind": "pinhole", "intensity": 0.0, "at": [10, 12]},
 *       {"name": "drop", "kind": "blob", "intensity": 0.0, "center": [40, 40], "radius": 5},
 *       {"name": "line", "kind": "crack", "intensity": 0.0,
 *        "vertices": [[5, 5], [60, 30]], "thickness": 2}
 *     ]
 *   }
 *
 * Defects without explicit geometry are drawn from their seed. Coordinates
 * are [x, y]. Throws std::invalid_argument or nlohmann::json exceptions.
 */
GenerationPlan parse_generation_plan(const nlohmann::json& doc);

/// Writes the reference and one file per defect; returns the paths written.
std::vector<std::filesystem::path> write_generation(const GenerationPlan& plan,
                                                    const std::filesystem::path& out_dir);

} // namespace tileguard::cli

#endif
