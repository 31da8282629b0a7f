#include "tileguard/inspect.hpp"

#include "tileguard/descriptors.hpp"
#include "tileguard/image_io.hpp"
#include "tileguard/metrics.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace tileguard::cli {

namespace {

namespace fs = std::filesystem;
using detect::Method;
using detect::ResidualResult;

struct Settings {
    StructuringElement se;
    detect::PipelineOptions options;
    metrics::RecordOptions record;
};

void dump_residual(const fs::path& dir, const std::string& stem, Method method, const Image& img)
{
    io::save_image(img, dir / (stem + "." + std::string(detect::method_name(method)) + ".pgm"));
}

std::vector<ReportRow> inspect_tile(const RunConfig& config, const Settings& s,
                                    const Image& reference,
                                    const std::vector<ResidualResult>& reference_results,
                                    const fs::path& tile_path)
{
    const Image tile = io::load_image(tile_path);
    require_same_shape(reference, tile,
                       "reference and test tile " + tile_path.string() + " differ in size");
    std::vector<ReportRow> rows;
    for (std::size_t i = 0; i < config.methods.size(); ++i) {
        const Method method = config.methods[i];
        const auto& ref = reference_results[i];
        const auto test = detect::run_method(method, tile, s.se, s.options);
        const bool residual_pair = config.metric_pair == MetricPair::Residual;
        rows.push_back({tile_path.generic_string(),
                        metrics::build_record(method, ref, test,
                                              residual_pair ? ref.residual : reference,
                                              residual_pair ? test.residual : tile, s.record)});
        if (config.dump_residuals) {
            dump_residual(*config.dump_residuals, tile_path.stem().string(), method,
                          test.residual);
        }
    }
    return rows;
}

} // namespace

std::string_view metric_pair_name(MetricPair pair) noexcept
{
    return pair == MetricPair::Residual ? "residual" : "input";
}

std::optional<MetricPair> parse_metric_pair(std::string_view name) noexcept
{
    if (name == "residual") {
        return MetricPair::Residual;
    }
    if (name == "input") {
        return MetricPair::Input;
    }
    return std::nullopt;
}

std::vector<fs::path> expand_test_paths(const std::vector<fs::path>& inputs)
{
    std::vector<fs::path> paths;
    for (const auto& input : inputs) {
        if (fs::is_directory(input)) {
            std::vector<fs::path> found;
            for (const auto& entry : fs::directory_iterator(input)) {
                if (entry.is_regular_file() && io::is_image_path(entry.path())) {
                    found.push_back(entry.path());
                }
            }
            std::sort(found.begin(), found.end());
            paths.insert(paths.end(), found.begin(), found.end());
        } else {
            paths.push_back(input);
        }
    }
    return paths;
}

InspectionOutcome inspect(const RunConfig& config)
{
    if (config.methods.empty()) {
        throw std::invalid_argument("at least one detection method must be selected");
    }
    if (!(config.psnr_max > 0.0)) {
        throw std::invalid_argument("psnr max intensity must be positive");
    }
    const Settings settings{parse_structuring_element(config.structuring_element),
                            {parse_threshold(config.threshold), config.erosion_variant,
                             config.binarize_all},
                            {config.count_tolerance, config.psnr_max}};

    const auto tiles = expand_test_paths(config.tests);
    if (tiles.empty()) {
        throw std::invalid_argument("no test tiles given");
    }
    if (config.dump_residuals) {
        fs::create_directories(*config.dump_residuals);
    }

    const Image reference = io::load_image(config.reference);
    std::vector<ResidualResult> reference_results;
    for (Method method : config.methods) {
        reference_results.push_back(detect::run_method(method, reference, settings.se, settings.options));
        if (config.dump_residuals) {
            dump_residual(*config.dump_residuals, "reference", method,
                          reference_results.back().residual);
        }
    }

    // Workers pull tile indices; each writes only its own slot, so the merge
    // below is independent of scheduling.
    std::vector<std::vector<ReportRow>> per_tile(tiles.size());
    std::vector<std::exception_ptr> failures(tiles.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tiles.size(); i = next++) {
            try {
                per_tile[i] = inspect_tile(config, settings, reference, reference_results, tiles[i]);
            } catch (...) {
                failures[i] = std::current_exception();
            }
        }
    };
    const unsigned workers =
        std::clamp<unsigned>(config.jobs, 1u, static_cast<unsigned>(tiles.size()));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(worker);
        }
    }
    for (const auto& failure : failures) {
        if (failure) {
            std::rethrow_exception(failure);
        }
    }

    Report report;
    report.reference = config.reference.generic_string();
    report.structuring_element = config.structuring_element;
    report.threshold = describe(settings.options.threshold);
    report.erosion_variant = std::string(detect::erosion_variant_name(config.erosion_variant));
    report.metric_pair = std::string(metric_pair_name(config.metric_pair));
    report.count_tolerance = config.count_tolerance;
    report.binarize_all = config.binarize_all;
    report.psnr_max = config.psnr_max;
    for (auto& rows : per_tile) {
        std::move(rows.begin(), rows.end(), std::back_inserter(report.rows));
    }
    sort_rows(report.rows);

    const bool any_defective = std::any_of(report.rows.begin(), report.rows.end(), [](const ReportRow& r) {
        return r.record.verdict == metrics::Verdict::Defective;
    });
    return {std::move(report), any_defective ? kExitDefective : kExitAllDefectFree};
}

std::string render_report(const Report& report, OutputFormat format, bool mask)
{
    if (format == OutputFormat::Csv) {
        if (!mask) {
            return to_csv(report);
        }
        Report masked = report;
        for (auto& row : masked.rows) {
            row.record.elapsed_seconds = 0.0;
        }
        return to_csv(masked);
    }
    auto doc = to_json(report);
    if (mask) {
        mask_timing(doc);
    }
    return doc.dump(2) + "\n";
}

int run_inspect_command(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    try {
        const auto outcome = inspect(config);
        const auto text = render_report(outcome.report, config.format, config.mask_timing);
        if (config.out) {
            std::ofstream file(*config.out, std::ios::binary | std::ios::trunc);
            file << text;
            if (!file) {
                throw std::runtime_error("cannot write report " + config.out->string());
            }
        } else {
            out << text;
        }
        return outcome.exit_code;
    } catch (const std::exception& e) {
        err << "tileguard: " << e.what() << '\n';
        return kExitError;
    }
}

} // namespace tileguard::cli
