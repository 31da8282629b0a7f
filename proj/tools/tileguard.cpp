// tileguard: morphological surface-defect inspection for ceramic tiles.

#include "tileguard/generate.hpp"
#include "tileguard/inspect.hpp"
#include "tileguard/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace tileguard;

int run_generate(const std::string& spec_file, const std::string& out_dir)
{
    try {
        std::ifstream in(spec_file);
        if (!in) {
            throw std::runtime_error("cannot open spec file " + spec_file);
        }
        const auto plan = cli::parse_generation_plan(nlohmann::json::parse(in));
        for (const auto& path : cli::write_generation(plan, out_dir)) {
            std::cout << path.generic_string() << '\n';
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "tileguard: " << e.what() << '\n';
        return cli::kExitError;
    }
}

int run_plotdata(const std::string& report_file, const std::string& out_dir)
{
    try {
        std::ifstream in(report_file);
        if (!in) {
            throw std::runtime_error("cannot open report " + report_file);
        }
        const auto report = cli::report_from_json(nlohmann::json::parse(in));
        for (const auto& path : cli::write_plot_data(report.rows, out_dir)) {
            std::cout << path.generic_string() << '\n';
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "tileguard: " << e.what() << '\n';
        return cli::kExitError;
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Surface-defect inspection of ceramic tile images"};
    app.require_subcommand(1);

    cli::RunConfig config;
    std::string reference;
    std::vector<std::string> tests;
    std::vector<std::string> methods{"all"};
    std::string erosion_variant = "literal";
    std::string metric_pair = "residual";
    std::string format = "json";
    std::string out;
    std::string dump;

    auto* inspect = app.add_subcommand("inspect", "Compare test tiles against a reference tile");
    inspect->add_option("--reference,-r", reference, "Defect-free reference image")->required();
    inspect->add_option("--test,-t", tests, "Test images or directories")->required();
    inspect->add_option("--method,-m", methods, "all|dilation|erosion|smee|boundary")
        ->capture_default_str();
    inspect->add_option("--se", config.structuring_element, "square:k | cross:k | disk:r")
        ->capture_default_str();
    inspect->add_option("--threshold", config.threshold, "otsu | fixed:v")->capture_default_str();
    inspect->add_option("--erosion-variant", erosion_variant, "literal | difference")
        ->check(CLI::IsMember({"literal", "difference"}))
        ->capture_default_str();
    inspect->add_option("--metric-pair", metric_pair, "residual | input")
        ->check(CLI::IsMember({"residual", "input"}))
        ->capture_default_str();
    inspect->add_option("--count-tolerance", config.count_tolerance,
                        "Accept pixel-count deficits up to this size")
        ->capture_default_str();
    inspect->add_flag("--binarize-all", config.binarize_all,
                      "Binarize before SMEE and boundary extraction as well");
    inspect->add_option("--psnr-max", config.psnr_max, "Peak intensity for PSNR (1 or 255)")
        ->capture_default_str();
    inspect->add_option("--format", format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    inspect->add_option("--out,-o", out, "Report file (default: stdout)");
    inspect->add_option("--dump-residuals", dump, "Directory for residual images");
    inspect->add_option("--jobs,-j", config.jobs, "Parallel tile workers")->capture_default_str();
    inspect->add_flag("--mask-timing", config.mask_timing,
                      "Write elapsed_seconds as 0 for reproducible reports");

    std::string spec_file;
    std::string generate_out;
    auto* generate = app.add_subcommand("generate", "Write synthetic reference and defect tiles");
    generate->add_option("--spec", spec_file, "JSON generation spec")->required();
    generate->add_option("--out", generate_out, "Output directory")->required();

    std::string report_file;
    std::string plot_out;
    auto* plotdata = app.add_subcommand("plotdata", "Write psnr/mse/time CSVs from a JSON report");
    plotdata->add_option("--report", report_file, "JSON report from inspect")->required();
    plotdata->add_option("--out", plot_out, "Output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cli::kExitError;
    }

    if (*generate) {
        return run_generate(spec_file, generate_out);
    }
    if (*plotdata) {
        return run_plotdata(report_file, plot_out);
    }

    config.reference = reference;
    config.tests.assign(tests.begin(), tests.end());
    config.methods.clear();
    for (const auto& name : methods) {
        if (name == "all") {
            config.methods.assign(detect::kAllMethods.begin(), detect::kAllMethods.end());
            break;
        }
        const auto method = detect::parse_method(name);
        if (!method) {
            std::cerr << "tileguard: unknown method '" << name << "'\n";
            return cli::kExitError;
        }
        if (std::find(config.methods.begin(), config.methods.end(), *method) == config.methods.end()) {
            config.methods.push_back(*method);
        }
    }
    config.erosion_variant = *detect::parse_erosion_variant(erosion_variant);
    config.metric_pair = *cli::parse_metric_pair(metric_pair);
    config.format = format == "csv" ? cli::OutputFormat::Csv : cli::OutputFormat::Json;
    if (!out.empty()) {
        config.out = out;
    }
    if (!dump.empty()) {
        config.dump_residuals = dump;
    }
    return cli::run_inspect_command(config, std::cout, std::cerr);
}
