// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. Tolerances and sample sizes are fixed here.

#include "tileguard/image_io.hpp"
#include "tileguard/inspect.hpp"
#include "tileguard/metrics.hpp"
#include "tileguard/morphology.hpp"
#include "tileguard/pipelines.hpp"
#include "tileguard/synth.hpp"

#include "../support/corpus.hpp"
#include "../support/generators.hpp"
#include "../support/oracles.hpp"
#include "../support/published_figures.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace tileguard;
namespace fs = std::filesystem;

namespace {

struct Verdict {
    bool pass;
    std::string detail;
};

Verdict fail(std::string why) { return {false, std::move(why)}; }

// 1. Kernels vs brute-force window max/min.
Verdict oracle_equivalence()
{
    constexpr int kCases = 1000;
    constexpr double kBudgetSeconds = 30.0;
    const auto start = std::chrono::steady_clock::now();
    gen::Rng rng(0xACCE1);
    for (int i = 0; i < kCases; ++i) {
        const int w = gen::uniform(rng, 1, 64);
        const int h = gen::uniform(rng, 1, 64);
        const auto se = gen::structuring_element(rng, 7, false);
        const auto img = i % 2 == 0 ? gen::binary(rng, w, h) : gen::grayscale(rng, w, h);
        if (dilate(img, se) != oracle::window_max(img, se)) {
            return fail("dilate mismatch in case " + std::to_string(i));
        }
        if (erode(img, se) != oracle::window_min(img, se)) {
            return fail("erode mismatch in case " + std::to_string(i));
        }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= kBudgetSeconds) {
        return fail("took " + std::to_string(secs) + " s");
    }
    return {true, std::to_string(kCases) + " cases exact in " + std::to_string(secs) + " s"};
}

// 2. Duality, idempotence, (anti-)extensivity, monotonicity.
Verdict algebraic_suite()
{
    constexpr int kImages = 200;
    gen::Rng rng(0xA16E);
    for (int i = 0; i < kImages; ++i) {
        const auto img = gen::binary(rng, 32, 32);
        const auto se = gen::structuring_element(rng, 7, false);
        const auto rooted = gen::structuring_element(rng, 7, true);
        const std::string at = " (image " + std::to_string(i) + ")";

        if (dilate(img, se) != complement(erode(complement(img), se.reflected()))) {
            return fail("duality" + at);
        }
        const auto o = opening(img, se);
        const auto c = closing(img, se);
        if (opening(o, se) != o || closing(c, se) != c) {
            return fail("idempotence" + at);
        }
        if (!gen::pointwise_leq(img, dilate(img, rooted)) ||
            !gen::pointwise_leq(erode(img, rooted), img)) {
            return fail("extensivity" + at);
        }
        const auto smaller = gen::pointwise_min(img, gen::binary(rng, 32, 32));
        for (const auto* s : {&se, &rooted}) {
            if (!gen::pointwise_leq(dilate(smaller, *s), dilate(img, *s)) ||
                !gen::pointwise_leq(erode(smaller, *s), erode(img, *s))) {
                return fail("monotonicity" + at);
            }
        }
    }
    return {true, std::to_string(kImages) + " binary 32x32 images, all four properties bit-exact"};
}

// 3. PSNR vs MSE tables under MAX_I = 1.
Verdict table_consistency()
{
    constexpr double kAgreeDb = 0.01;
    constexpr double kTypoDb = 1.0;
    std::string detail;
    bool pass = true;
    double worst = 0.0;
    for (std::size_t d = 0; d < 3; ++d) {
        for (std::size_t m = 0; m < 4; ++m) {
            const double gap = std::abs(published::kPsnr[d][m] + 10.0 * std::log10(published::kMse[d][m]));
            const std::string cell = std::string(published::kDefects[d]) + "/" +
                                     std::string(detect::method_name(published::kMethods[m]));
            char buf[96];
            std::snprintf(buf, sizeof buf, "%s gap %.4f dB", cell.c_str(), gap);
            if (d == 0 && m == 0) {
                if (!(gap > kTypoDb)) {
                    pass = false;
                    detail += std::string(buf) + " expected > 1 dB; ";
                }
                continue;
            }
            worst = std::max(worst, gap);
            if (!(gap < kAgreeDb)) {
                pass = false;
                detail += std::string(buf) + " exceeds 0.01 dB; ";
            }
        }
    }
    if (pass) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "11 cells within %.4f dB; crack/dilation inconsistent", worst);
        return {true, buf};
    }
    return fail(detail);
}

// 4. Worked examples.
Verdict worked_examples()
{
    const auto se = StructuringElement::square(3);
    const auto otsu = Threshold::otsu();
    const auto s = detect::smee(gen::with_foreground(5, 5, {{2, 2}}), se).count;
    const auto b = detect::boundary_extraction(gen::filled_block(7, 7, 2, 2, 3, 3), se).count;
    const auto d = detect::dilation_pipeline(gen::filled_block(12, 12, 4, 4, 4, 4), se, otsu).count;

    gen::Rng rng(44);
    bool erosion_ok = true;
    for (int i = 0; i < 20 && erosion_ok; ++i) {
        const auto img = gen::grayscale(rng, 24, 24);
        erosion_ok = detect::erosion_pipeline(img, se, otsu).residual ==
                     detect::smooth(binarize(img, otsu), se);
    }
    const bool ok = s == 8 && b == 8 && d == 20 && erosion_ok;
    return {ok, "smee=" + std::to_string(s) + " boundary=" + std::to_string(b) +
                    " dilation-ring=" + std::to_string(d) +
                    " erosion-literal==P:" + (erosion_ok ? "yes" : "no")};
}

// 5. End-to-end classification of the synthetic corpus.
Verdict end_to_end(const corpus::Corpus& c)
{
    cli::RunConfig self;
    self.reference = c.reference;
    self.tests = {c.reference};
    std::ostringstream out, err;
    const int self_code = cli::run_inspect_command(self, out, err);
    const auto self_outcome = cli::inspect(self);
    const bool self_clean = std::all_of(
        self_outcome.report.rows.begin(), self_outcome.report.rows.end(), [](const cli::ReportRow& r) {
            return r.record.delta_d == 0 && r.record.verdict == metrics::Verdict::DefectFree;
        });

    cli::RunConfig defects = self;
    defects.tests = {c.tiles};
    const int defect_code = cli::run_inspect_command(defects, out, err);
    const auto outcome = cli::inspect(defects);
    std::string missed;
    for (const auto& tile : cli::expand_test_paths({c.tiles})) {
        const bool flagged = std::any_of(outcome.report.rows.begin(), outcome.report.rows.end(),
                                         [&](const cli::ReportRow& r) {
                                             return r.tile == tile.generic_string() &&
                                                    r.record.verdict == metrics::Verdict::Defective;
                                         });
        if (!flagged) {
            missed += tile.filename().string() + " ";
        }
    }
    const bool ok = self_code == 0 && self_clean && defect_code == 1 && missed.empty() &&
                    outcome.report.rows.size() == 16;
    return {ok, "self exit " + std::to_string(self_code) + (self_clean ? " all clean" : " NOT clean") +
                    ", defects exit " + std::to_string(defect_code) +
                    (missed.empty() ? ", all 4 tiles flagged" : ", missed: " + missed)};
}

// 6. Elementary-op costs and timing order on a 512x512 tile.
Verdict operation_ordering()
{
    constexpr int kRuns = 9;
    synth::TileSpec spec;
    spec.width = 512;
    spec.height = 512;
    spec.base_intensity = 0.85f;
    spec.pattern = synth::GridPattern{32, 0.55f};
    spec.noise_amplitude = 0.05f;
    spec.seed = 512;
    auto tile = synth::generate_reference(spec);
    for (auto kind : {synth::DefectKind::Crack, synth::DefectKind::Blob, synth::DefectKind::Spot}) {
        tile = synth::inject_defect(tile, synth::random_defect(kind, 512, 512, 0.1f, 600 + static_cast<int>(kind)));
    }
    const auto se = StructuringElement::square(3);

    std::string ops;
    bool ops_ok = true;
    std::vector<double> medians;
    for (auto m : published::kMethods) {
        std::vector<double> times;
        int cost = 0;
        for (int i = 0; i < kRuns; ++i) {
            const auto r = detect::run_method(m, tile, se);
            times.push_back(r.elapsed_seconds);
            cost = r.elementary_ops;
        }
        ops_ok = ops_ok && cost == (m == detect::Method::Smee || m == detect::Method::BoundaryExtraction ? 1 : 7);
        ops += std::string(detect::method_name(m)) + "=" + std::to_string(cost) + " ";
        std::nth_element(times.begin(), times.begin() + kRuns / 2, times.end());
        medians.push_back(times[kRuns / 2]);
    }
    // kMethods order: dilation, erosion, smee, boundary
    const bool time_ok = medians[2] < medians[0] && medians[3] < medians[1];
    char buf[160];
    std::snprintf(buf, sizeof buf, "median ms dilation %.2f erosion %.2f smee %.2f boundary %.2f",
                  medians[0] * 1e3, medians[1] * 1e3, medians[2] * 1e3, medians[3] * 1e3);
    return {ops_ok && time_ok, "ops " + ops + "| " + buf};
}

// 7. Pixel-count rule over the published count pairs.
Verdict classification_rule()
{
    int defective = 0;
    for (std::size_t m = 0; m < 4; ++m) {
        for (std::size_t d = 0; d < 3; ++d) {
            const auto c = metrics::classify(published::kReferenceCounts[m], published::kDefectCounts[m][d]);
            defective += c.delta_d < 0 && c.verdict == metrics::Verdict::Defective;
        }
    }
    return {defective == 12, std::to_string(defective) + "/12 pairs defective with negative delta"};
}

// 8. Byte-identical batch reports modulo timing.
Verdict determinism(const corpus::Corpus& c)
{
    std::vector<std::string> rendered;
    for (unsigned jobs : {1u, 4u}) {
        for (auto format : {cli::OutputFormat::Json, cli::OutputFormat::Csv}) {
            cli::RunConfig cfg;
            cfg.reference = c.reference;
            cfg.tests = {c.tiles, c.reference};
            cfg.jobs = jobs;
            cfg.format = format;
            cfg.mask_timing = true;
            std::ostringstream out, err;
            cli::run_inspect_command(cfg, out, err);
            rendered.push_back(out.str());
        }
    }
    const bool ok = !rendered[0].empty() && rendered[0] == rendered[2] && rendered[1] == rendered[3];
    return {ok, ok ? "json and csv reports identical across runs" : "reports differ"};
}

} // namespace

int main()
{
    const auto corpus_dir = fs::temp_directory_path() / "tileguard_acceptance";
    const auto corpus = corpus::write_corpus(corpus_dir, 128);

    struct Criterion {
        const char* name;
        std::function<Verdict()> run;
    };
    const Criterion criteria[] = {
        {"1 morphology oracle equivalence", oracle_equivalence},
        {"2 algebraic suite", algebraic_suite},
        {"3 PSNR/MSE table consistency", table_consistency},
        {"4 worked-example regression", worked_examples},
        {"5 end-to-end classification", [&] { return end_to_end(corpus); }},
        {"6 operation-count ordering", operation_ordering},
        {"7 classification-rule fidelity", classification_rule},
        {"8 determinism", [&] { return determinism(corpus); }},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        Verdict v{false, ""};
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v = fail(std::string("exception: ") + e.what());
        }
        failures += !v.pass;
        std::printf("[%s] %s: %s\n", v.pass ? "PASS" : "FAIL", c.name, v.detail.c_str());
    }
    fs::remove_all(corpus_dir);
    std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures,
                std::size(criteria));
    return failures == 0 ? 0 : 1;
}
