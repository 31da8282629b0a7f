#include "tileguard/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <stdexcept>
#include <tuple>

namespace tileguard::cli {

namespace {

using detect::Method;

nlohmann::ordered_json psnr_value(double db)
{
    if (std::isinf(db)) {
        return "inf";
    }
    return db;
}

double psnr_from_json(const nlohmann::json& v)
{
    if (v.is_string()) {
        if (v.get<std::string>() != "inf") {
            throw std::invalid_argument("psnr_db string must be \"inf\"");
        }
        return std::numeric_limits<double>::infinity();
    }
    return v.get<double>();
}

std::string format_sig6(double value)
{
    if (std::isinf(value)) {
        return "inf";
    }
    char buf[64];
    const auto [ptr, ec] =
        std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 6);
    return {buf, ptr};
}

void mask_recursive(nlohmann::ordered_json& node)
{
    if (node.is_object()) {
        for (auto& [key, value] : node.items()) {
            if (key == "elapsed_seconds") {
                value = 0.0;
            } else {
                mask_recursive(value);
            }
        }
    } else if (node.is_array()) {
        for (auto& child : node) {
            mask_recursive(child);
        }
    }
}

} // namespace

void sort_rows(std::vector<ReportRow>& rows)
{
    std::stable_sort(rows.begin(), rows.end(), [](const ReportRow& a, const ReportRow& b) {
        return std::forward_as_tuple(a.tile, detect::method_name(a.record.method)) <
               std::forward_as_tuple(b.tile, detect::method_name(b.record.method));
    });
}

nlohmann::ordered_json to_json(const Report& report)
{
    nlohmann::ordered_json doc;
    doc["reference"] = report.reference;
    doc["structuring_element"] = report.structuring_element;
    doc["threshold"] = report.threshold;
    doc["erosion_variant"] = report.erosion_variant;
    doc["metric_pair"] = report.metric_pair;
    doc["count_tolerance"] = report.count_tolerance;
    doc["binarize_all"] = report.binarize_all;
    doc["psnr_max"] = report.psnr_max;
    auto& records = doc["records"] = nlohmann::ordered_json::array();
    for (const auto& row : report.rows) {
        const auto& r = row.record;
        nlohmann::ordered_json rec;
        rec["tile"] = row.tile;
        rec["method"] = detect::method_name(r.method);
        rec["reference_count"] = r.reference_count;
        rec["test_count"] = r.test_count;
        rec["delta_d"] = r.delta_d;
        rec["verdict"] = metrics::verdict_name(r.verdict);
        rec["mse"] = r.mse;
        rec["psnr_db"] = psnr_value(r.psnr_db);
        rec["elapsed_seconds"] = r.elapsed_seconds;
        rec["elementary_ops"] = r.elementary_ops;
        records.push_back(std::move(rec));
    }
    return doc;
}

Report report_from_json(const nlohmann::json& doc)
{
    Report report;
    report.reference = doc.at("reference").get<std::string>();
    report.structuring_element = doc.at("structuring_element").get<std::string>();
    report.threshold = doc.at("threshold").get<std::string>();
    report.erosion_variant = doc.at("erosion_variant").get<std::string>();
    report.metric_pair = doc.at("metric_pair").get<std::string>();
    report.count_tolerance = doc.at("count_tolerance").get<std::size_t>();
    report.binarize_all = doc.at("binarize_all").get<bool>();
    report.psnr_max = doc.at("psnr_max").get<double>();
    for (const auto& rec : doc.at("records")) {
        const auto method = detect::parse_method(rec.at("method").get<std::string>());
        const auto verdict = metrics::parse_verdict(rec.at("verdict").get<std::string>());
        if (!method || !verdict) {
            throw std::invalid_argument("report record has unknown method or verdict");
        }
        report.rows.push_back({rec.at("tile").get<std::string>(),
                               {*method, rec.at("reference_count").get<std::size_t>(),
                                rec.at("test_count").get<std::size_t>(),
                                rec.at("delta_d").get<std::int64_t>(), *verdict,
                                rec.at("mse").get<double>(), psnr_from_json(rec.at("psnr_db")),
                                rec.at("elapsed_seconds").get<double>(),
                                rec.at("elementary_ops").get<int>()}});
    }
    return report;
}

std::string csv_field(std::string_view text)
{
    if (text.find_first_of(",\"\r\n") == std::string_view::npos) {
        return std::string(text);
    }
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"') {
            quoted += '"';
        }
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string format_number(double value)
{
    if (std::isinf(value)) {
        return "inf";
    }
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return {buf, ptr};
}

std::string to_csv(const Report& report)
{
    std::string out = "tile,method,reference_count,test_count,delta_d,verdict,mse,psnr_db,"
                      "elapsed_seconds,elementary_ops\r\n";
    for (const auto& row : report.rows) {
        const auto& r = row.record;
        out += csv_field(row.tile);
        out += ',';
        out += detect::method_name(r.method);
        out += ',' + std::to_string(r.reference_count);
        out += ',' + std::to_string(r.test_count);
        out += ',' + std::to_string(r.delta_d);
        out += ',';
        out += metrics::verdict_name(r.verdict);
        out += ',' + format_number(r.mse);
        out += ',' + format_number(r.psnr_db);
        out += ',' + format_number(r.elapsed_seconds);
        out += ',' + std::to_string(r.elementary_ops);
        out += "\r\n";
    }
    return out;
}

void mask_timing(nlohmann::ordered_json& doc) { mask_recursive(doc); }

std::vector<std::filesystem::path> write_plot_data(std::span<const ReportRow> rows,
                                                   const std::filesystem::path& dir)
{
    if (rows.empty()) {
        throw std::invalid_argument("no records to plot");
    }

    std::vector<Method> methods;
    for (Method m : detect::kAllMethods) {
        if (std::any_of(rows.begin(), rows.end(),
                        [m](const ReportRow& r) { return r.record.method == m; })) {
            methods.push_back(m);
        }
    }
    std::vector<std::string> tiles;
    std::map<std::pair<std::string, Method>, const metrics::InspectionRecord*> cells;
    for (const auto& row : rows) {
        if (std::find(tiles.begin(), tiles.end(), row.tile) == tiles.end()) {
            tiles.push_back(row.tile);
        }
        cells[{row.tile, row.record.method}] = &row.record;
    }

    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (!std::filesystem::is_directory(dir)) {
        throw std::runtime_error("cannot create plot directory " + dir.string());
    }

    struct Figure {
        const char* file;
        double (*value)(const metrics::InspectionRecord&);
    };
    const Figure figures[] = {
        {"psnr.csv", [](const metrics::InspectionRecord& r) { return r.psnr_db; }},
        {"mse.csv", [](const metrics::InspectionRecord& r) { return r.mse; }},
        {"time.csv", [](const metrics::InspectionRecord& r) { return r.elapsed_seconds; }},
    };

    std::vector<std::filesystem::path> written;
    for (const auto& fig : figures) {
        std::string text = "tile";
        for (Method m : methods) {
            text += ',';
            text += detect::method_name(m);
        }
        text += "\r\n";
        for (const auto& tile : tiles) {
            text += csv_field(tile);
            for (Method m : methods) {
                text += ',';
                if (const auto it = cells.find({tile, m}); it != cells.end()) {
                    text += format_sig6(fig.value(*it->second));
                }
            }
            text += "\r\n";
        }
        const auto path = dir / fig.file;
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        out << text;
        if (!out) {
            throw std::runtime_error("cannot write " + path.string());
        }
        written.push_back(path);
    }
    return written;
}

} // namespace tileguard::cli
