#include "algoeff/dataset.hpp"

#include "algoeff/embedded_data.hpp"
#include "algoeff/error.hpp"

#include <array>

namespace algoeff::data {

namespace {

struct CurveEntry {
    std::string_view name;
    std::string_view file;
    std::string_view record;
};

constexpr std::array<CurveEntry, 4> kCurves{{
    {"alexnet", "curves/alexnet.csv", "AlexNet"},
    {"googlenet", "curves/googlenet.csv", "GoogLeNet"},
    {"vgg11", "curves/vgg11.csv", "Vgg-11"},
    {"resnet50", "curves/resnet50.csv", "Resnet-50"},
}};

const CurveEntry& curve_entry(std::string_view name) {
    for (const auto& c : kCurves) {
        if (c.name == name) return c;
    }
    std::string names;
    for (const auto& c : kCurves) names += (names.empty() ? "" : ", ") + std::string(c.name);
    throw NotFoundError("no built-in curve '" + std::string(name) + "' (available: " + names + ")");
}

} // namespace

std::string_view embedded_file(std::string_view relative_path) {
    for (const auto& [path, content] : embedded::files) {
        if (path == relative_path) return content;
    }
    throw NotFoundError("no embedded data file '" + std::string(relative_path) + "'");
}

std::vector<std::string> embedded_files() {
    std::vector<std::string> out;
    for (const auto& [path, content] : embedded::files) out.emplace_back(path);
    return out;
}

std::vector<trends::EfficiencyRecord> imagenet_records() {
    return trends::parse_records(embedded_file("imagenet_records.json"));
}

std::vector<trends::Comparison> cross_domain_comparisons() {
    return trends::parse_comparisons(embedded_file("cross_domain.json"));
}

std::vector<std::string> curve_names() {
    std::vector<std::string> out;
    for (const auto& c : kCurves) out.emplace_back(c.name);
    return out;
}

curves::LearningCurve builtin_curve(std::string_view name) {
    const auto& entry = curve_entry(name);
    curves::CsvOptions options;
    options.model = std::string(entry.record);
    return curves::parse_curve(embedded_file(entry.file), options);
}

std::string curve_record_name(std::string_view name) { return std::string(curve_entry(name).record); }

} // namespace algoeff::data
