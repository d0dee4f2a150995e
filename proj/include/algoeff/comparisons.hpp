#pragma once

#include "algoeff/date.hpp"
#include "algoeff/trends.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace algoeff::trends {

// How a comparison's efficiency factor is obtained from its stored inputs.
enum class FactorSource {
    partial_run,   // baseline_total / (fraction_to_match * improved_total)
    stated_ratio,  // ratio / fraction_to_match
    records,       // efficiency_factor of two named efficiency records
};

std::string_view to_string(FactorSource source);

// What the source table printed for a comparison.
struct PrintedComparison {
    double factor = 0.0;
    Duration period;
    Duration doubling;
};

// One row of cross-domain efficiency evidence.
struct Comparison {
    std::string id;
    std::string original;
    std::string improved;
    std::string task;
    std::string regime = "training";  // or "inference"
    FactorSource source = FactorSource::stated_ratio;
    double baseline_total = 0.0;
    double improved_total = 0.0;
    double ratio = 0.0;
    double fraction_to_match = 1.0;
    std::string baseline_record;
    std::string improved_record;
    // Required unless the period falls out of record dates.
    std::optional<Duration> period;
    std::optional<PrintedComparison> printed;
    std::string notes;
};

struct ComparisonResult {
    double factor = 1.0;
    Duration period;
    Duration doubling;
    std::vector<std::string> warnings;  // disagreements with the printed row
};

// `records` is consulted only for FactorSource::records.
ComparisonResult evaluate(const Comparison& comparison, const std::vector<EfficiencyRecord>& records);

std::vector<Comparison> parse_comparisons(std::string_view json_text);
std::vector<Comparison> load_comparisons_file(const std::string& path);

} // namespace algoeff::trends
