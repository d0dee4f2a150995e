#pragma once

#include "algoeff/comparisons.hpp"
#include "algoeff/document.hpp"
#include "algoeff/trends.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace algoeff::cli {

enum class ReportKind { table1, table2, table3, figure3_points, figure4_points, figure5_points };

std::optional<ReportKind> parse_report_kind(std::string_view text);
std::string_view to_string(ReportKind kind);

struct ReportSpec {
    ReportKind which = ReportKind::table1;
    Format format = Format::markdown;
    trends::PaperUnit unit = trends::PaperUnit::table;
};

struct ReportInputs {
    std::vector<trends::EfficiencyRecord> records;
    std::vector<trends::Comparison> comparisons;
    trends::EffectiveComputeModel effective;
};

// 2012 to 2018: 300,000x growth in the largest training runs, split into
// Moore's-law hardware gains and spending/parallelization, times the 25x
// algorithmic gain available through 2018.
trends::EffectiveComputeModel default_effective_model();

// Shipped records, comparisons and the default effective-compute model.
ReportInputs shipped_inputs();

Document build_report(const ReportSpec& spec, const ReportInputs& inputs);

// Column label for compute expressed in `unit`.
std::string compute_label(trends::PaperUnit unit);

} // namespace algoeff::cli
