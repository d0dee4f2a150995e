#pragma once

#include "algoeff/date.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace algoeff::trends {

// Values printed alongside a record in its source table, kept for comparison
// only. Nothing in the library derives from them.
struct PublishedValues {
    std::optional<double> teraflop_s_days;
    std::optional<double> gigaflops_thop;
    std::optional<double> gigaflops_paper;

    bool empty() const { return !teraflop_s_days && !gigaflops_thop && !gigaflops_paper; }
    friend bool operator==(const PublishedValues&, const PublishedValues&) = default;
};

struct EfficiencyRecord {
    std::string name;
    Date date;
    std::string task;
    std::string threshold;
    std::optional<double> epochs;
    std::optional<double> gigaflops_per_image;
    std::optional<double> images_per_epoch;
    double backward_multiplier = 3.0;
    double total_training_flops = 0.0;
    std::string notes;
    PublishedValues published;

    bool has_epoch_fields() const { return epochs && gigaflops_per_image && images_per_epoch; }
    std::optional<double> flops_per_image() const;

    friend bool operator==(const EfficiencyRecord&, const EfficiencyRecord&) = default;
};

// Record whose total is derived from the epoch triple.
EfficiencyRecord make_record(std::string name, Date date, std::string task, std::string threshold, double epochs,
                             double gigaflops_per_image, double images_per_epoch = 1.28e6,
                             double backward_multiplier = 3.0, std::string notes = {});

// Throws ValidationError describing the first broken invariant.
void validate_record(const EfficiencyRecord& record);

struct EfficiencyFactor {
    std::string baseline;
    std::string improved;
    double factor = 1.0;
    Duration elapsed;  // months; negative when the improved record is older
};

EfficiencyFactor efficiency_factor(const EfficiencyRecord& baseline, const EfficiencyRecord& improved);

struct Decomposition {
    double epochs_factor = 1.0;
    double flops_per_epoch_factor = 1.0;

    double product() const { return epochs_factor * flops_per_epoch_factor; }
};

Decomposition decompose(const EfficiencyRecord& baseline, const EfficiencyRecord& improved);

// baseline_total / (fraction_to_match * improved_total), for comparisons where
// the newer model matched the baseline partway through its own run.
double partial_run_factor(double baseline_total, double improved_total, double fraction_to_match);

// elapsed / log2(factor), in the unit of `elapsed`.
Duration doubling_time(double factor, Duration elapsed);

struct Frontier {
    std::vector<EfficiencyRecord> records;
};

Frontier frontier(std::vector<EfficiencyRecord> records);

enum class FitMethod { regression, endpoints };

std::string_view to_string(FitMethod method);
std::optional<FitMethod> parse_fit_method(std::string_view text);

struct TrendFit {
    FitMethod method = FitMethod::regression;
    double growth_rate = 1.0;       // per month; below 1 while compute declines
    double doubling_months = 0.0;   // time for efficiency to double
    double r_squared = 1.0;
    double span_months = 0.0;       // first to last point
    std::size_t points = 0;

    // Months, or days when the fitted span is under a year.
    Duration doubling_time() const;
};

TrendFit fit_trend(const Frontier& frontier, FitMethod method);

double moore_factor(Duration period, Duration doubling);

double effective_compute(std::span<const double> factors);

struct EffectiveComputeModel {
    double hardware_doubling_months = 24.0;
    double spend_parallelization_factor = 1.0;
    double algorithmic_factor = 1.0;
    Duration period = Duration::months(72);

    double hardware_factor() const;
    double total() const;

    // Growth factors of each series `months` into the period, assuming each
    // component grows at a constant exponential rate.
    double hardware_at(double months) const;
    double spend_at(double months) const;
    double algorithmic_at(double months) const;
};

enum class PaperUnit { raw, stated, table };

inline constexpr double kTeraflopSecondDay = 1e12 * 24 * 60 * 60;
inline constexpr double kTableUnit = 1e15;

std::string_view to_string(PaperUnit unit);
std::optional<PaperUnit> parse_paper_unit(std::string_view text);
double to_paper_units(double raw_flops, PaperUnit unit);

// Half-to-even rounding of the decimal value: display_round(0.385) is "0.38",
// display_round(4.333) is "4.3", round_decimals(1.351, 2) is "1.35".
std::string display_round(double value, int significant = 2);
std::string round_decimals(double value, int decimals);

// Records file I/O. The file is a JSON array of record objects.
std::vector<EfficiencyRecord> parse_records(std::string_view json_text);
std::vector<EfficiencyRecord> load_records_file(const std::string& path);
std::string records_to_json(const std::vector<EfficiencyRecord>& records);
void save_records_file(const std::string& path, const std::vector<EfficiencyRecord>& records);

// Throws NotFoundError naming the available records.
const EfficiencyRecord& find_record(const std::vector<EfficiencyRecord>& records, std::string_view name);

} // namespace algoeff::trends
