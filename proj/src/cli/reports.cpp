#include "algoeff/reports.hpp"

#include "algoeff/builtin_archs.hpp"
#include "algoeff/curves.hpp"
#include "algoeff/dataset.hpp"
#include "algoeff/error.hpp"
#include "algoeff/flops.hpp"

#include <cmath>
#include <map>

namespace algoeff::cli {

using trends::EfficiencyRecord;
using trends::PaperUnit;

namespace {

// Printed compute has one decimal; recomputed values further away than half
// of that do not round to the printed number.
constexpr double kComputeHalfUnit = 0.05;

std::string unit_word(TimeUnit unit, double value) {
    std::string word(to_string(unit));
    if (std::abs(value - 1.0) < 1e-12) word.pop_back();
    return word;
}

std::string duration_text(const Duration& d) {
    const bool whole = std::abs(d.value - std::round(d.value)) < 1e-9;
    return (whole ? fixed_text(std::round(d.value), 0) : fixed_text(d.value, 1)) + " " + unit_word(d.unit, d.value);
}

std::string rounded_duration(const Duration& d) {
    const auto text = trends::round_decimals(d.value, 0);
    return text + " " + unit_word(d.unit, std::stod(text));
}

std::vector<EfficiencyRecord> same_task(const std::vector<EfficiencyRecord>& records, const EfficiencyRecord& like) {
    std::vector<EfficiencyRecord> out;
    for (const auto& r : records) {
        if (r.task == like.task && r.threshold == like.threshold) out.push_back(r);
    }
    return out;
}

Document table1(const ReportInputs& in) {
    if (in.records.empty()) throw ValidationError("table1 needs at least one record");
    const auto pool = same_task(in.records, in.records.front());
    const auto front = trends::frontier(pool);
    const auto& baseline = front.records.front();

    Document doc;
    Table t;
    t.name = "rows";
    t.title = "Training efficiency gains over " + baseline.name + " split into epochs and FLOPs per epoch";
    t.columns = {"Experiment", "Training epochs factor", "FLOPs per epoch factor", "Training efficiency factor",
                 "epochs_factor", "flops_per_epoch_factor", "efficiency_factor"};
    for (const auto& r : front.records) {
        const auto d = trends::decompose(baseline, r);
        const auto f = trends::efficiency_factor(baseline, r);
        t.rows.push_back({r.name, trends::display_round(d.epochs_factor), trends::display_round(d.flops_per_epoch_factor),
                          trends::display_round(f.factor), Cell::num(d.epochs_factor),
                          Cell::num(d.flops_per_epoch_factor), Cell::num(f.factor)});
        const double gap = std::abs(d.product() - f.factor) / f.factor;
        if (gap > 1e-9) {
            doc.warnings.push_back(r.name + ": decomposition product differs from the overall factor by " +
                                   shortest(gap));
        }
    }
    t.notes.push_back("rows are the efficiency frontier of the " + baseline.task + " records");
    doc.field("baseline", baseline.name);
    doc.tables.push_back(std::move(t));
    return doc;
}

Document table2(const ReportInputs& in) {
    Document doc;
    Table training;
    training.name = "training";
    training.title = "Efficiency gains at constant performance";
    Table inference;
    inference.name = "inference";
    inference.title = "Inference efficiency gains at constant performance";
    for (auto* t : {&training, &inference}) {
        t->columns = {"Original", "Improved", "Task", "Efficiency Factor", "Period", "Doubling Time", "factor",
                      "period_months", "doubling", "printed_factor", "printed_period", "printed_doubling", "method"};
    }
    for (const auto& c : in.comparisons) {
        const auto result = trends::evaluate(c, in.records);
        std::vector<Cell> row{c.original,
                              c.improved,
                              c.task,
                              trends::round_decimals(result.factor, 0) + "x",
                              c.printed ? duration_text(result.period.as(c.printed->period.unit))
                                        : duration_text(result.period),
                              rounded_duration(result.doubling),
                              Cell::num(result.factor),
                              Cell::num(result.period.in_months()),
                              Cell::num(result.doubling.value, shortest(result.doubling.value) + " " +
                                                                  std::string(to_string(result.doubling.unit)))};
        if (c.printed) {
            row.push_back(fixed_text(c.printed->factor, 0) + "x");
            row.push_back(duration_text(c.printed->period));
            row.push_back(duration_text(c.printed->doubling));
        } else {
            row.insert(row.end(), {"-", "-", "-"});
        }
        row.push_back(std::string(trends::to_string(c.source)));
        (c.regime == "inference" ? inference : training).rows.push_back(std::move(row));
        for (const auto& w : result.warnings) doc.warnings.push_back(c.original + " -> " + c.improved + ": " + w);
    }
    training.notes.push_back("factors and doubling times are recomputed from stored inputs; "
                             "printed_* columns hold the published values");
    doc.tables.push_back(std::move(training));
    if (!inference.rows.empty()) doc.tables.push_back(std::move(inference));
    return doc;
}

std::map<std::string, double> counted_gigaflops() {
    std::map<std::string, double> out;
    for (const auto& name : arch::builtin_arch_names()) {
        const auto spec = arch::builtin_arch(name);
        out[arch::normalize_model_name(name)] = arch::count_flops(spec, spec.default_input).giga();
    }
    return out;
}

Document table3(const ReportInputs& in, PaperUnit unit) {
    const auto counted = counted_gigaflops();
    Document doc;
    Table t;
    t.name = "rows";
    t.title = "Compute to reach AlexNet-level accuracy";
    t.columns = {"Experiment", "Epochs", "gigaflops/img (used)", compute_label(unit), "printed teraflop/s-days",
                 "deviation %", "gigaflops/img (counted)", "gigaflops/img (THOP)", "gigaflops/img (paper)"};
    for (const auto& r : in.records) {
        std::vector<Cell> row{r.name};
        row.push_back(r.epochs ? Cell::num(*r.epochs) : Cell("-"));
        row.push_back(r.gigaflops_per_image ? Cell::fixed(*r.gigaflops_per_image, 2) : Cell("-"));
        const double converted = trends::to_paper_units(r.total_training_flops, unit);
        row.push_back(unit == PaperUnit::raw ? Cell::num(converted) : Cell::fixed(converted, 1));
        const double in_table_units = trends::to_paper_units(r.total_training_flops, PaperUnit::table);
        if (const auto printed = r.published.teraflop_s_days) {
            const double deviation = (in_table_units - *printed) / *printed;
            row.push_back(Cell::fixed(*printed, 1));
            row.push_back(Cell::num(100.0 * deviation, fixed_text(100.0 * deviation, 2)));
            if (std::abs(in_table_units - *printed) > kComputeHalfUnit * (1 + 1e-9)) {
                doc.warnings.push_back(r.name + ": recomputed " + fixed_text(in_table_units, 2) +
                                       " table units vs printed " + fixed_text(*printed, 1) + " (" +
                                       fixed_text(100.0 * deviation, 2) + "%)");
            }
        } else {
            row.insert(row.end(), {"-", "-"});
        }
        const auto it = counted.find(arch::normalize_model_name(r.name));
        row.push_back(it == counted.end() ? Cell("-") : Cell::fixed(it->second, 2));
        row.push_back(r.published.gigaflops_thop ? Cell::fixed(*r.published.gigaflops_thop, 2) : Cell("-"));
        row.push_back(r.published.gigaflops_paper ? Cell::fixed(*r.published.gigaflops_paper, 2) : Cell("-"));
        t.rows.push_back(std::move(row));
    }
    t.notes.push_back("compute = multiplier x epochs x gigaflops/img x 1e9 x images/epoch; deviation is measured "
                      "in table units (1e15 FLOPs)");
    t.notes.push_back("counted gigaflops use the built-in graphs with the mac convention over conv2d and linear");
    doc.field("unit", std::string(trends::to_string(unit)));
    doc.tables.push_back(std::move(t));
    return doc;
}

Document figure3(const ReportInputs& in, PaperUnit unit) {
    if (in.records.empty()) throw ValidationError("figure3_points needs at least one record");
    const auto pool = same_task(in.records, in.records.front());
    const auto front = trends::frontier(pool);
    Document doc;
    Table t;
    t.name = "points";
    t.columns = {"name", "date", "year", "compute", "frontier"};
    for (const auto& r : pool) {
        bool on = false;
        for (const auto& f : front.records) on = on || f.name == r.name;
        t.rows.push_back({r.name, r.date.iso(), Cell::num(r.date.decimal_year()),
                          Cell::num(trends::to_paper_units(r.total_training_flops, unit)), Cell::boolean(on)});
    }
    doc.field("unit", std::string(trends::to_string(unit)));
    if (front.records.size() >= 2) {
        for (auto method : {trends::FitMethod::endpoints, trends::FitMethod::regression}) {
            const auto fit = trends::fit_trend(front, method);
            t.notes.push_back(std::string(trends::to_string(method)) + " doubling time " +
                              fixed_text(fit.doubling_months, 2) + " months, R^2 " + fixed_text(fit.r_squared, 4));
        }
    }
    doc.tables.push_back(std::move(t));
    return doc;
}

Document figure4(const ReportInputs& in, PaperUnit unit) {
    Document doc;
    Table points;
    points.name = "points";
    points.columns = {"model", "epoch", "compute", "accuracy"};
    std::vector<curves::ComputeCurve> computed;
    for (const auto& name : data::curve_names()) {
        const auto curve = data::builtin_curve(name);
        const auto& record = trends::find_record(in.records, data::curve_record_name(name));
        if (!record.has_epoch_fields()) throw ValidationError("record '" + record.name + "' has no epoch fields");
        auto cc = curves::to_compute_curve(curve, *record.flops_per_image(), *record.images_per_epoch,
                                           record.backward_multiplier);
        cc.model = record.name;
        for (std::size_t i = 0; i < cc.points.size(); ++i) {
            points.rows.push_back({record.name, Cell::integer(curve.points[i].epoch),
                                   Cell::num(trends::to_paper_units(cc.points[i].flops, unit)),
                                   Cell::num(cc.points[i].accuracy)});
        }
        computed.push_back(std::move(cc));
    }
    points.notes.push_back("learning curves are illustrative shapes, not measured runs");

    Table relations;
    relations.name = "dominance";
    relations.title = "Pairwise dominance over shared compute";
    relations.columns = {"a", "b", "relation"};
    for (std::size_t i = 0; i < computed.size(); ++i) {
        for (std::size_t j = i + 1; j < computed.size(); ++j) {
            const auto result = curves::dominance(computed[i], computed[j]);
            relations.rows.push_back({computed[i].model, computed[j].model,
                                      std::string(curves::to_string(result.relation))});
        }
    }
    doc.field("unit", std::string(trends::to_string(unit)));
    doc.tables.push_back(std::move(points));
    doc.tables.push_back(std::move(relations));
    return doc;
}

Document figure5(const ReportInputs& in) {
    const auto& m = in.effective;
    Document doc;
    Table t;
    t.name = "points";
    t.columns = {"month", "hardware", "spend_parallelization", "algorithmic", "ai_and_compute", "effective"};
    const int months = static_cast<int>(std::lround(m.period.in_months()));
    for (int month = 0; month <= months; ++month) {
        const double hw = m.hardware_at(month);
        const double spend = m.spend_at(month);
        const double alg = m.algorithmic_at(month);
        t.rows.push_back({Cell::integer(month), Cell::num(hw), Cell::num(spend), Cell::num(alg),
                          Cell::num(hw * spend), Cell::num(hw * spend * alg)});
    }
    doc.field("period_months", Cell::num(m.period.in_months()));
    doc.field("hardware_factor", Cell::num(m.hardware_factor()));
    doc.field("spend_parallelization_factor", Cell::num(m.spend_parallelization_factor));
    doc.field("algorithmic_factor", Cell::num(m.algorithmic_factor));
    doc.field("effective_compute", Cell::num(m.total()));
    doc.tables.push_back(std::move(t));
    return doc;
}

} // namespace

std::optional<ReportKind> parse_report_kind(std::string_view text) {
    for (auto kind : {ReportKind::table1, ReportKind::table2, ReportKind::table3, ReportKind::figure3_points,
                      ReportKind::figure4_points, ReportKind::figure5_points}) {
        if (to_string(kind) == text) return kind;
    }
    return std::nullopt;
}

std::string_view to_string(ReportKind kind) {
    switch (kind) {
    case ReportKind::table1: return "table1";
    case ReportKind::table2: return "table2";
    case ReportKind::table3: return "table3";
    case ReportKind::figure3_points: return "figure3_points";
    case ReportKind::figure4_points: return "figure4_points";
    case ReportKind::figure5_points: return "figure5_points";
    }
    return "unknown";
}

trends::EffectiveComputeModel default_effective_model() {
    trends::EffectiveComputeModel m;
    m.period = Duration::months(72);
    m.hardware_doubling_months = 24.0;
    m.spend_parallelization_factor = 300000.0 / m.hardware_factor();
    m.algorithmic_factor = 25.0;
    return m;
}

ReportInputs shipped_inputs() {
    return {data::imagenet_records(), data::cross_domain_comparisons(), default_effective_model()};
}

std::string compute_label(PaperUnit unit) {
    switch (unit) {
    case PaperUnit::raw: return "training FLOPs";
    case PaperUnit::stated: return "teraflop/s-days (8.64e16)";
    case PaperUnit::table: return "teraflop/s-days (1e15)";
    }
    return "compute";
}

Document build_report(const ReportSpec& spec, const ReportInputs& inputs) {
    switch (spec.which) {
    case ReportKind::table1: return table1(inputs);
    case ReportKind::table2: return table2(inputs);
    case ReportKind::table3: return table3(inputs, spec.unit);
    case ReportKind::figure3_points: return figure3(inputs, spec.unit);
    case ReportKind::figure4_points: return figure4(inputs, spec.unit);
    case ReportKind::figure5_points: return figure5(inputs);
    }
    throw ValidationError("unknown report");
}

} // namespace algoeff::cli
