#include "algoeff/cli.hpp"

#include "algoeff/arch_json.hpp"
#include "algoeff/builtin_archs.hpp"
#include "algoeff/curves.hpp"
#include "algoeff/dataset.hpp"
#include "algoeff/document.hpp"
#include "algoeff/error.hpp"
#include "algoeff/flops.hpp"
#include "algoeff/reports.hpp"
#include "algoeff/shapes.hpp"
#include "algoeff/trends.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <optional>

namespace algoeff::cli {

namespace {

using trends::EfficiencyRecord;
using trends::PaperUnit;

// Thrown when analyze finds no crossing; mapped to its own exit code.
class ThresholdNotReached : public Error {
public:
    using Error::Error;
};

struct GlobalOptions {
    std::string format = "markdown";
    std::string unit = "table";
    std::string records;

    Format fmt() const { return *parse_format(format); }
    PaperUnit paper_unit() const { return *trends::parse_paper_unit(unit); }
};

std::vector<EfficiencyRecord> load_records(const GlobalOptions& g) {
    return g.records.empty() ? data::imagenet_records() : trends::load_records_file(g.records);
}

arch::TensorShape parse_shape(const std::string& text) {
    arch::TensorShape shape;
    std::int64_t* dims[] = {&shape.channels, &shape.height, &shape.width};
    std::size_t pos = 0;
    for (int i = 0; i < 3; ++i) {
        const auto sep = i < 2 ? text.find('x', pos) : text.size();
        if (sep == std::string::npos) throw ValidationError("input shape must look like 3x224x224");
        const char* first = text.data() + pos;
        const char* last = text.data() + sep;
        auto [ptr, ec] = std::from_chars(first, last, *dims[i]);
        if (ec != std::errc() || ptr != last || *dims[i] <= 0) {
            throw ValidationError("input shape must look like 3x224x224");
        }
        pos = sep + 1;
    }
    return shape;
}

std::string giga_text(double count) { return fixed_text(count * 1e-9, 2) + " G"; }

// ---- flops / shapes -------------------------------------------------------

struct FlopsOptions {
    std::string arch;
    std::string input;
    std::string unit = "mac";
    std::vector<std::string> kinds;
    bool include_bias = false;
};

arch::ArchitectureSpec load_valid_arch(const std::string& name, const std::string& input,
                                       arch::TensorShape& shape_out) {
    auto spec = arch::resolve_arch(name);
    arch::require_valid(spec);
    shape_out = input.empty() ? spec.default_input : parse_shape(input);
    return spec;
}

Document cmd_flops(const FlopsOptions& o) {
    arch::TensorShape input;
    const auto spec = load_valid_arch(o.arch, o.input, input);
    arch::CountingConvention conv;
    conv.unit = o.unit == "flop2" ? arch::CountUnit::flop2 : arch::CountUnit::mac;
    conv.include_bias = o.include_bias;
    if (!o.kinds.empty()) {
        conv.counted_kinds.clear();
        for (const auto& k : o.kinds) {
            const auto kind = arch::parse_layer_kind(k);
            if (!kind) throw ValidationError("unknown layer kind '" + k + "'");
            conv.counted_kinds.insert(*kind);
        }
    }
    const auto count = arch::count_flops(spec, input, conv);
    const auto shapes = arch::infer_shapes(spec, input);

    Document doc;
    const std::string unit(arch::to_string(conv.unit));
    doc.field("arch", spec.name);
    doc.field("input", input.str());
    doc.field("unit", unit);
    doc.field("total", Cell::num(static_cast<double>(count.total_per_image),
                                 std::to_string(count.total_per_image)));
    doc.field("gigaflops", Cell::num(count.giga(), giga_text(static_cast<double>(count.total_per_image)) +
                                                       " (" + unit + ")"));
    Table t;
    t.name = "layers";
    t.title = "Per-layer counts";
    t.columns = {"node", "kind", "output", "count"};
    for (const auto& layer : count.per_layer) {
        t.rows.push_back({layer.node, std::string(arch::to_string(layer.kind)), shapes.at(layer.node).str(),
                          Cell::num(static_cast<double>(layer.count), std::to_string(layer.count))});
    }
    doc.tables.push_back(std::move(t));
    return doc;
}

Document cmd_shapes(const FlopsOptions& o) {
    arch::TensorShape input;
    const auto spec = load_valid_arch(o.arch, o.input, input);
    const auto shapes = arch::infer_shapes(spec, input);
    Document doc;
    doc.field("arch", spec.name);
    doc.field("input", input.str());
    doc.field("output", shapes.at(spec.output).str());
    Table t;
    t.name = "nodes";
    t.columns = {"node", "kind", "inputs", "channels", "height", "width"};
    for (const auto& node : spec.nodes) {
        std::string inputs;
        for (const auto& in : node.inputs) inputs += (inputs.empty() ? "" : " ") + in;
        const auto& s = shapes.at(node.id);
        t.rows.push_back({node.id, std::string(arch::to_string(node.kind)), inputs, Cell::integer(s.channels),
                          Cell::integer(s.height), Cell::integer(s.width)});
    }
    doc.tables.push_back(std::move(t));
    return doc;
}

// ---- analyze --------------------------------------------------------------

struct AnalyzeOptions {
    std::string curve;
    bool percent = false;
    std::string arch;
    std::optional<double> gflops;
    double threshold = curves::kAlexNetTop5;
    double multiplier = curves::kBackwardMultiplier;
    double images = curves::kImagesPerEpoch;
    std::string name;
    std::string date;
    std::string task = "ImageNet";
    std::string label;
    std::string append;
};

curves::LearningCurve load_curve(const AnalyzeOptions& o) {
    curves::CsvOptions csv;
    csv.percent = o.percent;
    if (std::filesystem::exists(o.curve) || o.curve.find('/') != std::string::npos ||
        o.curve.find('.') != std::string::npos) {
        csv.model = std::filesystem::path(o.curve).stem().string();
        return curves::load_curve_file(o.curve, csv);
    }
    auto curve = data::builtin_curve(o.curve);
    if (o.percent) throw ValidationError("--percent applies only to curve files");
    return curve;
}

std::string default_label(double threshold) {
    if (threshold == curves::kAlexNetTop5) return "AlexNet-level top-5 (79.1%)";
    return "top-5 >= " + shortest(threshold * 100.0) + "%";
}

Document cmd_analyze(const AnalyzeOptions& o, const GlobalOptions& g) {
    if (o.arch.empty() == !o.gflops) throw ValidationError("give exactly one of --arch or --gflops");
    const auto threshold = curves::Threshold::make("top5", o.threshold);
    const auto curve = load_curve(o);

    double gflops = 0;
    std::string model = o.name;
    if (o.gflops) {
        if (!(*o.gflops > 0)) throw ValidationError("--gflops must be > 0");
        gflops = *o.gflops;
    } else {
        arch::TensorShape input;
        const auto spec = load_valid_arch(o.arch, "", input);
        gflops = static_cast<double>(arch::count_flops(spec, input).total_per_image) / 1e9;
        if (model.empty()) model = spec.name;
    }
    if (model.empty()) model = curve.model.empty() ? o.curve : curve.model;

    const auto epochs = curves::epochs_to_threshold(curve, threshold);
    if (!epochs) {
        double best = 0;
        for (const auto& p : curve.points) best = std::max(best, p.accuracy);
        throw ThresholdNotReached("threshold not reached: best accuracy " + shortest(best) + " < " +
                                  shortest(threshold.value));
    }
    const double raw =
        curves::compute_to_threshold(static_cast<double>(*epochs), gflops * 1e9, o.images, o.multiplier);

    Document doc;
    doc.field("model", model);
    doc.field("threshold", Cell::num(threshold.value));
    doc.field("epochs_to_threshold", Cell::integer(*epochs));
    doc.field("gigaflops_per_image", Cell::num(gflops));
    doc.field("training_flops", Cell::num(raw));
    doc.field("teraflop_s_days_stated", Cell::num(trends::to_paper_units(raw, PaperUnit::stated),
                                                  fixed_text(trends::to_paper_units(raw, PaperUnit::stated), 1)));
    doc.field("teraflop_s_days_table", Cell::num(trends::to_paper_units(raw, PaperUnit::table),
                                                 fixed_text(trends::to_paper_units(raw, PaperUnit::table), 1)));
    doc.field("compute", Cell::num(trends::to_paper_units(raw, g.paper_unit())));

    if (!o.append.empty()) {
        if (o.date.empty()) throw ValidationError("--append needs --date YYYY-MM-DD");
        std::vector<EfficiencyRecord> records;
        if (std::filesystem::exists(o.append)) records = trends::load_records_file(o.append);
        for (const auto& r : records) {
            if (r.name == model) throw ValidationError("records file already has '" + model + "'");
        }
        records.push_back(trends::make_record(model, Date::parse(o.date), o.task,
                                              o.label.empty() ? default_label(threshold.value) : o.label,
                                              static_cast<double>(*epochs), gflops, o.images, o.multiplier,
                                              "epochs measured from " + o.curve));
        trends::save_records_file(o.append, records);
        doc.field("appended_to", o.append);
    }
    return doc;
}

// ---- record comparisons ---------------------------------------------------

struct PairOptions {
    std::string baseline;
    std::string improved;
    std::optional<double> baseline_epochs;
};

EfficiencyRecord with_epochs(const EfficiencyRecord& r, double epochs) {
    if (!r.has_epoch_fields()) throw ValidationError("record '" + r.name + "' has no epoch fields");
    auto out = trends::make_record(r.name, r.date, r.task, r.threshold, epochs, *r.gigaflops_per_image,
                                   *r.images_per_epoch, r.backward_multiplier, r.notes);
    out.published = r.published;
    return out;
}

Document cmd_factor(const PairOptions& o, const GlobalOptions& g) {
    const auto records = load_records(g);
    auto baseline = trends::find_record(records, o.baseline);
    if (o.baseline_epochs) baseline = with_epochs(baseline, *o.baseline_epochs);
    const auto& improved = trends::find_record(records, o.improved);
    const auto f = trends::efficiency_factor(baseline, improved);
    Document doc;
    doc.field("baseline", f.baseline);
    doc.field("improved", f.improved);
    if (o.baseline_epochs) doc.field("baseline_epochs", Cell::num(*o.baseline_epochs));
    doc.field("factor", Cell::num(f.factor));
    doc.field("reported", trends::display_round(f.factor) + "x");
    doc.field("elapsed_months", Cell::num(f.elapsed.value, fixed_text(f.elapsed.value, 1)));
    return doc;
}

Document cmd_decompose(const PairOptions& o, const GlobalOptions& g) {
    const auto records = load_records(g);
    auto baseline = trends::find_record(records, o.baseline);
    if (o.baseline_epochs) baseline = with_epochs(baseline, *o.baseline_epochs);
    const auto& improved = trends::find_record(records, o.improved);
    const auto d = trends::decompose(baseline, improved);
    const auto f = trends::efficiency_factor(baseline, improved);
    Document doc;
    doc.field("baseline", baseline.name);
    doc.field("improved", improved.name);
    doc.field("epochs_factor", Cell::num(d.epochs_factor, trends::display_round(d.epochs_factor)));
    doc.field("flops_per_epoch_factor",
              Cell::num(d.flops_per_epoch_factor, trends::display_round(d.flops_per_epoch_factor)));
    doc.field("product", Cell::num(d.product(), trends::display_round(d.product())));
    doc.field("efficiency_factor", Cell::num(f.factor, trends::display_round(f.factor)));
    return doc;
}

struct DoublingOptions {
    std::optional<double> factor;
    std::string period;
    std::vector<std::string> names;
};

Document cmd_doubling(const DoublingOptions& o, const GlobalOptions& g) {
    double factor = 0;
    Duration period;
    if (o.factor) {
        if (!o.names.empty()) throw ValidationError("give either --factor or two record names");
        if (o.period.empty()) throw ValidationError("--factor needs --period");
        factor = *o.factor;
        period = Duration::parse(o.period);
    } else {
        if (o.names.size() != 2) throw ValidationError("give --factor with --period, or two record names");
        const auto records = load_records(g);
        const auto f = trends::efficiency_factor(trends::find_record(records, o.names[0]),
                                                 trends::find_record(records, o.names[1]));
        factor = f.factor;
        period = o.period.empty() ? f.elapsed : Duration::parse(o.period);
    }
    const auto d = trends::doubling_time(factor, period);
    Document doc;
    doc.field("factor", Cell::num(factor));
    doc.field("period", Cell::num(period.value, period.str(2)));
    doc.field("doubling_time", Cell::num(d.value, d.str(2)));
    doc.field("doubling_unit", std::string(to_string(d.unit)));
    return doc;
}

std::vector<EfficiencyRecord> task_records(const GlobalOptions& g, const std::string& task) {
    auto records = load_records(g);
    if (!task.empty()) {
        std::erase_if(records, [&](const EfficiencyRecord& r) { return r.task != task; });
    }
    return records;
}

Document cmd_frontier(const std::string& task, const GlobalOptions& g) {
    const auto records = task_records(g, task);
    const auto front = trends::frontier(records);
    Document doc;
    Table t;
    t.name = "records";
    t.columns = {"name", "date", compute_label(g.paper_unit()), "frontier"};
    auto sorted = records;
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.date < b.date; });
    for (const auto& r : sorted) {
        bool on = false;
        for (const auto& f : front.records) on = on || f.name == r.name;
        t.rows.push_back({r.name, r.date.iso(), Cell::num(trends::to_paper_units(r.total_training_flops, g.paper_unit())),
                          Cell::boolean(on)});
    }
    doc.field("frontier_size", Cell::integer(static_cast<long long>(front.records.size())));
    doc.tables.push_back(std::move(t));
    return doc;
}

Document cmd_trend(const std::string& task, const std::string& method, const GlobalOptions& g) {
    const auto records = task_records(g, task);
    if (records.size() < 2) throw ValidationError("need ≥ 2 records, found " + std::to_string(records.size()));
    const auto front = trends::frontier(records);
    const auto fit = trends::fit_trend(front, *trends::parse_fit_method(method));
    std::string members;
    for (const auto& r : front.records) members += (members.empty() ? "" : ", ") + r.name;
    const auto doubling = fit.doubling_time();
    Document doc;
    doc.field("records", Cell::integer(static_cast<long long>(records.size())));
    doc.field("frontier", members);
    doc.field("method", std::string(trends::to_string(fit.method)));
    doc.field("growth_rate_per_month", Cell::num(fit.growth_rate));
    doc.field("doubling_time", Cell::num(doubling.value, doubling.str(1)));
    doc.field("doubling_months", Cell::num(fit.doubling_months));
    doc.field("r_squared", Cell::num(fit.r_squared, fixed_text(fit.r_squared, 4)));
    doc.field("span_months", Cell::num(fit.span_months, fixed_text(fit.span_months, 1)));
    return doc;
}

struct EffectiveOptions {
    std::vector<double> factors;
    std::string period = "72mo";
    std::string hardware_doubling = "24mo";
    double total_growth = 300000.0;
    double algorithmic = 25.0;
};

Document cmd_effective(const EffectiveOptions& o) {
    Document doc;
    if (!o.factors.empty()) {
        doc.field("factors", Cell::integer(static_cast<long long>(o.factors.size())));
        doc.field("effective_compute", Cell::num(trends::effective_compute(o.factors)));
        return doc;
    }
    trends::EffectiveComputeModel m;
    m.period = Duration::parse(o.period);
    m.hardware_doubling_months = Duration::parse(o.hardware_doubling).in_months();
    m.spend_parallelization_factor = o.total_growth / m.hardware_factor();
    m.algorithmic_factor = o.algorithmic;
    doc.field("period_months", Cell::num(m.period.in_months()));
    doc.field("hardware_factor", Cell::num(m.hardware_factor()));
    doc.field("spend_parallelization_factor", Cell::num(m.spend_parallelization_factor));
    doc.field("algorithmic_factor", Cell::num(m.algorithmic_factor));
    doc.field("effective_compute", Cell::num(m.total()));
    return doc;
}

Document cmd_report(const std::string& which, const std::string& comparisons, const GlobalOptions& g) {
    ReportSpec spec;
    spec.which = *parse_report_kind(which);
    spec.format = g.fmt();
    spec.unit = g.paper_unit();
    auto inputs = shipped_inputs();
    if (!g.records.empty()) inputs.records = trends::load_records_file(g.records);
    if (!comparisons.empty()) inputs.comparisons = trends::load_comparisons_file(comparisons);
    return build_report(spec, inputs);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Training-efficiency measurement toolkit", "algoeff"};
    app.fallthrough();
    app.require_subcommand(1);

    GlobalOptions g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"markdown", "csv", "json"}));
    app.add_option("--unit", g.unit, "Compute unit for reports: raw FLOPs, stated (8.64e16) or table (1e15)")
        ->check(CLI::IsMember({"raw", "stated", "table"}));
    app.add_option("--records", g.records, "Records file (JSON array); defaults to the shipped ImageNet records");

    FlopsOptions fo;
    auto* flops = app.add_subcommand("flops", "Per-image compute of an architecture");
    flops->add_option("--arch", fo.arch, "Built-in name or architecture JSON file")->required();
    flops->add_option("--input", fo.input, "Input shape CxHxW (default: the architecture's)");
    flops->add_option("--unit", fo.unit, "Counting unit")->check(CLI::IsMember({"mac", "flop2"}));
    flops->add_option("--count", fo.kinds, "Layer kinds to count (default conv2d linear)")->delimiter(',');
    flops->add_flag("--include-bias", fo.include_bias, "Count one unit per output element for biases");

    FlopsOptions so;
    auto* shapes = app.add_subcommand("shapes", "Inferred output shape of every node");
    shapes->add_option("--arch", so.arch, "Built-in name or architecture JSON file")->required();
    shapes->add_option("--input", so.input, "Input shape CxHxW");

    AnalyzeOptions ao;
    auto* analyze = app.add_subcommand("analyze", "Epochs and compute for a learning curve to reach a threshold");
    analyze->add_option("--curve", ao.curve, "Curve CSV file, or a built-in curve name")->required();
    analyze->add_flag("--percent", ao.percent, "Accuracies in the CSV are percentages");
    analyze->add_option("--arch", ao.arch, "Architecture supplying FLOPs per image");
    analyze->add_option("--gflops", ao.gflops, "FLOPs per image, in billions");
    analyze->add_option("--threshold", ao.threshold, "Top-5 accuracy threshold in (0,1)");
    analyze->add_option("--multiplier", ao.multiplier, "Backward-pass multiplier");
    analyze->add_option("--images", ao.images, "Images per epoch");
    analyze->add_option("--name", ao.name, "Record name");
    analyze->add_option("--date", ao.date, "Record date YYYY-MM-DD (for --append)");
    analyze->add_option("--task", ao.task, "Record task");
    analyze->add_option("--label", ao.label, "Record threshold label");
    analyze->add_option("--append", ao.append, "Append the result as a record to this records file");

    PairOptions fpo;
    auto* factor = app.add_subcommand("factor", "Efficiency factor between two records");
    factor->add_option("baseline", fpo.baseline)->required();
    factor->add_option("improved", fpo.improved)->required();
    factor->add_option("--baseline-epochs", fpo.baseline_epochs, "Override the baseline's epoch count");

    PairOptions dpo;
    auto* decompose = app.add_subcommand("decompose", "Split a factor into epochs and FLOPs-per-epoch parts");
    decompose->add_option("baseline", dpo.baseline)->required();
    decompose->add_option("improved", dpo.improved)->required();
    decompose->add_option("--baseline-epochs", dpo.baseline_epochs, "Override the baseline's epoch count");

    DoublingOptions dbo;
    auto* doubling = app.add_subcommand("doubling", "Doubling time of an efficiency factor");
    doubling->add_option("--factor", dbo.factor, "Efficiency factor > 1");
    doubling->add_option("--period", dbo.period, "Elapsed time, e.g. 36mo, 3y, 60d");
    doubling->add_option("records", dbo.names, "Baseline and improved record names");

    std::string frontier_task;
    auto* frontier = app.add_subcommand("frontier", "Records that set a new compute minimum");
    frontier->add_option("--task", frontier_task, "Only records for this task");

    std::string trend_task;
    std::string trend_method = "endpoints";
    auto* trend = app.add_subcommand("trend", "Exponential trend over the efficiency frontier");
    trend->add_option("--task", trend_task, "Only records for this task");
    trend->add_option("--method", trend_method, "Fit method")->check(CLI::IsMember({"endpoints", "regression"}));

    EffectiveOptions eo;
    auto* effective = app.add_subcommand("effective", "Effective-compute growth");
    effective->add_option("--factor", eo.factors, "Growth factors to multiply (repeatable)");
    effective->add_option("--period", eo.period, "Model period");
    effective->add_option("--hardware-doubling", eo.hardware_doubling, "Hardware doubling time");
    effective->add_option("--total-growth", eo.total_growth, "Growth of the largest training runs");
    effective->add_option("--algorithmic", eo.algorithmic, "Algorithmic efficiency factor");

    std::string which;
    std::string comparisons;
    auto* report = app.add_subcommand("report", "Regenerate a table or figure data series");
    report->add_option("which", which)
        ->required()
        ->check(CLI::IsMember({"table1", "table2", "table3", "figure3_points", "figure4_points", "figure5_points"}));
    report->add_option("--comparisons", comparisons, "Cross-domain comparisons file");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        Document doc;
        if (*flops) doc = cmd_flops(fo);
        else if (*shapes) doc = cmd_shapes(so);
        else if (*analyze) doc = cmd_analyze(ao, g);
        else if (*factor) doc = cmd_factor(fpo, g);
        else if (*decompose) doc = cmd_decompose(dpo, g);
        else if (*doubling) doc = cmd_doubling(dbo, g);
        else if (*frontier) doc = cmd_frontier(frontier_task, g);
        else if (*trend) doc = cmd_trend(trend_task, trend_method, g);
        else if (*effective) doc = cmd_effective(eo);
        else if (*report) doc = cmd_report(which, comparisons, g);
        render(doc, g.fmt(), out);
        return kExitOk;
    } catch (const ThresholdNotReached& e) {
        err << "error: " << e.what() << '\n';
        return kExitNotReached;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
}

} // namespace algoeff::cli
