#include "algoeff/comparisons.hpp"

#include "algoeff/error.hpp"
#include "common/strict_json.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace algoeff::trends {

namespace {

using detail::json;
using detail::StrictObject;

std::string fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

// Half of one printed unit, in months.
double half_unit_months(TimeUnit unit) {
    return Duration{0.5, unit}.in_months();
}

Duration parse_duration_field(const StrictObject& o, const char* key) {
    try {
        return Duration::parse(o.string(key));
    } catch (const ParseError& e) {
        throw ParseError(o.path(key) + ": " + e.what());
    }
}

Comparison parse_comparison(const json& value, const std::string& path) {
    const StrictObject o(value, path);
    o.allow_only({"id", "original", "improved", "task", "regime", "method", "baseline_total", "improved_total",
                  "ratio", "fraction_to_match", "baseline_record", "improved_record", "period", "printed", "notes"});
    Comparison c;
    c.id = o.string("id");
    c.original = o.string("original");
    c.improved = o.string("improved");
    c.task = o.string("task");
    if (o.has("regime")) c.regime = o.string("regime");
    if (c.regime != "training" && c.regime != "inference") {
        throw ParseError(o.path("regime") + ": expected 'training' or 'inference'");
    }
    const auto method = o.string("method");
    if (method == "partial_run") {
        c.source = FactorSource::partial_run;
        c.baseline_total = o.number("baseline_total");
        c.improved_total = o.number("improved_total");
    } else if (method == "stated_ratio") {
        c.source = FactorSource::stated_ratio;
        c.ratio = o.number("ratio");
    } else if (method == "records") {
        c.source = FactorSource::records;
        c.baseline_record = o.string("baseline_record");
        c.improved_record = o.string("improved_record");
    } else {
        throw ParseError(o.path("method") + ": expected partial_run, stated_ratio or records");
    }
    if (o.has("fraction_to_match")) c.fraction_to_match = o.number("fraction_to_match");
    if (o.has("period")) c.period = parse_duration_field(o, "period");
    if (!c.period && c.source != FactorSource::records) throw ParseError(path + ": missing field 'period'");
    if (o.has("printed")) {
        const StrictObject p(o.raw("printed"), o.path("printed"));
        p.allow_only({"factor", "period", "doubling"});
        c.printed = PrintedComparison{p.number("factor"), parse_duration_field(p, "period"),
                                      parse_duration_field(p, "doubling")};
    }
    if (o.has("notes")) c.notes = o.string("notes");
    return c;
}

} // namespace

std::string_view to_string(FactorSource source) {
    switch (source) {
    case FactorSource::partial_run: return "partial_run";
    case FactorSource::stated_ratio: return "stated_ratio";
    case FactorSource::records: return "records";
    }
    return "unknown";
}

ComparisonResult evaluate(const Comparison& c, const std::vector<EfficiencyRecord>& records) {
    ComparisonResult out;
    switch (c.source) {
    case FactorSource::partial_run:
        out.factor = partial_run_factor(c.baseline_total, c.improved_total, c.fraction_to_match);
        break;
    case FactorSource::stated_ratio:
        out.factor = partial_run_factor(c.ratio, 1.0, c.fraction_to_match);
        break;
    case FactorSource::records: {
        const auto f = efficiency_factor(find_record(records, c.baseline_record), find_record(records, c.improved_record));
        out.factor = f.factor;
        out.period = c.period.value_or(f.elapsed);
        break;
    }
    }
    if (c.source != FactorSource::records) out.period = *c.period;
    out.doubling = doubling_time(out.factor, out.period);
    if (!c.printed) return out;

    const auto& printed = *c.printed;
    out.doubling = out.doubling.as(printed.doubling.unit);
    if (std::abs(out.factor - printed.factor) > 0.5) {
        out.warnings.push_back("computed factor " + fixed(out.factor, 2) + "x disagrees with printed " +
                               fixed(printed.factor, 0) + "x");
    }
    if (std::abs(out.period.in_months() - printed.period.in_months()) > half_unit_months(printed.period.unit)) {
        out.warnings.push_back("period " + out.period.as(printed.period.unit).str(1) + " disagrees with printed " +
                               printed.period.str(0));
    }
    if (std::abs(out.doubling.value - printed.doubling.value) > 0.5) {
        out.warnings.push_back("doubling time " + out.doubling.str(2) + " disagrees with printed " +
                               printed.doubling.str(0));
    }
    return out;
}

std::vector<Comparison> parse_comparisons(std::string_view json_text) {
    const json doc = detail::parse_json_text(json_text);
    if (!doc.is_array()) throw ParseError("$: comparisons file must be a JSON array");
    std::vector<Comparison> out;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        out.push_back(parse_comparison(doc[i], "$[" + std::to_string(i) + "]"));
    }
    return out;
}

std::vector<Comparison> load_comparisons_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw NotFoundError("comparisons file not found: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_comparisons(buffer.str());
    } catch (const ParseError& e) {
        throw e.in_file(path);
    }
}

} // namespace algoeff::trends
