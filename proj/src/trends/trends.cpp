#include "algoeff/trends.hpp"

#include "algoeff/curves.hpp"
#include "algoeff/error.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace algoeff::trends {

namespace {

bool positive(double v) { return std::isfinite(v) && v > 0.0; }

std::string lowered(std::string_view text) {
    std::string out;
    for (char c : text) {
        if (c == '-' || c == '_' || c == ' ' || c == '.') continue;
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
}

double derived_total(const EfficiencyRecord& r) {
    return curves::compute_to_threshold(*r.epochs, *r.flops_per_image(), *r.images_per_epoch, r.backward_multiplier);
}

void require_comparable(const EfficiencyRecord& a, const EfficiencyRecord& b) {
    if (a.task != b.task) {
        throw ValidationError("records '" + a.name + "' and '" + b.name + "' measure different tasks ('" + a.task +
                              "' vs '" + b.task + "')");
    }
    if (a.threshold != b.threshold) {
        throw ValidationError("records '" + a.name + "' and '" + b.name + "' use different thresholds ('" +
                              a.threshold + "' vs '" + b.threshold + "')");
    }
}

} // namespace

std::optional<double> EfficiencyRecord::flops_per_image() const {
    if (!gigaflops_per_image) return std::nullopt;
    return *gigaflops_per_image * 1e9;
}

EfficiencyRecord make_record(std::string name, Date date, std::string task, std::string threshold, double epochs,
                             double gigaflops_per_image, double images_per_epoch, double backward_multiplier,
                             std::string notes) {
    EfficiencyRecord r;
    r.name = std::move(name);
    r.date = date;
    r.task = std::move(task);
    r.threshold = std::move(threshold);
    r.epochs = epochs;
    r.gigaflops_per_image = gigaflops_per_image;
    r.images_per_epoch = images_per_epoch;
    r.backward_multiplier = backward_multiplier;
    r.notes = std::move(notes);
    r.total_training_flops = derived_total(r);
    validate_record(r);
    return r;
}

void validate_record(const EfficiencyRecord& r) {
    const std::string who = "record '" + r.name + "': ";
    if (r.name.empty()) throw ValidationError("record has an empty name");
    if (r.task.empty()) throw ValidationError(who + "task is empty");
    if (!positive(r.total_training_flops)) throw ValidationError(who + "total_training_flops must be > 0");
    const int present = (r.epochs ? 1 : 0) + (r.gigaflops_per_image ? 1 : 0) + (r.images_per_epoch ? 1 : 0);
    if (present != 0 && present != 3) {
        throw ValidationError(who + "epochs, gigaflops_per_image and images_per_epoch must be given together");
    }
    if (present == 3) {
        if (!positive(*r.epochs) || !positive(*r.gigaflops_per_image) || !positive(*r.images_per_epoch)) {
            throw ValidationError(who + "epoch fields must be > 0");
        }
        if (!positive(r.backward_multiplier)) throw ValidationError(who + "backward_multiplier must be > 0");
        const double expected = derived_total(r);
        if (std::abs(expected - r.total_training_flops) > 1e-9 * expected) {
            throw ValidationError(who + "total_training_flops does not match its epoch fields");
        }
    }
}

EfficiencyFactor efficiency_factor(const EfficiencyRecord& baseline, const EfficiencyRecord& improved) {
    require_comparable(baseline, improved);
    EfficiencyFactor f;
    f.baseline = baseline.name;
    f.improved = improved.name;
    f.factor = baseline.total_training_flops / improved.total_training_flops;
    f.elapsed = Duration::months(months_between(baseline.date, improved.date));
    return f;
}

Decomposition decompose(const EfficiencyRecord& baseline, const EfficiencyRecord& improved) {
    require_comparable(baseline, improved);
    for (const auto* r : {&baseline, &improved}) {
        if (!r->has_epoch_fields()) {
            throw ValidationError("record '" + r->name + "' has no epoch fields to decompose");
        }
    }
    if (*baseline.images_per_epoch != *improved.images_per_epoch) {
        throw ValidationError("records '" + baseline.name + "' and '" + improved.name +
                              "' use different images_per_epoch");
    }
    if (baseline.backward_multiplier != improved.backward_multiplier) {
        throw ValidationError("records '" + baseline.name + "' and '" + improved.name +
                              "' use different backward multipliers");
    }
    return {*baseline.epochs / *improved.epochs, *baseline.gigaflops_per_image / *improved.gigaflops_per_image};
}

double partial_run_factor(double baseline_total, double improved_total, double fraction_to_match) {
    if (!positive(baseline_total) || !positive(improved_total)) {
        throw ValidationError("compute totals must be > 0");
    }
    if (!(fraction_to_match > 0.0 && fraction_to_match <= 1.0)) {
        throw ValidationError("fraction_to_match must be in (0,1]");
    }
    return baseline_total / (fraction_to_match * improved_total);
}

Duration doubling_time(double factor, Duration elapsed) {
    if (!(factor > 1.0) || !std::isfinite(factor)) {
        throw ValidationError("doubling time is undefined for a factor <= 1");
    }
    if (!positive(elapsed.value)) throw ValidationError("elapsed time must be > 0");
    return {elapsed.value / std::log2(factor), elapsed.unit};
}

Frontier frontier(std::vector<EfficiencyRecord> records) {
    for (std::size_t i = 1; i < records.size(); ++i) require_comparable(records.front(), records[i]);
    std::stable_sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
        if (a.date != b.date) return a.date < b.date;
        return a.total_training_flops < b.total_training_flops;
    });
    Frontier out;
    for (auto& r : records) {
        if (out.records.empty() || r.total_training_flops < out.records.back().total_training_flops) {
            out.records.push_back(std::move(r));
        }
    }
    return out;
}

std::string_view to_string(FitMethod method) {
    return method == FitMethod::regression ? "regression" : "endpoints";
}

std::optional<FitMethod> parse_fit_method(std::string_view text) {
    if (text == "regression") return FitMethod::regression;
    if (text == "endpoints") return FitMethod::endpoints;
    return std::nullopt;
}

Duration TrendFit::doubling_time() const {
    if (span_months < 12.0) return Duration::months(doubling_months).as(TimeUnit::days);
    return Duration::months(doubling_months);
}

TrendFit fit_trend(const Frontier& frontier, FitMethod method) {
    const auto& rs = frontier.records;
    if (rs.size() < 2) throw ValidationError("need ≥ 2 records to fit a trend");
    TrendFit fit;
    fit.method = method;
    fit.points = rs.size();
    fit.span_months = months_between(rs.front().date, rs.back().date);

    if (method == FitMethod::endpoints) {
        if (!(fit.span_months > 0.0)) throw ValidationError("records span zero elapsed time");
        const double factor = rs.front().total_training_flops / rs.back().total_training_flops;
        fit.doubling_months = doubling_time(factor, Duration::months(fit.span_months)).value;
        fit.growth_rate = std::exp2(-1.0 / fit.doubling_months);
        fit.r_squared = 1.0;
        return fit;
    }

    const double n = static_cast<double>(rs.size());
    double mean_x = 0;
    double mean_y = 0;
    std::vector<double> xs;
    std::vector<double> ys;
    for (const auto& r : rs) {
        xs.push_back(months_between(rs.front().date, r.date));
        ys.push_back(std::log2(r.total_training_flops));
        mean_x += xs.back();
        mean_y += ys.back();
    }
    mean_x /= n;
    mean_y /= n;
    double sxx = 0;
    double sxy = 0;
    double syy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mean_x;
        const double dy = ys[i] - mean_y;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (!(sxx > 0.0)) throw ValidationError("records span zero elapsed time");
    const double slope = sxy / sxx;
    if (!(slope < 0.0)) throw ValidationError("compute does not decline over the fitted records");
    const double intercept = mean_y - slope * mean_x;
    double ss_res = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double e = ys[i] - (intercept + slope * xs[i]);
        ss_res += e * e;
    }
    fit.doubling_months = -1.0 / slope;
    fit.growth_rate = std::exp2(slope);
    fit.r_squared = syy > 0.0 ? std::clamp(1.0 - ss_res / syy, 0.0, 1.0) : 1.0;
    return fit;
}

double moore_factor(Duration period, Duration doubling) {
    if (!positive(doubling.value)) throw ValidationError("doubling period must be > 0");
    return std::exp2(period.in_months() / doubling.in_months());
}

double effective_compute(std::span<const double> factors) {
    double product = 1.0;
    for (double f : factors) {
        if (!positive(f)) throw ValidationError("effective compute factors must be > 0");
        product *= f;
    }
    return product;
}

double EffectiveComputeModel::hardware_factor() const {
    return moore_factor(period, Duration::months(hardware_doubling_months));
}

double EffectiveComputeModel::total() const {
    const double factors[] = {hardware_factor(), spend_parallelization_factor, algorithmic_factor};
    return effective_compute(factors);
}

double EffectiveComputeModel::hardware_at(double months) const {
    return std::exp2(months / hardware_doubling_months);
}

double EffectiveComputeModel::spend_at(double months) const {
    return std::pow(spend_parallelization_factor, months / period.in_months());
}

double EffectiveComputeModel::algorithmic_at(double months) const {
    return std::pow(algorithmic_factor, months / period.in_months());
}

std::string_view to_string(PaperUnit unit) {
    switch (unit) {
    case PaperUnit::raw: return "raw";
    case PaperUnit::stated: return "stated";
    case PaperUnit::table: return "table";
    }
    return "raw";
}

std::optional<PaperUnit> parse_paper_unit(std::string_view text) {
    if (text == "raw") return PaperUnit::raw;
    if (text == "stated") return PaperUnit::stated;
    if (text == "table") return PaperUnit::table;
    return std::nullopt;
}

double to_paper_units(double raw_flops, PaperUnit unit) {
    switch (unit) {
    case PaperUnit::raw: return raw_flops;
    case PaperUnit::stated: return raw_flops / kTeraflopSecondDay;
    case PaperUnit::table: return raw_flops / kTableUnit;
    }
    return raw_flops;
}

namespace {

// Rounds |value| half-to-even at the decimal digit worth 10^position and
// renders it without an exponent.
std::string round_at(double value, int position) {
    // Twelve significant digits drop binary noise such as 0.38499999999.
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.11e", std::fabs(value));
    const std::string_view text(buf);
    const auto e = text.find('e');
    std::string digits;
    for (char c : text.substr(0, e)) {
        if (c != '.') digits.push_back(c);
    }
    const int exponent = std::atoi(buf + e + 1);

    int kept = exponent - position + 1;
    if (kept <= 0) {
        digits.insert(0, static_cast<std::size_t>(1 - kept), '0');
        kept = 1;
    }
    if (static_cast<std::size_t>(kept) > digits.size()) digits.append(kept - digits.size(), '0');

    std::string head = digits.substr(0, static_cast<std::size_t>(kept));
    const std::string rest = digits.substr(static_cast<std::size_t>(kept));
    if (!rest.empty()) {
        const std::string half = "5" + std::string(rest.size() - 1, '0');
        const int cmp = rest.compare(half);
        const bool odd = (head.back() - '0') % 2 == 1;
        if (cmp > 0 || (cmp == 0 && odd)) {
            int i = static_cast<int>(head.size()) - 1;
            while (i >= 0 && head[static_cast<std::size_t>(i)] == '9') head[static_cast<std::size_t>(i--)] = '0';
            if (i < 0) {
                head.insert(0, "1");
            } else {
                ++head[static_cast<std::size_t>(i)];
            }
        }
    }
    const auto first = head.find_first_not_of('0');
    head = first == std::string::npos ? "0" : head.substr(first);

    if (position >= 0) {
        if (head != "0") head.append(static_cast<std::size_t>(position), '0');
        return head;
    }
    const auto decimals = static_cast<std::size_t>(-position);
    if (head.size() <= decimals) head.insert(0, decimals + 1 - head.size(), '0');
    head.insert(head.size() - decimals, ".");
    return head;
}

std::string signed_result(double value, std::string magnitude) {
    const bool zero = magnitude.find_first_not_of("0.") == std::string::npos;
    return value < 0 && !zero ? "-" + magnitude : magnitude;
}

} // namespace

std::string display_round(double value, int significant) {
    if (!std::isfinite(value)) return std::isnan(value) ? "nan" : (value > 0 ? "inf" : "-inf");
    if (value == 0.0) return "0";
    if (significant < 1) throw ValidationError("significant figures must be >= 1");
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.11e", std::fabs(value));
    const int exponent = std::atoi(std::strchr(buf, 'e') + 1);
    return signed_result(value, round_at(value, exponent - significant + 1));
}

std::string round_decimals(double value, int decimals) {
    if (!std::isfinite(value)) return std::isnan(value) ? "nan" : (value > 0 ? "inf" : "-inf");
    if (value == 0.0) return decimals > 0 ? "0." + std::string(static_cast<std::size_t>(decimals), '0') : "0";
    return signed_result(value, round_at(value, -decimals));
}

const EfficiencyRecord& find_record(const std::vector<EfficiencyRecord>& records, std::string_view name) {
    for (const auto& r : records) {
        if (r.name == name) return r;
    }
    const auto key = lowered(name);
    for (const auto& r : records) {
        if (lowered(r.name) == key) return r;
    }
    std::string names;
    for (const auto& r : records) names += (names.empty() ? "" : ", ") + r.name;
    throw NotFoundError("no record named '" + std::string(name) + "' (available: " + names + ")");
}

} // namespace algoeff::trends
