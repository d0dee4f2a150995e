#include "algoeff/curves.hpp"

#include "algoeff/error.hpp"

#include <algorithm>
#include <cmath>

namespace algoeff::curves {

void validate_curve(const LearningCurve& curve) {
    for (std::size_t i = 0; i < curve.points.size(); ++i) {
        const auto& p = curve.points[i];
        const std::string where = "curve '" + curve.model + "' point " + std::to_string(i + 1);
        if (p.epoch < 1) throw ValidationError(where + ": epoch must be >= 1");
        if (!(p.accuracy >= 0.0 && p.accuracy <= 1.0)) throw ValidationError(where + ": accuracy outside [0,1]");
        if (p.cumulative_flops && !(*p.cumulative_flops >= 0.0 && std::isfinite(*p.cumulative_flops))) {
            throw ValidationError(where + ": cumulative_flops must be a non-negative number");
        }
        if (i == 0) continue;
        const auto& prev = curve.points[i - 1];
        if (p.epoch <= prev.epoch) throw ValidationError(where + ": epochs must be strictly increasing");
        if (p.cumulative_flops && prev.cumulative_flops && *p.cumulative_flops < *prev.cumulative_flops) {
            throw ValidationError(where + ": cumulative_flops must be non-decreasing");
        }
    }
}

Threshold Threshold::make(std::string metric, double value) {
    if (!(value > 0.0 && value < 1.0)) {
        throw ValidationError("threshold " + std::to_string(value) + " must lie strictly between 0 and 1");
    }
    return Threshold{std::move(metric), value};
}

std::string_view to_string(Relation relation) {
    switch (relation) {
    case Relation::a_dominates: return "a_dominates";
    case Relation::b_dominates: return "b_dominates";
    case Relation::incomparable: return "incomparable";
    case Relation::equivalent: return "equivalent";
    }
    return "unknown";
}

std::optional<std::int64_t> epochs_to_threshold(const LearningCurve& curve, const Threshold& threshold) {
    if (curve.metric != threshold.metric) {
        throw ValidationError("curve metric '" + curve.metric + "' does not match threshold metric '" +
                              threshold.metric + "'");
    }
    for (const auto& p : curve.points) {
        if (p.accuracy >= threshold.value) return p.epoch;
    }
    return std::nullopt;
}

namespace {

void require_positive(double value, const char* name) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw ValidationError(std::string(name) + " must be a positive number");
    }
}

} // namespace

double compute_to_threshold(double epochs, double flops_per_image, double images_per_epoch,
                            double backward_multiplier) {
    require_positive(epochs, "epochs");
    require_positive(flops_per_image, "flops_per_image");
    require_positive(images_per_epoch, "images_per_epoch");
    require_positive(backward_multiplier, "backward_multiplier");
    return backward_multiplier * epochs * flops_per_image * images_per_epoch;
}

ComputeCurve to_compute_curve(const LearningCurve& curve, double flops_per_image, double images_per_epoch,
                              double backward_multiplier) {
    if (curve.points.empty()) throw ValidationError("curve '" + curve.model + "' has no points");
    const auto with_recorded = std::count_if(curve.points.begin(), curve.points.end(),
                                             [](const CurvePoint& p) { return p.cumulative_flops.has_value(); });
    if (with_recorded != 0 && static_cast<std::size_t>(with_recorded) != curve.points.size()) {
        throw ValidationError("curve '" + curve.model + "' records cumulative_flops for only some points");
    }

    ComputeCurve out;
    out.model = curve.model;
    out.points.reserve(curve.points.size());
    for (const auto& p : curve.points) {
        const double flops = p.cumulative_flops
                                 ? *p.cumulative_flops
                                 : compute_to_threshold(static_cast<double>(p.epoch), flops_per_image,
                                                        images_per_epoch, backward_multiplier);
        if (!(flops > 0.0)) throw ValidationError("curve '" + curve.model + "': compute must be positive");
        if (!out.points.empty() && !(flops > out.points.back().flops)) {
            throw ValidationError("curve '" + curve.model + "': compute must be strictly increasing");
        }
        out.points.push_back({flops, p.accuracy});
    }
    return out;
}

double accuracy_at(const ComputeCurve& curve, double flops) {
    const auto& pts = curve.points;
    if (pts.empty()) throw ValidationError("compute curve '" + curve.model + "' is empty");
    if (flops < pts.front().flops || flops > pts.back().flops) {
        throw ValidationError("budget outside the compute range of '" + curve.model + "'");
    }
    auto hi = std::lower_bound(pts.begin(), pts.end(), flops,
                               [](const ComputePoint& p, double f) { return p.flops < f; });
    if (hi->flops == flops) return hi->accuracy;
    auto lo = std::prev(hi);
    const double t = (std::log10(flops) - std::log10(lo->flops)) / (std::log10(hi->flops) - std::log10(lo->flops));
    return lo->accuracy + t * (hi->accuracy - lo->accuracy);
}

// Both curves are piecewise linear in log-compute, so their difference is too;
// its sign over the overlap is decided by its values at the union of knots.
DominanceResult dominance(const ComputeCurve& a, const ComputeCurve& b) {
    if (a.points.empty() || b.points.empty()) throw ValidationError("dominance needs non-empty curves");
    const double lo = std::max(a.points.front().flops, b.points.front().flops);
    const double hi = std::min(a.points.back().flops, b.points.back().flops);
    DominanceResult result;
    if (lo > hi) return result;

    std::vector<double> knots{lo, hi};
    for (const auto* c : {&a, &b}) {
        for (const auto& p : c->points) {
            if (p.flops > lo && p.flops < hi) knots.push_back(p.flops);
        }
    }
    std::sort(knots.begin(), knots.end());
    knots.erase(std::unique(knots.begin(), knots.end()), knots.end());

    double best_a = 0.0;
    double best_b = 0.0;
    for (double x : knots) {
        const double d = accuracy_at(a, x) - accuracy_at(b, x);
        if (d > best_a) {
            best_a = d;
            result.a_leads_at = x;
        }
        if (d < best_b) {
            best_b = d;
            result.b_leads_at = x;
        }
    }
    const bool a_ahead = result.a_leads_at.has_value();
    const bool b_ahead = result.b_leads_at.has_value();
    if (a_ahead && b_ahead) {
        result.relation = Relation::incomparable;
    } else {
        result.relation = a_ahead ? Relation::a_dominates : b_ahead ? Relation::b_dominates : Relation::equivalent;
        result.a_leads_at.reset();
        result.b_leads_at.reset();
    }
    return result;
}

} // namespace algoeff::curves
