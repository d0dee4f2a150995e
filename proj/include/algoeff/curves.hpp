#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace algoeff::curves {

// ImageNet training-set size used for one epoch.
inline constexpr double kImagesPerEpoch = 1.28e6;
// Forward plus backward pass relative to the forward-only per-image count.
inline constexpr double kBackwardMultiplier = 3.0;
// AlexNet-level top-5 accuracy.
inline constexpr double kAlexNetTop5 = 0.791;

struct CurvePoint {
    std::int64_t epoch = 1;
    double accuracy = 0.0;
    std::optional<double> cumulative_flops;

    friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

struct LearningCurve {
    std::string model;
    std::string metric = "top5";
    std::string dataset = "ImageNet";
    std::vector<CurvePoint> points;

    friend bool operator==(const LearningCurve&, const LearningCurve&) = default;
};

// Throws ValidationError unless epochs are strictly increasing and positive,
// accuracies lie in [0,1], and cumulative_flops (if any) is non-negative and
// non-decreasing.
void validate_curve(const LearningCurve& curve);

struct Threshold {
    std::string metric = "top5";
    double value = kAlexNetTop5;

    // Throws ValidationError unless value is in (0,1).
    static Threshold make(std::string metric, double value);
};

struct ComputePoint {
    double flops = 0.0;
    double accuracy = 0.0;

    friend bool operator==(const ComputePoint&, const ComputePoint&) = default;
};

struct ComputeCurve {
    std::string model;
    std::vector<ComputePoint> points;  // flops strictly increasing
};

enum class Relation { a_dominates, b_dominates, incomparable, equivalent };

std::string_view to_string(Relation relation);

struct DominanceResult {
    Relation relation = Relation::incomparable;
    // Budgets where each curve is strictly ahead; set for incomparable curves.
    std::optional<double> a_leads_at;
    std::optional<double> b_leads_at;
};

struct CsvOptions {
    bool percent = false;  // accuracies given as 0..100
    std::string model;
    std::string dataset = "ImageNet";
};

// Header must be exactly `epoch,top5_accuracy` or
// `epoch,top5_accuracy,cumulative_flops`; `#` lines and blank lines are skipped.
// Errors carry the 1-based line number of the offending row.
LearningCurve parse_curve(std::string_view text, const CsvOptions& options = {});
LearningCurve load_curve_file(const std::string& path, const CsvOptions& options = {});

// First recorded epoch whose accuracy >= threshold; no interpolation.
std::optional<std::int64_t> epochs_to_threshold(const LearningCurve& curve, const Threshold& threshold);

// backward_multiplier * epochs * flops_per_image * images_per_epoch.
double compute_to_threshold(double epochs, double flops_per_image, double images_per_epoch = kImagesPerEpoch,
                            double backward_multiplier = kBackwardMultiplier);

// Converts epochs to cumulative training compute; recorded cumulative_flops
// take precedence when the curve carries them.
ComputeCurve to_compute_curve(const LearningCurve& curve, double flops_per_image,
                              double images_per_epoch = kImagesPerEpoch,
                              double backward_multiplier = kBackwardMultiplier);

// Accuracy at `flops` by linear interpolation in (log10 compute, accuracy).
// Requires flops within the curve's compute range.
double accuracy_at(const ComputeCurve& curve, double flops);

// Compares the curves on the overlap of their compute ranges.
DominanceResult dominance(const ComputeCurve& a, const ComputeCurve& b);

} // namespace algoeff::curves
