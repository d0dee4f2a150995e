#pragma once

#include "algoeff/comparisons.hpp"
#include "algoeff/curves.hpp"
#include "algoeff/trends.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace algoeff::data {

// Contents of a shipped data file compiled into the library, addressed by its
// path under data/ (e.g. "curves/alexnet.csv"). Throws NotFoundError.
std::string_view embedded_file(std::string_view relative_path);
std::vector<std::string> embedded_files();

// ImageNet training-efficiency records (one per published row).
std::vector<trends::EfficiencyRecord> imagenet_records();
// Cross-domain and inference comparisons.
std::vector<trends::Comparison> cross_domain_comparisons();

// Illustrative learning curves keyed by short name ("alexnet", "googlenet", ...).
std::vector<std::string> curve_names();
curves::LearningCurve builtin_curve(std::string_view name);
// Record name whose per-image FLOPs drive the named curve.
std::string curve_record_name(std::string_view name);

} // namespace algoeff::data
