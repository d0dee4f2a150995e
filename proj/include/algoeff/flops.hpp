#pragma once

#include "algoeff/arch.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace algoeff::arch {

enum class CountUnit {
    mac,    // one multiply-accumulate
    flop2,  // two floating-point operations per multiply-accumulate
};

std::string_view to_string(CountUnit unit);

struct CountingConvention {
    CountUnit unit = CountUnit::mac;
    std::set<LayerKind> counted_kinds{LayerKind::conv2d, LayerKind::linear};
    bool include_bias = false;
};

struct LayerCount {
    std::string node;
    LayerKind kind;
    std::uint64_t count = 0;
};

struct FlopCount {
    std::uint64_t total_per_image = 0;
    std::vector<LayerCount> per_layer;  // declaration order, one entry per node
    CountingConvention convention;
    TensorShape input;

    std::uint64_t at(std::string_view node) const;
    double giga() const { return static_cast<double>(total_per_image) * 1e-9; }
};

// Analytic per-image forward-pass compute.
//   conv2d:  out_c * out_h * out_w * (in_c / groups) * k_h * k_w
//   linear:  in_features * out_features
//   squeeze_excite: its two internal linear layers, counted with `linear`
// Uncounted kinds contribute 0. Bias adds one unit per output element.
FlopCount count_flops(const ArchitectureSpec& arch, const TensorShape& input,
                      const CountingConvention& convention = {});

} // namespace algoeff::arch
