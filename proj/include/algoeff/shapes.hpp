#pragma once

#include "algoeff/arch.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace algoeff::arch {

using ShapeMap = std::map<std::string, TensorShape, std::less<>>;

// floor((in + 2*padding - dilation*(kernel-1) - 1) / stride) + 1.
// Returns a value < 1 when the dilated kernel does not fit the padded input.
std::int64_t conv_output_extent(std::int64_t in, std::int64_t kernel, std::int64_t stride,
                                std::int64_t padding, std::int64_t dilation);

// Same arithmetic with optional ceil rounding; in ceil mode the last window
// must start inside the input or left padding.
std::int64_t pool_output_extent(std::int64_t in, std::int64_t kernel, std::int64_t stride,
                                 std::int64_t padding, std::int64_t dilation, bool ceil_mode);

// [start, end) of adaptive pooling window `index` when reducing `in` to `out`.
std::pair<std::int64_t, std::int64_t> adaptive_window(std::int64_t index, std::int64_t in,
                                                      std::int64_t out);

// Output shape of every node for the given network input.
// Throws ShapeError naming the first node whose input is incompatible.
ShapeMap infer_shapes(const ArchitectureSpec& arch, const TensorShape& input);

} // namespace algoeff::arch
