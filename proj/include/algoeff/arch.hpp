#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace algoeff::arch {

// Reserved id that node inputs use to refer to the network input tensor.
inline constexpr std::string_view kNetworkInput = "input";

struct TensorShape {
    std::int64_t channels = 1;
    std::int64_t height = 1;
    std::int64_t width = 1;

    bool valid() const { return channels >= 1 && height >= 1 && width >= 1; }
    std::int64_t elements() const { return channels * height * width; }
    std::string str() const;

    friend bool operator==(const TensorShape&, const TensorShape&) = default;
};

enum class LayerKind {
    conv2d,
    linear,
    maxpool,
    avgpool,
    global_avgpool,
    batchnorm,
    activation,
    elementwise_add,
    elementwise_mul,
    concat,
    channel_shuffle,
    flatten,
    dropout,
    local_response_norm,
    squeeze_excite,
    channel_slice,
};

inline constexpr std::array<LayerKind, 16> kAllLayerKinds = {
    LayerKind::conv2d,          LayerKind::linear,         LayerKind::maxpool,
    LayerKind::avgpool,         LayerKind::global_avgpool, LayerKind::batchnorm,
    LayerKind::activation,      LayerKind::elementwise_add, LayerKind::elementwise_mul,
    LayerKind::concat,          LayerKind::channel_shuffle, LayerKind::flatten,
    LayerKind::dropout,         LayerKind::local_response_norm, LayerKind::squeeze_excite,
    LayerKind::channel_slice,
};

std::string_view to_string(LayerKind kind);
std::optional<LayerKind> parse_layer_kind(std::string_view name);

struct NoParams {
    friend bool operator==(const NoParams&, const NoParams&) = default;
};

struct Conv2dParams {
    std::int64_t out_channels = 1;
    std::int64_t kernel_h = 1;
    std::int64_t kernel_w = 1;
    std::int64_t stride = 1;
    std::int64_t padding = 0;
    std::int64_t dilation = 1;
    std::int64_t groups = 1;
    bool has_bias = false;

    friend bool operator==(const Conv2dParams&, const Conv2dParams&) = default;
};

// Linear layers flatten their input implicitly: in_features = c * h * w.
struct LinearParams {
    std::int64_t out_features = 1;
    bool has_bias = false;

    friend bool operator==(const LinearParams&, const LinearParams&) = default;
};

// Windowed pooling, or adaptive pooling when output_h/output_w are set.
struct PoolParams {
    std::int64_t kernel = 1;
    std::int64_t stride = 1;
    std::int64_t padding = 0;
    std::int64_t dilation = 1;
    bool ceil_mode = false;
    std::optional<std::int64_t> output_h;
    std::optional<std::int64_t> output_w;

    bool adaptive() const { return output_h.has_value(); }
    friend bool operator==(const PoolParams&, const PoolParams&) = default;
};

struct ActivationParams {
    std::string function = "relu";

    friend bool operator==(const ActivationParams&, const ActivationParams&) = default;
};

struct ChannelShuffleParams {
    std::int64_t groups = 1;

    friend bool operator==(const ChannelShuffleParams&, const ChannelShuffleParams&) = default;
};

// Squeeze-and-excitation block: global pool, C -> S linear, S -> C linear, channel scale.
// S is squeeze_channels when set, otherwise C / reduction.
struct SqueezeExciteParams {
    std::int64_t reduction = 4;
    std::optional<std::int64_t> squeeze_channels;

    friend bool operator==(const SqueezeExciteParams&, const SqueezeExciteParams&) = default;
};

// Channels [begin, end) of the input; used for split-transform-merge blocks.
struct ChannelSliceParams {
    std::int64_t begin = 0;
    std::int64_t end = 1;

    friend bool operator==(const ChannelSliceParams&, const ChannelSliceParams&) = default;
};

struct LocalResponseNormParams {
    std::int64_t size = 5;

    friend bool operator==(const LocalResponseNormParams&, const LocalResponseNormParams&) = default;
};

struct DropoutParams {
    double p = 0.5;

    friend bool operator==(const DropoutParams&, const DropoutParams&) = default;
};

using LayerParams = std::variant<NoParams, Conv2dParams, LinearParams, PoolParams, ActivationParams,
                                 ChannelShuffleParams, SqueezeExciteParams, LocalResponseNormParams,
                                 DropoutParams, ChannelSliceParams>;

// The params alternative a kind carries, default-initialised.
LayerParams default_params(LayerKind kind);
bool params_match_kind(LayerKind kind, const LayerParams& params);

struct LayerNode {
    std::string id;
    LayerKind kind = LayerKind::activation;
    LayerParams params;
    std::vector<std::string> inputs;

    friend bool operator==(const LayerNode&, const LayerNode&) = default;
};

struct ArchitectureSpec {
    std::string name;
    TensorShape default_input{3, 224, 224};
    std::vector<LayerNode> nodes;
    std::string output;
    // Free-form notes; reported accuracies live here and never feed computation.
    std::map<std::string, std::string> metadata;

    const LayerNode* find(std::string_view id) const;

    friend bool operator==(const ArchitectureSpec&, const ArchitectureSpec&) = default;
};

struct Violation {
    std::string node;  // empty for graph-level rules
    std::string rule;
    std::string message;
};

// Empty iff every structural and shape invariant holds at the default input.
std::vector<Violation> validate_arch(const ArchitectureSpec& arch);

// Throws ValidationError listing the violations, if any.
void require_valid(const ArchitectureSpec& arch);

} // namespace algoeff::arch
