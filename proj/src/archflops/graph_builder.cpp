#include "algoeff/graph_builder.hpp"

namespace algoeff::arch {

GraphBuilder::GraphBuilder(std::string name, TensorShape input) {
    spec_.name = std::move(name);
    spec_.default_input = input;
}

std::string GraphBuilder::push(std::string id, LayerKind kind, LayerParams params, std::vector<std::string> inputs) {
    spec_.nodes.push_back({id, kind, std::move(params), std::move(inputs)});
    return id;
}

std::string GraphBuilder::conv(std::string id, const std::string& from, std::int64_t out_channels,
                               std::int64_t kernel, std::int64_t stride, std::int64_t padding,
                               std::int64_t groups, bool bias) {
    Conv2dParams p;
    p.out_channels = out_channels;
    p.kernel_h = kernel;
    p.kernel_w = kernel;
    p.stride = stride;
    p.padding = padding;
    p.groups = groups;
    p.has_bias = bias;
    return push(std::move(id), LayerKind::conv2d, p, {from});
}

std::string GraphBuilder::linear(std::string id, const std::string& from, std::int64_t out_features, bool bias) {
    return push(std::move(id), LayerKind::linear, LinearParams{out_features, bias}, {from});
}

std::string GraphBuilder::maxpool(std::string id, const std::string& from, std::int64_t kernel,
                                  std::int64_t stride, std::int64_t padding, bool ceil_mode) {
    PoolParams p;
    p.kernel = kernel;
    p.stride = stride;
    p.padding = padding;
    p.ceil_mode = ceil_mode;
    return push(std::move(id), LayerKind::maxpool, p, {from});
}

std::string GraphBuilder::avgpool(std::string id, const std::string& from, std::int64_t kernel,
                                  std::int64_t stride, std::int64_t padding) {
    PoolParams p;
    p.kernel = kernel;
    p.stride = stride;
    p.padding = padding;
    return push(std::move(id), LayerKind::avgpool, p, {from});
}

std::string GraphBuilder::adaptive_avgpool(std::string id, const std::string& from, std::int64_t out_h,
                                           std::int64_t out_w) {
    PoolParams p;
    p.output_h = out_h;
    p.output_w = out_w;
    return push(std::move(id), LayerKind::avgpool, p, {from});
}

std::string GraphBuilder::global_avgpool(std::string id, const std::string& from) {
    return push(std::move(id), LayerKind::global_avgpool, NoParams{}, {from});
}

std::string GraphBuilder::batchnorm(std::string id, const std::string& from) {
    return push(std::move(id), LayerKind::batchnorm, NoParams{}, {from});
}

std::string GraphBuilder::activation(std::string id, const std::string& from, std::string function) {
    return push(std::move(id), LayerKind::activation, ActivationParams{std::move(function)}, {from});
}

std::string GraphBuilder::add(std::string id, std::vector<std::string> from) {
    return push(std::move(id), LayerKind::elementwise_add, NoParams{}, std::move(from));
}

std::string GraphBuilder::mul(std::string id, std::vector<std::string> from) {
    return push(std::move(id), LayerKind::elementwise_mul, NoParams{}, std::move(from));
}

std::string GraphBuilder::concat(std::string id, std::vector<std::string> from) {
    return push(std::move(id), LayerKind::concat, NoParams{}, std::move(from));
}

std::string GraphBuilder::shuffle(std::string id, const std::string& from, std::int64_t groups) {
    return push(std::move(id), LayerKind::channel_shuffle, ChannelShuffleParams{groups}, {from});
}

std::string GraphBuilder::slice(std::string id, const std::string& from, std::int64_t begin, std::int64_t end) {
    return push(std::move(id), LayerKind::channel_slice, ChannelSliceParams{begin, end}, {from});
}

std::string GraphBuilder::flatten(std::string id, const std::string& from) {
    return push(std::move(id), LayerKind::flatten, NoParams{}, {from});
}

std::string GraphBuilder::dropout(std::string id, const std::string& from, double p) {
    return push(std::move(id), LayerKind::dropout, DropoutParams{p}, {from});
}

std::string GraphBuilder::lrn(std::string id, const std::string& from, std::int64_t size) {
    return push(std::move(id), LayerKind::local_response_norm, LocalResponseNormParams{size}, {from});
}

std::string GraphBuilder::squeeze_excite(std::string id, const std::string& from, std::int64_t squeeze_channels) {
    SqueezeExciteParams p;
    p.squeeze_channels = squeeze_channels;
    return push(std::move(id), LayerKind::squeeze_excite, p, {from});
}

std::string GraphBuilder::conv_bn(const std::string& prefix, const std::string& from, std::int64_t out_channels,
                                  std::int64_t kernel, std::int64_t stride, std::int64_t padding,
                                  std::int64_t groups, const std::string& act) {
    auto x = conv(prefix + ".conv", from, out_channels, kernel, stride, padding, groups, false);
    x = batchnorm(prefix + ".bn", x);
    if (act.empty()) return x;
    return activation(prefix + "." + act, x, act);
}

void GraphBuilder::note(const std::string& key, const std::string& value) { spec_.metadata[key] = value; }

ArchitectureSpec GraphBuilder::finish(const std::string& output) {
    spec_.output = output;
    return spec_;
}

} // namespace algoeff::arch
