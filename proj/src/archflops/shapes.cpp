#include "algoeff/shapes.hpp"

#include "algoeff/error.hpp"

namespace algoeff::arch {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

const TensorShape& single_input(const LayerNode& node, const ShapeMap& shapes) {
    if (node.inputs.size() != 1) {
        throw ShapeError(node.id, "expects exactly 1 input, got " + std::to_string(node.inputs.size()));
    }
    auto it = shapes.find(node.inputs.front());
    if (it == shapes.end()) {
        throw ShapeError(node.id, "input '" + node.inputs.front() + "' is not an earlier node");
    }
    return it->second;
}

std::vector<TensorShape> all_inputs(const LayerNode& node, const ShapeMap& shapes) {
    if (node.inputs.size() < 2) throw ShapeError(node.id, "needs at least 2 inputs");
    std::vector<TensorShape> result;
    for (const auto& in : node.inputs) {
        auto it = shapes.find(in);
        if (it == shapes.end()) throw ShapeError(node.id, "input '" + in + "' is not an earlier node");
        result.push_back(it->second);
    }
    return result;
}

std::int64_t checked_extent(const LayerNode& node, const char* axis, std::int64_t in, std::int64_t out,
                            std::int64_t kernel, std::int64_t padding, std::int64_t dilation) {
    if (out < 1) {
        throw ShapeError(node.id, std::string("kernel extent ") + std::to_string(dilation * (kernel - 1) + 1) +
                                      " larger than padded input " + axis + " " +
                                      std::to_string(in + 2 * padding));
    }
    return out;
}

TensorShape conv_shape(const LayerNode& node, const Conv2dParams& p, const TensorShape& in) {
    if (p.groups < 1 || in.channels % p.groups != 0) {
        throw ShapeError(node.id, "groups=" + std::to_string(p.groups) + " does not divide input channels " +
                                      std::to_string(in.channels));
    }
    if (p.out_channels % p.groups != 0) {
        throw ShapeError(node.id, "groups=" + std::to_string(p.groups) + " does not divide out_channels " +
                                      std::to_string(p.out_channels));
    }
    if (p.stride < 1 || p.dilation < 1 || p.kernel_h < 1 || p.kernel_w < 1 || p.padding < 0) {
        throw ShapeError(node.id, "invalid convolution parameters");
    }
    auto h = conv_output_extent(in.height, p.kernel_h, p.stride, p.padding, p.dilation);
    auto w = conv_output_extent(in.width, p.kernel_w, p.stride, p.padding, p.dilation);
    return {p.out_channels, checked_extent(node, "height", in.height, h, p.kernel_h, p.padding, p.dilation),
            checked_extent(node, "width", in.width, w, p.kernel_w, p.padding, p.dilation)};
}

TensorShape pool_shape(const LayerNode& node, const PoolParams& p, const TensorShape& in) {
    if (p.adaptive()) {
        if (!p.output_w || *p.output_h < 1 || *p.output_w < 1) {
            throw ShapeError(node.id, "adaptive pooling needs positive output_h and output_w");
        }
        return {in.channels, *p.output_h, *p.output_w};
    }
    if (p.stride < 1 || p.dilation < 1 || p.kernel < 1 || p.padding < 0) {
        throw ShapeError(node.id, "invalid pooling parameters");
    }
    auto h = pool_output_extent(in.height, p.kernel, p.stride, p.padding, p.dilation, p.ceil_mode);
    auto w = pool_output_extent(in.width, p.kernel, p.stride, p.padding, p.dilation, p.ceil_mode);
    return {in.channels, checked_extent(node, "height", in.height, h, p.kernel, p.padding, p.dilation),
            checked_extent(node, "width", in.width, w, p.kernel, p.padding, p.dilation)};
}

TensorShape node_shape(const LayerNode& node, const ShapeMap& shapes) {
    switch (node.kind) {
    case LayerKind::conv2d:
        return conv_shape(node, std::get<Conv2dParams>(node.params), single_input(node, shapes));
    case LayerKind::linear:
        single_input(node, shapes);
        return {std::get<LinearParams>(node.params).out_features, 1, 1};
    case LayerKind::maxpool:
    case LayerKind::avgpool:
        return pool_shape(node, std::get<PoolParams>(node.params), single_input(node, shapes));
    case LayerKind::global_avgpool:
        return {single_input(node, shapes).channels, 1, 1};
    case LayerKind::batchnorm:
    case LayerKind::activation:
    case LayerKind::dropout:
    case LayerKind::local_response_norm:
    case LayerKind::squeeze_excite:
        return single_input(node, shapes);
    case LayerKind::channel_shuffle: {
        const auto& in = single_input(node, shapes);
        auto groups = std::get<ChannelShuffleParams>(node.params).groups;
        if (groups < 1 || in.channels % groups != 0) {
            throw ShapeError(node.id, "shuffle groups=" + std::to_string(groups) +
                                          " does not divide input channels " + std::to_string(in.channels));
        }
        return in;
    }
    case LayerKind::flatten: {
        const auto& in = single_input(node, shapes);
        return {in.elements(), 1, 1};
    }
    case LayerKind::channel_slice: {
        const auto& in = single_input(node, shapes);
        const auto& p = std::get<ChannelSliceParams>(node.params);
        if (p.begin < 0 || p.end <= p.begin || p.end > in.channels) {
            throw ShapeError(node.id, "channel slice [" + std::to_string(p.begin) + ", " + std::to_string(p.end) +
                                          ") outside input channels " + std::to_string(in.channels));
        }
        return {p.end - p.begin, in.height, in.width};
    }
    case LayerKind::elementwise_add:
    case LayerKind::elementwise_mul: {
        auto ins = all_inputs(node, shapes);
        for (std::size_t i = 1; i < ins.size(); ++i) {
            if (!(ins[i] == ins[0])) {
                throw ShapeError(node.id, "elementwise inputs differ in shape: " + ins[0].str() + " vs " +
                                              ins[i].str() + " ('" + node.inputs[i] + "')");
            }
        }
        return ins[0];
    }
    case LayerKind::concat: {
        auto ins = all_inputs(node, shapes);
        TensorShape out = ins[0];
        for (std::size_t i = 1; i < ins.size(); ++i) {
            if (ins[i].height != out.height || ins[i].width != out.width) {
                throw ShapeError(node.id, "concat inputs differ spatially: " + ins[0].str() + " vs " +
                                              ins[i].str() + " ('" + node.inputs[i] + "')");
            }
            out.channels += ins[i].channels;
        }
        return out;
    }
    }
    throw ShapeError(node.id, "unknown layer kind");
}

} // namespace

std::int64_t conv_output_extent(std::int64_t in, std::int64_t kernel, std::int64_t stride,
                                std::int64_t padding, std::int64_t dilation) {
    return floor_div(in + 2 * padding - dilation * (kernel - 1) - 1, stride) + 1;
}

std::int64_t pool_output_extent(std::int64_t in, std::int64_t kernel, std::int64_t stride,
                                 std::int64_t padding, std::int64_t dilation, bool ceil_mode) {
    const std::int64_t span = in + 2 * padding - dilation * (kernel - 1) - 1;
    if (!ceil_mode) return floor_div(span, stride) + 1;
    std::int64_t out = ceil_div(span, stride) + 1;
    if (out > 1 && (out - 1) * stride >= in + padding) --out;
    return out;
}

std::pair<std::int64_t, std::int64_t> adaptive_window(std::int64_t index, std::int64_t in,
                                                      std::int64_t out) {
    return {floor_div(index * in, out), ceil_div((index + 1) * in, out)};
}

ShapeMap infer_shapes(const ArchitectureSpec& arch, const TensorShape& input) {
    if (!input.valid()) throw ShapeError(std::string(kNetworkInput), "input shape " + input.str() + " is invalid");
    ShapeMap shapes;
    shapes.emplace(std::string(kNetworkInput), input);
    for (const auto& node : arch.nodes) {
        if (!params_match_kind(node.kind, node.params)) {
            throw ShapeError(node.id, "parameters do not belong to kind " + std::string(to_string(node.kind)));
        }
        if (shapes.count(node.id)) throw ShapeError(node.id, "duplicate node id");
        shapes.emplace(node.id, node_shape(node, shapes));
    }
    shapes.erase(shapes.find(kNetworkInput));
    return shapes;
}

} // namespace algoeff::arch
