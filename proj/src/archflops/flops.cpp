#include "algoeff/flops.hpp"

#include "algoeff/error.hpp"
#include "algoeff/shapes.hpp"

namespace algoeff::arch {

std::string_view to_string(CountUnit unit) {
    switch (unit) {
    case CountUnit::mac: return "mac";
    case CountUnit::flop2: return "flop2";
    }
    return "unknown";
}

std::uint64_t FlopCount::at(std::string_view node) const {
    for (const auto& entry : per_layer) {
        if (entry.node == node) return entry.count;
    }
    throw NotFoundError("no layer '" + std::string(node) + "' in count");
}

namespace {

using u64 = std::uint64_t;

u64 u(std::int64_t v) { return static_cast<u64>(v); }

std::int64_t squeeze_width(const SqueezeExciteParams& p, std::int64_t channels) {
    if (p.squeeze_channels) return *p.squeeze_channels;
    return std::max<std::int64_t>(1, channels / p.reduction);
}

u64 adaptive_pool_reads(const PoolParams& p, const TensorShape& in) {
    u64 area = 0;
    for (std::int64_t i = 0; i < *p.output_h; ++i) {
        auto [h0, h1] = adaptive_window(i, in.height, *p.output_h);
        for (std::int64_t j = 0; j < *p.output_w; ++j) {
            auto [w0, w1] = adaptive_window(j, in.width, *p.output_w);
            area += u((h1 - h0) * (w1 - w0));
        }
    }
    return area * u(in.channels);
}

// Count in mac units for one node.
u64 node_macs(const LayerNode& node, const TensorShape& in, const TensorShape& out,
              const CountingConvention& conv) {
    const bool counted = conv.counted_kinds.count(node.kind) > 0;
    switch (node.kind) {
    case LayerKind::conv2d: {
        if (!counted) return 0;
        const auto& p = std::get<Conv2dParams>(node.params);
        u64 macs = u(out.elements()) * u(in.channels / p.groups) * u(p.kernel_h) * u(p.kernel_w);
        if (conv.include_bias && p.has_bias) macs += u(out.elements());
        return macs;
    }
    case LayerKind::linear: {
        if (!counted) return 0;
        const auto& p = std::get<LinearParams>(node.params);
        u64 macs = u(in.elements()) * u(p.out_features);
        if (conv.include_bias && p.has_bias) macs += u(p.out_features);
        return macs;
    }
    case LayerKind::squeeze_excite: {
        if (!counted && !conv.counted_kinds.count(LayerKind::linear)) return 0;
        const auto c = in.channels;
        const auto s = squeeze_width(std::get<SqueezeExciteParams>(node.params), c);
        u64 macs = 2 * u(c) * u(s);
        if (conv.include_bias) macs += u(c + s);
        return macs;
    }
    case LayerKind::maxpool:
    case LayerKind::avgpool: {
        if (!counted) return 0;
        const auto& p = std::get<PoolParams>(node.params);
        if (p.adaptive()) return adaptive_pool_reads(p, in);
        return u(out.elements()) * u(p.kernel) * u(p.kernel);
    }
    case LayerKind::global_avgpool:
        return counted ? u(in.elements()) : 0;
    case LayerKind::batchnorm:
    case LayerKind::activation:
        return counted ? u(out.elements()) : 0;
    case LayerKind::local_response_norm:
        return counted ? u(out.elements()) * u(std::get<LocalResponseNormParams>(node.params).size) : 0;
    case LayerKind::elementwise_add:
    case LayerKind::elementwise_mul:
        return counted ? u(out.elements()) * (node.inputs.size() - 1) : 0;
    case LayerKind::concat:
    case LayerKind::channel_shuffle:
    case LayerKind::flatten:
    case LayerKind::dropout:
    case LayerKind::channel_slice:
        return 0;  // data movement only
    }
    throw ValidationError("node '" + node.id + "': unknown layer kind has no counting rule");
}

} // namespace

FlopCount count_flops(const ArchitectureSpec& arch, const TensorShape& input,
                      const CountingConvention& convention) {
    const ShapeMap shapes = infer_shapes(arch, input);
    const u64 scale = convention.unit == CountUnit::flop2 ? 2 : 1;

    FlopCount result;
    result.convention = convention;
    result.input = input;
    result.per_layer.reserve(arch.nodes.size());
    for (const auto& node : arch.nodes) {
        const auto& first = node.inputs.front();
        const TensorShape& in = first == kNetworkInput ? input : shapes.find(first)->second;
        const TensorShape& out = shapes.find(node.id)->second;
        const u64 count = scale * node_macs(node, in, out, convention);
        result.per_layer.push_back({node.id, node.kind, count});
        result.total_per_image += count;
    }
    return result;
}

} // namespace algoeff::arch
