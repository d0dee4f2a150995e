#include "algoeff/arch_json.hpp"

#include "algoeff/builtin_archs.hpp"
#include "common/strict_json.hpp"

#include <fstream>
#include <sstream>

namespace algoeff::arch {

namespace {

using detail::json;
using detail::StrictObject;
using ojson = nlohmann::ordered_json;

LayerParams parse_params(LayerKind kind, const json& params, const std::string& path) {
    static const json empty = json::object();
    const StrictObject p(params.is_null() ? empty : params, path);
    switch (kind) {
    case LayerKind::conv2d: {
        p.allow_only({"out_channels", "kernel_h", "kernel_w", "stride", "padding", "dilation", "groups", "has_bias"});
        Conv2dParams c;
        c.out_channels = p.integer("out_channels");
        c.kernel_h = p.integer("kernel_h");
        c.kernel_w = p.integer("kernel_w");
        c.stride = p.integer_or("stride", 1);
        c.padding = p.integer_or("padding", 0);
        c.dilation = p.integer_or("dilation", 1);
        c.groups = p.integer_or("groups", 1);
        c.has_bias = p.boolean_or("has_bias", false);
        return c;
    }
    case LayerKind::linear: {
        p.allow_only({"out_features", "has_bias"});
        return LinearParams{p.integer("out_features"), p.boolean_or("has_bias", false)};
    }
    case LayerKind::maxpool:
    case LayerKind::avgpool: {
        p.allow_only({"kernel", "stride", "padding", "dilation", "ceil_mode", "output_h", "output_w"});
        PoolParams pool;
        if (p.has("output_h") || p.has("output_w")) {
            if (p.has("kernel") || p.has("stride") || p.has("padding") || p.has("dilation") || p.has("ceil_mode")) {
                throw ParseError(path + ": adaptive pooling takes only output_h and output_w");
            }
            pool.output_h = p.integer("output_h");
            pool.output_w = p.integer("output_w");
            return pool;
        }
        pool.kernel = p.integer("kernel");
        pool.stride = p.integer_or("stride", pool.kernel);
        pool.padding = p.integer_or("padding", 0);
        pool.dilation = p.integer_or("dilation", 1);
        pool.ceil_mode = p.boolean_or("ceil_mode", false);
        return pool;
    }
    case LayerKind::activation: {
        p.allow_only({"function"});
        return ActivationParams{p.has("function") ? p.string("function") : "relu"};
    }
    case LayerKind::channel_shuffle: {
        p.allow_only({"groups"});
        return ChannelShuffleParams{p.integer("groups")};
    }
    case LayerKind::squeeze_excite: {
        p.allow_only({"reduction", "squeeze_channels"});
        SqueezeExciteParams se;
        if (p.has("squeeze_channels")) {
            if (p.has("reduction")) throw ParseError(path + ": give either reduction or squeeze_channels");
            se.squeeze_channels = p.integer("squeeze_channels");
        } else {
            se.reduction = p.integer_or("reduction", 4);
        }
        return se;
    }
    case LayerKind::local_response_norm: {
        p.allow_only({"size"});
        return LocalResponseNormParams{p.integer_or("size", 5)};
    }
    case LayerKind::dropout: {
        p.allow_only({"p"});
        return DropoutParams{p.has("p") ? p.number("p") : 0.5};
    }
    case LayerKind::channel_slice: {
        p.allow_only({"begin", "end"});
        return ChannelSliceParams{p.integer("begin"), p.integer("end")};
    }
    case LayerKind::global_avgpool:
    case LayerKind::batchnorm:
    case LayerKind::elementwise_add:
    case LayerKind::elementwise_mul:
    case LayerKind::concat:
    case LayerKind::flatten:
        p.allow_only({});
        return NoParams{};
    }
    throw ParseError(path + ": unknown layer kind");
}

ojson params_to_json(const LayerParams& params) {
    ojson j = ojson::object();
    std::visit(
        [&j](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, Conv2dParams>) {
                j["out_channels"] = p.out_channels;
                j["kernel_h"] = p.kernel_h;
                j["kernel_w"] = p.kernel_w;
                j["stride"] = p.stride;
                j["padding"] = p.padding;
                j["dilation"] = p.dilation;
                j["groups"] = p.groups;
                j["has_bias"] = p.has_bias;
            } else if constexpr (std::is_same_v<T, LinearParams>) {
                j["out_features"] = p.out_features;
                j["has_bias"] = p.has_bias;
            } else if constexpr (std::is_same_v<T, PoolParams>) {
                if (p.adaptive()) {
                    j["output_h"] = *p.output_h;
                    j["output_w"] = p.output_w.value_or(*p.output_h);
                } else {
                    j["kernel"] = p.kernel;
                    j["stride"] = p.stride;
                    j["padding"] = p.padding;
                    j["dilation"] = p.dilation;
                    j["ceil_mode"] = p.ceil_mode;
                }
            } else if constexpr (std::is_same_v<T, ActivationParams>) {
                j["function"] = p.function;
            } else if constexpr (std::is_same_v<T, ChannelShuffleParams>) {
                j["groups"] = p.groups;
            } else if constexpr (std::is_same_v<T, SqueezeExciteParams>) {
                if (p.squeeze_channels) {
                    j["squeeze_channels"] = *p.squeeze_channels;
                } else {
                    j["reduction"] = p.reduction;
                }
            } else if constexpr (std::is_same_v<T, LocalResponseNormParams>) {
                j["size"] = p.size;
            } else if constexpr (std::is_same_v<T, DropoutParams>) {
                j["p"] = p.p;
            } else if constexpr (std::is_same_v<T, ChannelSliceParams>) {
                j["begin"] = p.begin;
                j["end"] = p.end;
            }
        },
        params);
    return j;
}

} // namespace

ArchitectureSpec parse_arch_json(std::string_view text) {
    const json doc = detail::parse_json_text(text);
    const StrictObject root(doc, "$");
    root.allow_only({"name", "default_input", "nodes", "output", "metadata"});

    ArchitectureSpec arch;
    arch.name = root.string("name");
    {
        const StrictObject in(root.raw("default_input"), root.path("default_input"));
        in.allow_only({"c", "h", "w"});
        arch.default_input = {in.integer("c"), in.integer("h"), in.integer("w")};
    }
    arch.output = root.string("output");

    const json& nodes = root.raw("nodes");
    if (!nodes.is_array()) throw ParseError("$.nodes: expected an array");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const std::string path = "$.nodes[" + std::to_string(i) + "]";
        const StrictObject n(nodes[i], path);
        n.allow_only({"id", "kind", "params", "inputs"});
        LayerNode node;
        node.id = n.string("id");
        const auto kind_name = n.string("kind");
        auto kind = parse_layer_kind(kind_name);
        if (!kind) throw ParseError(path + ".kind: unknown layer kind '" + kind_name + "'");
        node.kind = *kind;
        node.params = parse_params(node.kind, n.has("params") ? n.raw("params") : json(), path + ".params");
        const json& inputs = n.raw("inputs");
        if (!inputs.is_array()) throw ParseError(path + ".inputs: expected an array of node ids");
        for (const auto& in : inputs) {
            if (!in.is_string()) throw ParseError(path + ".inputs: expected an array of node ids");
            node.inputs.push_back(in.get<std::string>());
        }
        arch.nodes.push_back(std::move(node));
    }

    if (root.has("metadata")) {
        const json& meta = root.raw("metadata");
        if (!meta.is_object()) throw ParseError("$.metadata: expected an object of strings");
        for (const auto& item : meta.items()) {
            if (!item.value().is_string()) throw ParseError("$.metadata." + item.key() + ": expected a string");
            arch.metadata[item.key()] = item.value().get<std::string>();
        }
    }
    return arch;
}

ArchitectureSpec load_arch_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw NotFoundError("architecture file not found: " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_arch_json(buffer.str());
    } catch (const ParseError& e) {
        throw e.in_file(path.string());
    }
}

std::string arch_to_json(const ArchitectureSpec& arch, int indent) {
    ojson doc;
    doc["name"] = arch.name;
    doc["default_input"] = {{"c", arch.default_input.channels},
                            {"h", arch.default_input.height},
                            {"w", arch.default_input.width}};
    ojson nodes = ojson::array();
    for (const auto& node : arch.nodes) {
        ojson n;
        n["id"] = node.id;
        n["kind"] = std::string(to_string(node.kind));
        n["params"] = params_to_json(node.params);
        n["inputs"] = node.inputs;
        nodes.push_back(std::move(n));
    }
    doc["nodes"] = std::move(nodes);
    doc["output"] = arch.output;
    if (!arch.metadata.empty()) {
        ojson meta = ojson::object();
        for (const auto& [k, v] : arch.metadata) meta[k] = v;
        doc["metadata"] = std::move(meta);
    }
    return doc.dump(indent);
}

ArchitectureSpec resolve_arch(const std::string& name_or_path) {
    const auto key = normalize_model_name(name_or_path);
    for (const auto& name : builtin_arch_names()) {
        if (normalize_model_name(name) == key) return builtin_arch(name);
    }
    const std::filesystem::path path(name_or_path);
    const bool looks_like_file = path.has_extension() || name_or_path.find('/') != std::string::npos;
    if (looks_like_file || std::filesystem::exists(path)) return load_arch_file(path);
    return builtin_arch(name_or_path);
}

} // namespace algoeff::arch
