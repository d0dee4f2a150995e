#include "algoeff/arch.hpp"

#include "algoeff/error.hpp"
#include "algoeff/shapes.hpp"

#include <set>

namespace algoeff::arch {

std::string TensorShape::str() const {
    return std::to_string(channels) + "x" + std::to_string(height) + "x" + std::to_string(width);
}

std::string_view to_string(LayerKind kind) {
    switch (kind) {
    case LayerKind::conv2d: return "conv2d";
    case LayerKind::linear: return "linear";
    case LayerKind::maxpool: return "maxpool";
    case LayerKind::avgpool: return "avgpool";
    case LayerKind::global_avgpool: return "global_avgpool";
    case LayerKind::batchnorm: return "batchnorm";
    case LayerKind::activation: return "activation";
    case LayerKind::elementwise_add: return "elementwise_add";
    case LayerKind::elementwise_mul: return "elementwise_mul";
    case LayerKind::concat: return "concat";
    case LayerKind::channel_shuffle: return "channel_shuffle";
    case LayerKind::flatten: return "flatten";
    case LayerKind::dropout: return "dropout";
    case LayerKind::local_response_norm: return "local_response_norm";
    case LayerKind::squeeze_excite: return "squeeze_excite";
    case LayerKind::channel_slice: return "channel_slice";
    }
    return "unknown";
}

std::optional<LayerKind> parse_layer_kind(std::string_view name) {
    for (LayerKind kind : kAllLayerKinds) {
        if (to_string(kind) == name) return kind;
    }
    return std::nullopt;
}

LayerParams default_params(LayerKind kind) {
    switch (kind) {
    case LayerKind::conv2d: return Conv2dParams{};
    case LayerKind::linear: return LinearParams{};
    case LayerKind::maxpool:
    case LayerKind::avgpool: return PoolParams{};
    case LayerKind::activation: return ActivationParams{};
    case LayerKind::channel_shuffle: return ChannelShuffleParams{};
    case LayerKind::squeeze_excite: return SqueezeExciteParams{};
    case LayerKind::local_response_norm: return LocalResponseNormParams{};
    case LayerKind::dropout: return DropoutParams{};
    case LayerKind::channel_slice: return ChannelSliceParams{};
    case LayerKind::global_avgpool:
    case LayerKind::batchnorm:
    case LayerKind::elementwise_add:
    case LayerKind::elementwise_mul:
    case LayerKind::concat:
    case LayerKind::flatten: return NoParams{};
    }
    throw ValidationError("unknown layer kind");
}

bool params_match_kind(LayerKind kind, const LayerParams& params) {
    return default_params(kind).index() == params.index();
}

const LayerNode* ArchitectureSpec::find(std::string_view id) const {
    for (const auto& node : nodes) {
        if (node.id == id) return &node;
    }
    return nullptr;
}

namespace {

bool is_multi_input(LayerKind kind) {
    return kind == LayerKind::elementwise_add || kind == LayerKind::elementwise_mul ||
           kind == LayerKind::concat;
}

class Checker {
public:
    explicit Checker(std::vector<Violation>& out) : out_(out) {}

    void operator()(const std::string& node, const char* rule, std::string message) {
        out_.push_back({node, rule, std::move(message)});
    }

    void positive(const std::string& node, const char* field, std::int64_t value) {
        if (value < 1) (*this)(node, "param_range", std::string(field) + " must be >= 1");
    }

    void non_negative(const std::string& node, const char* field, std::int64_t value) {
        if (value < 0) (*this)(node, "param_range", std::string(field) + " must be >= 0");
    }

private:
    std::vector<Violation>& out_;
};

void check_params(const LayerNode& node, Checker& check) {
    const auto& id = node.id;
    if (!params_match_kind(node.kind, node.params)) {
        check(id, "params", "parameters do not belong to kind " + std::string(to_string(node.kind)));
        return;
    }
    if (const auto* conv = std::get_if<Conv2dParams>(&node.params)) {
        check.positive(id, "out_channels", conv->out_channels);
        check.positive(id, "kernel_h", conv->kernel_h);
        check.positive(id, "kernel_w", conv->kernel_w);
        check.positive(id, "stride", conv->stride);
        check.non_negative(id, "padding", conv->padding);
        check.positive(id, "dilation", conv->dilation);
        check.positive(id, "groups", conv->groups);
        if (conv->groups >= 1 && conv->out_channels >= 1 && conv->out_channels % conv->groups != 0) {
            check(id, "group_divisibility",
                  "groups=" + std::to_string(conv->groups) + " does not divide out_channels=" +
                      std::to_string(conv->out_channels));
        }
    } else if (const auto* lin = std::get_if<LinearParams>(&node.params)) {
        check.positive(id, "out_features", lin->out_features);
    } else if (const auto* pool = std::get_if<PoolParams>(&node.params)) {
        if (pool->output_h.has_value() != pool->output_w.has_value()) {
            check(id, "param_range", "adaptive pooling needs both output_h and output_w");
        } else if (pool->adaptive()) {
            check.positive(id, "output_h", *pool->output_h);
            check.positive(id, "output_w", *pool->output_w);
        } else {
            check.positive(id, "kernel", pool->kernel);
            check.positive(id, "stride", pool->stride);
            check.non_negative(id, "padding", pool->padding);
            check.positive(id, "dilation", pool->dilation);
        }
    } else if (const auto* act = std::get_if<ActivationParams>(&node.params)) {
        if (act->function.empty()) check(id, "param_range", "activation function name is empty");
    } else if (const auto* shuffle = std::get_if<ChannelShuffleParams>(&node.params)) {
        check.positive(id, "groups", shuffle->groups);
    } else if (const auto* se = std::get_if<SqueezeExciteParams>(&node.params)) {
        if (se->squeeze_channels) {
            check.positive(id, "squeeze_channels", *se->squeeze_channels);
        } else {
            check.positive(id, "reduction", se->reduction);
        }
    } else if (const auto* lrn = std::get_if<LocalResponseNormParams>(&node.params)) {
        check.positive(id, "size", lrn->size);
    } else if (const auto* slice = std::get_if<ChannelSliceParams>(&node.params)) {
        if (slice->begin < 0 || slice->end <= slice->begin) {
            check(id, "param_range", "channel slice needs 0 <= begin < end");
        }
    } else if (const auto* drop = std::get_if<DropoutParams>(&node.params)) {
        if (!(drop->p >= 0.0 && drop->p < 1.0)) check(id, "param_range", "dropout p must be in [0,1)");
    }
}

} // namespace

std::vector<Violation> validate_arch(const ArchitectureSpec& arch) {
    std::vector<Violation> out;
    Checker check(out);

    if (arch.name.empty()) check("", "name", "architecture name is empty");
    if (!arch.default_input.valid()) {
        check("", "default_input", "default input " + arch.default_input.str() + " has a dimension < 1");
    }
    if (arch.nodes.empty()) check("", "nodes", "graph has no nodes");

    std::set<std::string, std::less<>> declared;
    std::set<std::string, std::less<>> all_ids;
    for (const auto& node : arch.nodes) all_ids.insert(node.id);

    for (const auto& node : arch.nodes) {
        const auto& id = node.id;
        if (id.empty()) {
            check(id, "id", "node id is empty");
        } else if (id == kNetworkInput) {
            check(id, "id", "node id 'input' is reserved for the network input");
        } else if (declared.count(id)) {
            check(id, "duplicate_id", "node id declared more than once");
        }

        const std::size_t arity = node.inputs.size();
        if (is_multi_input(node.kind)) {
            if (arity < 2) check(id, "arity", std::string(to_string(node.kind)) + " needs at least 2 inputs");
        } else if (arity != 1) {
            check(id, "arity", std::string(to_string(node.kind)) + " takes exactly 1 input, got " +
                                   std::to_string(arity));
        }

        for (const auto& in : node.inputs) {
            if (in == kNetworkInput || declared.count(in)) continue;
            if (all_ids.count(in)) {
                check(id, "ordering",
                      "input '" + in + "' is declared later; graph must be acyclic in declaration order");
            } else {
                check(id, "unknown_input", "input '" + in + "' does not name a node");
            }
        }

        check_params(node, check);
        declared.insert(id);
    }

    if (arch.output.empty()) {
        check("", "output", "no output node designated");
    } else if (!arch.find(arch.output)) {
        check("", "output", "output '" + arch.output + "' does not name a node");
    }

    if (out.empty()) {
        try {
            infer_shapes(arch, arch.default_input);
        } catch (const ShapeError& e) {
            check(e.node(), "shape", e.what());
        }
    }
    return out;
}

void require_valid(const ArchitectureSpec& arch) {
    auto violations = validate_arch(arch);
    if (violations.empty()) return;
    std::string msg = "architecture '" + arch.name + "' is invalid:";
    for (const auto& v : violations) {
        msg += "\n  [" + v.rule + "] " + (v.node.empty() ? std::string("<graph>") : v.node) + ": " + v.message;
    }
    throw ValidationError(msg);
}

} // namespace algoeff::arch
