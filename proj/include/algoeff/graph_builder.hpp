#pragma once

#include "algoeff/arch.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace algoeff::arch {

// Appends nodes to an ArchitectureSpec. Every method returns the id of the
// node it created so calls chain naturally: x = b.conv("c1", x, ...).
class GraphBuilder {
public:
    explicit GraphBuilder(std::string name, TensorShape input = {3, 224, 224});

    std::string conv(std::string id, const std::string& from, std::int64_t out_channels, std::int64_t kernel,
                     std::int64_t stride = 1, std::int64_t padding = 0, std::int64_t groups = 1,
                     bool bias = false);
    std::string linear(std::string id, const std::string& from, std::int64_t out_features, bool bias = true);
    std::string maxpool(std::string id, const std::string& from, std::int64_t kernel, std::int64_t stride,
                        std::int64_t padding = 0, bool ceil_mode = false);
    std::string avgpool(std::string id, const std::string& from, std::int64_t kernel, std::int64_t stride,
                        std::int64_t padding = 0);
    std::string adaptive_avgpool(std::string id, const std::string& from, std::int64_t out_h, std::int64_t out_w);
    std::string global_avgpool(std::string id, const std::string& from);
    std::string batchnorm(std::string id, const std::string& from);
    std::string activation(std::string id, const std::string& from, std::string function = "relu");
    std::string add(std::string id, std::vector<std::string> from);
    std::string mul(std::string id, std::vector<std::string> from);
    std::string concat(std::string id, std::vector<std::string> from);
    std::string shuffle(std::string id, const std::string& from, std::int64_t groups);
    std::string slice(std::string id, const std::string& from, std::int64_t begin, std::int64_t end);
    std::string flatten(std::string id, const std::string& from);
    std::string dropout(std::string id, const std::string& from, double p = 0.5);
    std::string lrn(std::string id, const std::string& from, std::int64_t size = 5);
    std::string squeeze_excite(std::string id, const std::string& from, std::int64_t squeeze_channels);

    // conv (no bias) -> batchnorm -> activation; returns the activation id.
    // An empty activation skips the last node and returns the batchnorm id.
    std::string conv_bn(const std::string& prefix, const std::string& from, std::int64_t out_channels,
                        std::int64_t kernel, std::int64_t stride = 1, std::int64_t padding = 0,
                        std::int64_t groups = 1, const std::string& act = "relu");

    void note(const std::string& key, const std::string& value);

    ArchitectureSpec finish(const std::string& output);

private:
    std::string push(std::string id, LayerKind kind, LayerParams params, std::vector<std::string> inputs);

    ArchitectureSpec spec_;
};

} // namespace algoeff::arch
