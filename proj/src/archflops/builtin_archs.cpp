#include "algoeff/builtin_archs.hpp"

#include "algoeff/error.hpp"
#include "algoeff/graph_builder.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>

namespace algoeff::arch {

namespace {

using B = GraphBuilder;
using std::int64_t;
using std::string;

// Final accuracies of the re-trained reference models next to the published
// figures. Documentation only.
void accuracy_notes(B& b, const char* metric, const char* measured, const char* pytorch_examples,
                    const char* original, const char* single_crop) {
    const string m(metric);
    b.note(m + "_final_measured", measured);
    b.note(m + "_pytorch_examples", pytorch_examples);
    b.note(m + "_original_paper", original);
    b.note("single_crop_validation", single_crop);
}

ArchitectureSpec alexnet() {
    B b("AlexNet");
    b.note("reference_implementation", "torchvision.models.alexnet (single-tower 64-192-384-256-256 variant)");
    accuracy_notes(b, "top5", "79.0%", "79.1%", "83.0%", "?");
    auto x = b.conv("features.0", "input", 64, 11, 4, 2, 1, true);
    x = b.activation("features.1", x);
    x = b.maxpool("features.2", x, 3, 2);
    x = b.conv("features.3", x, 192, 5, 1, 2, 1, true);
    x = b.activation("features.4", x);
    x = b.maxpool("features.5", x, 3, 2);
    x = b.conv("features.6", x, 384, 3, 1, 1, 1, true);
    x = b.activation("features.7", x);
    x = b.conv("features.8", x, 256, 3, 1, 1, 1, true);
    x = b.activation("features.9", x);
    x = b.conv("features.10", x, 256, 3, 1, 1, 1, true);
    x = b.activation("features.11", x);
    x = b.maxpool("features.12", x, 3, 2);
    x = b.adaptive_avgpool("avgpool", x, 6, 6);
    x = b.flatten("flatten", x);
    x = b.dropout("classifier.0", x);
    x = b.linear("classifier.1", x, 4096);
    x = b.activation("classifier.2", x);
    x = b.dropout("classifier.3", x);
    x = b.linear("classifier.4", x, 4096);
    x = b.activation("classifier.5", x);
    x = b.linear("classifier.6", x, 1000);
    return b.finish(x);
}

ArchitectureSpec vgg11() {
    B b("VGG-11");
    b.note("reference_implementation", "torchvision.models.vgg11 (configuration A, no batch norm)");
    accuracy_notes(b, "top5", "86.8%", "88.6%", "93.0%", "no");
    const int64_t cfg[] = {64, 0, 128, 0, 256, 256, 0, 512, 512, 0, 512, 512, 0};
    string x = "input";
    int index = 0;
    for (int64_t c : cfg) {
        const string id = "features." + std::to_string(index);
        if (c == 0) {
            x = b.maxpool(id, x, 2, 2);
            index += 1;
        } else {
            x = b.conv(id, x, c, 3, 1, 1, 1, true);
            x = b.activation("features." + std::to_string(index + 1), x);
            index += 2;
        }
    }
    x = b.adaptive_avgpool("avgpool", x, 7, 7);
    x = b.flatten("flatten", x);
    x = b.linear("classifier.0", x, 4096);
    x = b.activation("classifier.1", x);
    x = b.dropout("classifier.2", x);
    x = b.linear("classifier.3", x, 4096);
    x = b.activation("classifier.4", x);
    x = b.dropout("classifier.5", x);
    x = b.linear("classifier.6", x, 1000);
    return b.finish(x);
}

string inception(B& b, const string& name, const string& from, int64_t ch1x1, int64_t ch3x3red, int64_t ch3x3,
                 int64_t ch5x5red, int64_t ch5x5, int64_t pool_proj) {
    auto b1 = b.conv_bn(name + ".branch1", from, ch1x1, 1);
    auto b2 = b.conv_bn(name + ".branch2.0", from, ch3x3red, 1);
    b2 = b.conv_bn(name + ".branch2.1", b2, ch3x3, 3, 1, 1);
    // The reference implementation uses a 3x3 kernel in the "5x5" branch.
    auto b3 = b.conv_bn(name + ".branch3.0", from, ch5x5red, 1);
    b3 = b.conv_bn(name + ".branch3.1", b3, ch5x5, 3, 1, 1);
    auto b4 = b.maxpool(name + ".branch4.0", from, 3, 1, 1, true);
    b4 = b.conv_bn(name + ".branch4.1", b4, pool_proj, 1);
    return b.concat(name + ".cat", {b1, b2, b3, b4});
}

ArchitectureSpec googlenet() {
    B b("GoogLeNet");
    b.note("reference_implementation", "torchvision.models.googlenet (aux classifiers disabled)");
    accuracy_notes(b, "top5", "88.0%", "89.5%", "89.9%", "yes");
    auto x = b.conv_bn("conv1", "input", 64, 7, 2, 3);
    x = b.maxpool("maxpool1", x, 3, 2, 0, true);
    x = b.conv_bn("conv2", x, 64, 1);
    x = b.conv_bn("conv3", x, 192, 3, 1, 1);
    x = b.maxpool("maxpool2", x, 3, 2, 0, true);
    x = inception(b, "inception3a", x, 64, 96, 128, 16, 32, 32);
    x = inception(b, "inception3b", x, 128, 128, 192, 32, 96, 64);
    x = b.maxpool("maxpool3", x, 3, 2, 0, true);
    x = inception(b, "inception4a", x, 192, 96, 208, 16, 48, 64);
    x = inception(b, "inception4b", x, 160, 112, 224, 24, 64, 64);
    x = inception(b, "inception4c", x, 128, 128, 256, 24, 64, 64);
    x = inception(b, "inception4d", x, 112, 144, 288, 32, 64, 64);
    x = inception(b, "inception4e", x, 256, 160, 320, 32, 128, 128);
    x = b.maxpool("maxpool4", x, 2, 2, 0, true);
    x = inception(b, "inception5a", x, 256, 160, 320, 32, 128, 128);
    x = inception(b, "inception5b", x, 384, 192, 384, 48, 128, 128);
    x = b.global_avgpool("avgpool", x);
    x = b.flatten("flatten", x);
    x = b.dropout("dropout", x, 0.2);
    x = b.linear("fc", x, 1000);
    return b.finish(x);
}

struct ResNetConfig {
    bool bottleneck;
    int64_t blocks[4];
    int64_t groups = 1;
    int64_t width_per_group = 64;
};

string basic_block(B& b, const string& name, const string& from, int64_t in, int64_t planes, int64_t stride) {
    auto x = b.conv_bn(name + ".1", from, planes, 3, stride, 1);
    x = b.conv_bn(name + ".2", x, planes, 3, 1, 1, 1, "");
    string shortcut = from;
    if (stride != 1 || in != planes) shortcut = b.conv_bn(name + ".downsample", from, planes, 1, stride, 0, 1, "");
    x = b.add(name + ".add", {x, shortcut});
    return b.activation(name + ".relu", x);
}

string bottleneck_block(B& b, const string& name, const string& from, int64_t in, int64_t planes, int64_t stride,
                        const ResNetConfig& cfg) {
    const int64_t width = planes * cfg.width_per_group / 64 * cfg.groups;
    auto x = b.conv_bn(name + ".1", from, width, 1);
    x = b.conv_bn(name + ".2", x, width, 3, stride, 1, cfg.groups);
    x = b.conv_bn(name + ".3", x, planes * 4, 1, 1, 0, 1, "");
    string shortcut = from;
    if (stride != 1 || in != planes * 4) {
        shortcut = b.conv_bn(name + ".downsample", from, planes * 4, 1, stride, 0, 1, "");
    }
    x = b.add(name + ".add", {x, shortcut});
    return b.activation(name + ".relu", x);
}

ArchitectureSpec resnet(const string& name, const string& reference, const ResNetConfig& cfg) {
    B b(name);
    b.note("reference_implementation", reference);
    auto x = b.conv_bn("stem", "input", 64, 7, 2, 3);
    x = b.maxpool("maxpool", x, 3, 2, 1);
    int64_t in = 64;
    const int64_t expansion = cfg.bottleneck ? 4 : 1;
    for (int stage = 0; stage < 4; ++stage) {
        const int64_t planes = 64 << stage;
        for (int64_t i = 0; i < cfg.blocks[stage]; ++i) {
            const int64_t stride = (stage > 0 && i == 0) ? 2 : 1;
            const string id = "layer" + std::to_string(stage + 1) + "." + std::to_string(i);
            x = cfg.bottleneck ? bottleneck_block(b, id, x, in, planes, stride, cfg)
                               : basic_block(b, id, x, in, planes, stride);
            in = planes * expansion;
        }
    }
    x = b.global_avgpool("avgpool", x);
    x = b.flatten("flatten", x);
    x = b.linear("fc", x, 1000);
    return b.finish(x);
}

ArchitectureSpec densenet121() {
    B b("DenseNet121");
    b.note("reference_implementation", "torchvision.models.densenet121 (growth 32, blocks 6-12-24-16)");
    const int64_t growth = 32;
    const int64_t bn_size = 4;
    const int64_t blocks[] = {6, 12, 24, 16};
    auto x = b.conv("features.conv0", "input", 64, 7, 2, 3);
    x = b.batchnorm("features.norm0", x);
    x = b.activation("features.relu0", x);
    x = b.maxpool("features.pool0", x, 3, 2, 1);
    int64_t features = 64;
    for (int block = 0; block < 4; ++block) {
        const string bname = "denseblock" + std::to_string(block + 1);
        for (int64_t layer = 0; layer < blocks[block]; ++layer) {
            const string l = bname + ".layer" + std::to_string(layer + 1);
            auto y = b.batchnorm(l + ".norm1", x);
            y = b.activation(l + ".relu1", y);
            y = b.conv(l + ".conv1", y, bn_size * growth, 1);
            y = b.batchnorm(l + ".norm2", y);
            y = b.activation(l + ".relu2", y);
            y = b.conv(l + ".conv2", y, growth, 3, 1, 1);
            x = b.concat(l + ".cat", {x, y});
            features += growth;
        }
        if (block != 3) {
            const string t = "transition" + std::to_string(block + 1);
            x = b.batchnorm(t + ".norm", x);
            x = b.activation(t + ".relu", x);
            features /= 2;
            x = b.conv(t + ".conv", x, features, 1);
            x = b.avgpool(t + ".pool", x, 2, 2);
        }
    }
    x = b.batchnorm("features.norm5", x);
    x = b.activation("features.relu5", x);
    x = b.global_avgpool("avgpool", x);
    x = b.flatten("flatten", x);
    x = b.linear("classifier", x, 1000);
    return b.finish(x);
}

string fire(B& b, const string& name, const string& from, int64_t squeeze, int64_t expand1x1, int64_t expand3x3) {
    auto s = b.conv(name + ".squeeze", from, squeeze, 1, 1, 0, 1, true);
    s = b.activation(name + ".squeeze_activation", s);
    auto e1 = b.conv(name + ".expand1x1", s, expand1x1, 1, 1, 0, 1, true);
    e1 = b.activation(name + ".expand1x1_activation", e1);
    auto e3 = b.conv(name + ".expand3x3", s, expand3x3, 3, 1, 1, 1, true);
    e3 = b.activation(name + ".expand3x3_activation", e3);
    return b.concat(name + ".cat", {e1, e3});
}

ArchitectureSpec squeezenet11() {
    B b("SqueezeNet_v1_1");
    b.note("reference_implementation", "torchvision.models.squeezenet1_1");
    accuracy_notes(b, "top5", "80.6%", "80.6%", "80.3%", "?");
    auto x = b.conv("features.0", "input", 64, 3, 2, 0, 1, true);
    x = b.activation("features.1", x);
    x = b.maxpool("features.2", x, 3, 2, 0, true);
    x = fire(b, "features.3", x, 16, 64, 64);
    x = fire(b, "features.4", x, 16, 64, 64);
    x = b.maxpool("features.5", x, 3, 2, 0, true);
    x = fire(b, "features.6", x, 32, 128, 128);
    x = fire(b, "features.7", x, 32, 128, 128);
    x = b.maxpool("features.8", x, 3, 2, 0, true);
    x = fire(b, "features.9", x, 48, 192, 192);
    x = fire(b, "features.10", x, 48, 192, 192);
    x = fire(b, "features.11", x, 64, 256, 256);
    x = fire(b, "features.12", x, 64, 256, 256);
    x = b.dropout("classifier.0", x);
    x = b.conv("classifier.1", x, 1000, 1, 1, 0, 1, true);
    x = b.activation("classifier.2", x);
    x = b.global_avgpool("classifier.3", x);
    x = b.flatten("flatten", x);
    return b.finish(x);
}

ArchitectureSpec mobilenet_v1() {
    B b("MobileNet_v1");
    b.note("reference_implementation", "marvis/pytorch-mobilenet (width 1.0, 224)");
    accuracy_notes(b, "top1", "71.0%", "-", "70.6%", "yes");
    auto x = b.conv_bn("model.0", "input", 32, 3, 2, 1);
    struct Dw {
        int64_t out;
        int64_t stride;
    };
    const Dw layers[] = {{64, 1},  {128, 2}, {128, 1}, {256, 2}, {256, 1}, {512, 2},  {512, 1},
                         {512, 1}, {512, 1}, {512, 1}, {512, 1}, {1024, 2}, {1024, 1}};
    int64_t in = 32;
    int index = 1;
    for (const auto& l : layers) {
        const string id = "model." + std::to_string(index++);
        x = b.conv_bn(id + ".dw", x, in, 3, l.stride, 1, in);
        x = b.conv_bn(id + ".pw", x, l.out, 1);
        in = l.out;
    }
    x = b.avgpool("model.14", x, 7, 7);
    x = b.flatten("flatten", x);
    x = b.linear("fc", x, 1000);
    return b.finish(x);
}

ArchitectureSpec mobilenet_v2() {
    B b("MobileNet_v2");
    b.note("reference_implementation", "torchvision.models.mobilenet_v2 (width 1.0)");
    accuracy_notes(b, "top1", "68.5%", "71.9%", "72.0%", "yes");
    auto x = b.conv_bn("features.0", "input", 32, 3, 2, 1, 1, "relu6");
    struct Setting {
        int64_t t, c, n, s;
    };
    const Setting settings[] = {{1, 16, 1, 1},  {6, 24, 2, 2},  {6, 32, 3, 2}, {6, 64, 4, 2},
                                {6, 96, 3, 1},  {6, 160, 3, 2}, {6, 320, 1, 1}};
    int64_t in = 32;
    int index = 1;
    for (const auto& st : settings) {
        for (int64_t i = 0; i < st.n; ++i) {
            const int64_t stride = i == 0 ? st.s : 1;
            const int64_t hidden = in * st.t;
            const string id = "features." + std::to_string(index++);
            auto y = x;
            if (st.t != 1) y = b.conv_bn(id + ".expand", y, hidden, 1, 1, 0, 1, "relu6");
            y = b.conv_bn(id + ".dw", y, hidden, 3, stride, 1, hidden, "relu6");
            y = b.conv_bn(id + ".project", y, st.c, 1, 1, 0, 1, "");
            x = (stride == 1 && in == st.c) ? b.add(id + ".add", {x, y}) : y;
            in = st.c;
        }
    }
    x = b.conv_bn("features.18", x, 1280, 1, 1, 0, 1, "relu6");
    x = b.global_avgpool("avgpool", x);
    x = b.flatten("flatten", x);
    x = b.dropout("classifier.0", x, 0.2);
    x = b.linear("classifier.1", x, 1000);
    return b.finish(x);
}

// Group-convolution unit with channel shuffle; stride-2 units concatenate an
// average-pooled shortcut, stride-1 units add the identity.
string shufflenet_v1_unit(B& b, const string& name, const string& from, int64_t in, int64_t out, int64_t groups,
                          bool grouped_first, bool downsample) {
    const int64_t bottleneck = out / 4;
    const int64_t branch_out = downsample ? out - in : out;
    auto y = b.conv_bn(name + ".compress", from, bottleneck, 1, 1, 0, grouped_first ? groups : 1);
    y = b.shuffle(name + ".shuffle", y, groups);
    y = b.conv_bn(name + ".dw", y, bottleneck, 3, downsample ? 2 : 1, 1, bottleneck, "");
    y = b.conv_bn(name + ".expand", y, branch_out, 1, 1, 0, groups, "");
    string merged;
    if (downsample) {
        auto shortcut = b.avgpool(name + ".shortcut", from, 3, 2, 1);
        merged = b.concat(name + ".cat", {shortcut, y});
    } else {
        merged = b.add(name + ".add", {from, y});
    }
    return b.activation(name + ".relu", merged);
}

ArchitectureSpec shufflenet_v1() {
    B b("ShuffleNet_v1_1x");
    b.note("reference_implementation", "ShuffleNet v1 1x, g=3 (stage widths 240-480-960)");
    accuracy_notes(b, "top1", "64.6%", "-", "67.6%", "yes");
    const int64_t groups = 3;
    auto x = b.conv("conv1", "input", 24, 3, 2, 1);
    x = b.maxpool("maxpool", x, 3, 2, 1);
    const int64_t widths[] = {240, 480, 960};
    const int64_t repeats[] = {3, 7, 3};
    int64_t in = 24;
    for (int stage = 0; stage < 3; ++stage) {
        const string sname = "stage" + std::to_string(stage + 2);
        x = shufflenet_v1_unit(b, sname + ".0", x, in, widths[stage], groups, stage > 0, true);
        in = widths[stage];
        for (int64_t i = 1; i <= repeats[stage]; ++i) {
            x = shufflenet_v1_unit(b, sname + "." + std::to_string(i), x, in, in, groups, true, false);
        }
    }
    x = b.global_avgpool("avgpool", x);
    x = b.flatten("flatten", x);
    x = b.linear("fc", x, 1000);
    return b.finish(x);
}

string shufflenet_v2_unit(B& b, const string& name, const string& from, int64_t in, int64_t out, int64_t stride) {
    const int64_t branch = out / 2;
    string left;
    string right_in;
    if (stride > 1) {
        left = b.conv_bn(name + ".branch1.dw", from, in, 3, stride, 1, in, "");
        left = b.conv_bn(name + ".branch1.pw", left, branch, 1);
        right_in = from;
    } else {
        left = b.slice(name + ".split0", from, 0, branch);
        right_in = b.slice(name + ".split1", from, branch, in);
    }
    auto right = b.conv_bn(name + ".branch2.pw1", right_in, branch, 1);
    right = b.conv_bn(name + ".branch2.dw", right, branch, 3, stride, 1, branch, "");
    right = b.conv_bn(name + ".branch2.pw2", right, branch, 1);
    auto cat = b.concat(name + ".cat", {left, right});
    return b.shuffle(name + ".shuffle", cat, 2);
}

ArchitectureSpec shufflenet_v2(const string& name, const int64_t (&channels)[5], const char* reference) {
    B b(name);
    b.note("reference_implementation", reference);
    auto x = b.conv_bn("conv1", "input", channels[0], 3, 2, 1);
    x = b.maxpool("maxpool", x, 3, 2, 1);
    const int64_t repeats[] = {4, 8, 4};
    int64_t in = channels[0];
    for (int stage = 0; stage < 3; ++stage) {
        const int64_t out = channels[stage + 1];
        for (int64_t i = 0; i < repeats[stage]; ++i) {
            const string id = "stage" + std::to_string(stage + 2) + "." + std::to_string(i);
            x = shufflenet_v2_unit(b, id, x, in, out, i == 0 ? 2 : 1);
            in = out;
        }
    }
    x = b.conv_bn("conv5", x, channels[4], 1);
    x = b.global_avgpool("avgpool", x);
    x = b.flatten("flatten", x);
    x = b.linear("fc", x, 1000);
    return b.finish(x);
}

ArchitectureSpec efficientnet_b0() {
    B b("EfficientNet-b0");
    b.note("reference_implementation", "EfficientNet-b0 (MBConv with squeeze-excite ratio 0.25, swish), 224");
    auto x = b.conv_bn("stem", "input", 32, 3, 2, 1, 1, "swish");
    struct Stage {
        int64_t expand, kernel, stride, out, repeats;
    };
    const Stage stages[] = {{1, 3, 1, 16, 1}, {6, 3, 2, 24, 2},  {6, 5, 2, 40, 2},  {6, 3, 2, 80, 3},
                            {6, 5, 1, 112, 3}, {6, 5, 2, 192, 4}, {6, 3, 1, 320, 1}};
    int64_t in = 32;
    int block = 0;
    for (const auto& st : stages) {
        for (int64_t i = 0; i < st.repeats; ++i) {
            const int64_t stride = i == 0 ? st.stride : 1;
            const int64_t hidden = in * st.expand;
            const string id = "blocks." + std::to_string(block++);
            auto y = x;
            if (st.expand != 1) y = b.conv_bn(id + ".expand", y, hidden, 1, 1, 0, 1, "swish");
            y = b.conv_bn(id + ".dw", y, hidden, st.kernel, stride, (st.kernel - 1) / 2, hidden, "swish");
            y = b.squeeze_excite(id + ".se", y, std::max<int64_t>(1, in / 4));
            y = b.conv_bn(id + ".project", y, st.out, 1, 1, 0, 1, "");
            x = (stride == 1 && in == st.out) ? b.add(id + ".add", {x, y}) : y;
            in = st.out;
        }
    }
    x = b.conv_bn("head", x, 1280, 1, 1, 0, 1, "swish");
    x = b.global_avgpool("avgpool", x);
    x = b.flatten("flatten", x);
    x = b.dropout("dropout", x, 0.2);
    x = b.linear("fc", x, 1000);
    return b.finish(x);
}

struct Entry {
    string name;
    std::function<ArchitectureSpec()> make;
};

const std::vector<Entry>& registry() {
    static const std::vector<Entry> entries = {
        {"VGG-11", vgg11},
        {"Wide_ResNet_50",
         [] {
             return resnet("Wide_ResNet_50", "torchvision.models.wide_resnet50_2",
                           {true, {3, 4, 6, 3}, 1, 128});
         }},
        {"AlexNet", alexnet},
        {"ResNet-50",
         [] {
             auto spec = resnet("ResNet-50", "torchvision.models.resnet50", {true, {3, 4, 6, 3}});
             spec.metadata["top5_final_measured"] = "92.8%";
             spec.metadata["top5_pytorch_examples"] = "92.9%";
             spec.metadata["top5_original_paper"] = "93.3%";
             spec.metadata["single_crop_validation"] = "yes";
             return spec;
         }},
        {"ResNet-34",
         [] { return resnet("ResNet-34", "torchvision.models.resnet34", {false, {3, 4, 6, 3}}); }},
        {"ResNeXt-50",
         [] {
             return resnet("ResNeXt-50", "torchvision.models.resnext50_32x4d", {true, {3, 4, 6, 3}, 32, 4});
         }},
        {"ResNet-18",
         [] { return resnet("ResNet-18", "torchvision.models.resnet18", {false, {2, 2, 2, 2}}); }},
        {"DenseNet121", densenet121},
        {"SqueezeNet_v1_1", squeezenet11},
        {"GoogLeNet", googlenet},
        {"MobileNet_v1", mobilenet_v1},
        {"MobileNet_v2", mobilenet_v2},
        {"ShuffleNet_v2_1_5x",
         [] {
             auto spec = shufflenet_v2("ShuffleNet_v2_1_5x", {24, 176, 352, 704, 1024},
                                       "torchvision.models.shufflenet_v2_x1_5");
             spec.metadata["top1_final_measured"] = "69.3%";
             spec.metadata["top1_pytorch_examples"] = "69.4%";
             spec.metadata["top1_original_paper"] = "71.6%";
             spec.metadata["single_crop_validation"] = "yes";
             return spec;
         }},
        {"ShuffleNet_v1_1x", shufflenet_v1},
        {"ShuffleNet_v2_1x",
         [] {
             return shufflenet_v2("ShuffleNet_v2_1x", {24, 116, 232, 464, 1024},
                                  "torchvision.models.shufflenet_v2_x1_0");
         }},
        {"EfficientNet-b0", efficientnet_b0},
    };
    return entries;
}

} // namespace

std::string normalize_model_name(std::string_view name) {
    std::string out;
    for (char c : name) {
        if (c == '-' || c == '_' || c == ' ' || c == '.') continue;
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
}

const std::vector<std::string>& builtin_arch_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& e : registry()) n.push_back(e.name);
        return n;
    }();
    return names;
}

const std::vector<std::string>& mandatory_arch_names() {
    static const std::vector<std::string> names = {"AlexNet",          "VGG-11",           "GoogLeNet",
                                                   "ResNet-50",        "MobileNet_v1",     "ShuffleNet_v1_1x",
                                                   "ShuffleNet_v2_1x", "EfficientNet-b0"};
    return names;
}

ArchitectureSpec builtin_arch(std::string_view name) {
    const auto key = normalize_model_name(name);
    for (const auto& e : registry()) {
        if (normalize_model_name(e.name) == key) return e.make();
    }
    std::string available;
    for (const auto& e : registry()) available += (available.empty() ? "" : ", ") + e.name;
    throw NotFoundError("unknown architecture '" + std::string(name) + "'; available: " + available);
}

} // namespace algoeff::arch
