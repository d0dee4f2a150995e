#include "algoeff/curves.hpp"
#include "algoeff/error.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace algoeff::curves {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto comma = line.find(',', start);
        out.push_back(trim(line.substr(start, comma == std::string_view::npos ? comma : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

template <typename T>
bool parse_number(std::string_view text, T& value) {
    if (text.empty()) return false;
    if (text.front() == '+') text.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    return ec == std::errc() && ptr == text.data() + text.size();
}

} // namespace

LearningCurve parse_curve(std::string_view text, const CsvOptions& options) {
    LearningCurve curve;
    curve.model = options.model;
    curve.dataset = options.dataset;
    curve.metric = "top5";

    std::size_t line_no = 0;
    std::size_t columns = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        const auto line = trim(raw);
        if (line.empty() || line.front() == '#') continue;

        if (columns == 0) {
            if (line == "epoch,top5_accuracy") {
                columns = 2;
            } else if (line == "epoch,top5_accuracy,cumulative_flops") {
                columns = 3;
            } else {
                throw ParseError("header must be 'epoch,top5_accuracy[,cumulative_flops]', got '" +
                                     std::string(line) + "'",
                                 line_no);
            }
            continue;
        }

        const auto fields = split_fields(line);
        if (fields.size() != columns) {
            throw ParseError("expected " + std::to_string(columns) + " fields, got " + std::to_string(fields.size()),
                             line_no);
        }
        CurvePoint point;
        if (!parse_number(fields[0], point.epoch)) {
            throw ParseError("epoch '" + std::string(fields[0]) + "' is not an integer", line_no);
        }
        if (point.epoch < 1) throw ParseError("epoch must be >= 1", line_no);
        if (!parse_number(fields[1], point.accuracy)) {
            throw ParseError("accuracy '" + std::string(fields[1]) + "' is not a number", line_no);
        }
        if (options.percent) point.accuracy /= 100.0;
        if (!(point.accuracy >= 0.0 && point.accuracy <= 1.0)) {
            throw ParseError("accuracy " + std::string(fields[1]) + " outside [0,1]" +
                                 (options.percent ? " after percent scaling" : ""),
                             line_no);
        }
        if (columns == 3) {
            double flops = 0;
            if (!parse_number(fields[2], flops) || !(flops >= 0.0)) {
                throw ParseError("cumulative_flops '" + std::string(fields[2]) + "' is not a non-negative number",
                                 line_no);
            }
            point.cumulative_flops = flops;
        }
        if (!curve.points.empty()) {
            const auto& prev = curve.points.back();
            if (point.epoch <= prev.epoch) {
                throw ParseError("epoch " + std::to_string(point.epoch) + " does not increase on " +
                                     std::to_string(prev.epoch),
                                 line_no);
            }
            if (point.cumulative_flops && *point.cumulative_flops < *prev.cumulative_flops) {
                throw ParseError("cumulative_flops decreases", line_no);
            }
        }
        curve.points.push_back(point);
    }
    if (columns == 0) throw ParseError("missing header 'epoch,top5_accuracy'");
    if (curve.points.empty()) throw ParseError("curve has no data rows");
    return curve;
}

LearningCurve load_curve_file(const std::string& path, const CsvOptions& options) {
    std::ifstream in(path);
    if (!in) throw NotFoundError("curve file not found: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_curve(buffer.str(), options);
    } catch (const ParseError& e) {
        throw e.in_file(path);
    }
}

} // namespace algoeff::curves
