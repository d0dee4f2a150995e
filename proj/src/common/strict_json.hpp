#pragma once

#include "algoeff/error.hpp"

#include <json.hpp>

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>

namespace algoeff::detail {

using json = nlohmann::json;

// Field access on a JSON object that reports the dotted path of bad values.
class StrictObject {
public:
    StrictObject(const json& value, std::string path) : value_(value), path_(std::move(path)) {
        if (!value_.is_object()) throw ParseError(path_ + ": expected an object");
    }

    // Rejects keys not listed.
    void allow_only(std::initializer_list<std::string_view> keys) const {
        for (const auto& item : value_.items()) {
            bool known = false;
            for (auto k : keys) known = known || item.key() == k;
            if (!known) throw ParseError(path_ + ": unknown field '" + item.key() + "'");
        }
    }

    bool has(const char* key) const { return value_.contains(key) && !value_.at(key).is_null(); }

    const json& raw(const char* key) const {
        if (!has(key)) throw ParseError(path_ + ": missing field '" + key + "'");
        return value_.at(key);
    }

    std::string path(const char* key) const { return path_ + "." + key; }

    std::string string(const char* key) const {
        const auto& v = raw(key);
        if (!v.is_string()) throw ParseError(path(key) + ": expected a string");
        return v.get<std::string>();
    }

    std::int64_t integer(const char* key) const {
        const auto& v = raw(key);
        if (!v.is_number_integer()) throw ParseError(path(key) + ": expected an integer");
        return v.get<std::int64_t>();
    }

    std::int64_t integer_or(const char* key, std::int64_t fallback) const {
        return has(key) ? integer(key) : fallback;
    }

    double number(const char* key) const {
        const auto& v = raw(key);
        if (!v.is_number()) throw ParseError(path(key) + ": expected a number");
        return v.get<double>();
    }

    std::optional<double> optional_number(const char* key) const {
        if (!has(key)) return std::nullopt;
        return number(key);
    }

    bool boolean_or(const char* key, bool fallback) const {
        if (!has(key)) return fallback;
        const auto& v = raw(key);
        if (!v.is_boolean()) throw ParseError(path(key) + ": expected true or false");
        return v.get<bool>();
    }

private:
    const json& value_;
    std::string path_;
};

inline json parse_json_text(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

} // namespace algoeff::detail
