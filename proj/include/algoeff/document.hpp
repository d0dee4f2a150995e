#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace algoeff::cli {

enum class Format { markdown, csv, json };

std::optional<Format> parse_format(std::string_view text);

// A rendered value. Numeric cells keep the exact double for JSON output and
// the display text for CSV and markdown.
struct Cell {
    std::string text;
    std::optional<double> number;
    std::optional<bool> flag;
    std::optional<long long> whole;

    Cell() = default;
    Cell(std::string t) : text(std::move(t)) {}
    Cell(const char* t) : text(t) {}

    static Cell num(double value);                      // shortest round-trip text
    static Cell num(double value, std::string display);  // exact value, custom text
    static Cell fixed(double value, int decimals);
    static Cell integer(long long value);
    static Cell boolean(bool value);
};

struct Table {
    std::string name;  // JSON key
    std::string title;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::string> notes;
};

struct Document {
    std::vector<std::pair<std::string, Cell>> fields;
    std::vector<Table> tables;
    std::vector<std::string> warnings;

    void field(std::string key, Cell value) { fields.emplace_back(std::move(key), std::move(value)); }
};

// Locale-independent; identical documents render byte-identically.
void render(const Document& doc, Format format, std::ostream& out);

// Shortest text that parses back to the same double ("0.1", "2.66112e+17").
std::string shortest(double value);
std::string fixed_text(double value, int decimals);

} // namespace algoeff::cli
