#include "algoeff/document.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>

namespace algoeff::cli {

std::optional<Format> parse_format(std::string_view text) {
    if (text == "markdown" || text == "md") return Format::markdown;
    if (text == "csv") return Format::csv;
    if (text == "json") return Format::json;
    return std::nullopt;
}

std::string shortest(double value) {
    if (!std::isfinite(value)) return std::isnan(value) ? "nan" : (value > 0 ? "inf" : "-inf");
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

std::string fixed_text(double value, int decimals) {
    if (!std::isfinite(value)) return shortest(value);
    char buf[512];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, decimals);
    if (ec != std::errc()) return shortest(value);
    std::string out(buf, ptr);
    if (out.find_first_not_of("-0.") == std::string::npos && out.front() == '-') out.erase(0, 1);
    return out;
}

Cell Cell::num(double value) { return num(value, shortest(value)); }

Cell Cell::num(double value, std::string display) {
    Cell c(std::move(display));
    c.number = value;
    return c;
}

Cell Cell::fixed(double value, int decimals) { return num(value, fixed_text(value, decimals)); }

Cell Cell::integer(long long value) {
    Cell c = num(static_cast<double>(value), std::to_string(value));
    c.whole = value;
    return c;
}

Cell Cell::boolean(bool value) {
    Cell c(value ? "yes" : "no");
    c.flag = value;
    return c;
}

namespace {

using ojson = nlohmann::ordered_json;

ojson to_json(const Cell& cell) {
    if (cell.flag) return *cell.flag;
    if (cell.whole) return *cell.whole;
    if (cell.number && std::isfinite(*cell.number)) return *cell.number;
    return cell.text;
}

std::string csv_escape(const std::string& text) {
    if (text.find_first_of(",\"\n\r") == std::string::npos) return text;
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    return out + "\"";
}

std::string md_escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        if (c == '|') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

void render_markdown(const Document& doc, std::ostream& out) {
    for (const auto& [key, value] : doc.fields) out << key << ": " << value.text << '\n';
    for (const auto& table : doc.tables) {
        if (!doc.fields.empty() || &table != &doc.tables.front()) out << '\n';
        if (!table.title.empty()) out << "## " << table.title << "\n\n";
        out << '|';
        for (const auto& c : table.columns) out << ' ' << md_escape(c) << " |";
        out << "\n|";
        for (std::size_t i = 0; i < table.columns.size(); ++i) out << "---|";
        out << '\n';
        for (const auto& row : table.rows) {
            out << '|';
            for (const auto& cell : row) out << ' ' << md_escape(cell.text) << " |";
            out << '\n';
        }
        if (!table.notes.empty()) out << '\n';
        for (const auto& note : table.notes) out << note << '\n';
    }
    if (!doc.warnings.empty()) out << '\n';
    for (const auto& w : doc.warnings) out << "warning: " << w << '\n';
}

void render_csv(const Document& doc, std::ostream& out) {
    for (const auto& [key, value] : doc.fields) out << "# " << key << ": " << value.text << '\n';
    const bool titled = doc.tables.size() > 1;
    for (const auto& table : doc.tables) {
        if (&table != &doc.tables.front()) out << '\n';
        if (titled && !table.title.empty()) out << "# " << table.title << '\n';
        for (std::size_t i = 0; i < table.columns.size(); ++i) {
            out << (i ? "," : "") << csv_escape(table.columns[i]);
        }
        out << '\n';
        for (const auto& row : table.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                const auto& cell = row[i];
                // Full precision in CSV so downstream plots see exact values.
                const std::string text = cell.number && !cell.flag ? shortest(*cell.number) : cell.text;
                out << (i ? "," : "") << csv_escape(text);
            }
            out << '\n';
        }
        for (const auto& note : table.notes) out << "# " << note << '\n';
    }
    for (const auto& w : doc.warnings) out << "# warning: " << w << '\n';
}

void render_json(const Document& doc, std::ostream& out) {
    ojson root = ojson::object();
    for (const auto& [key, value] : doc.fields) root[key] = to_json(value);
    for (const auto& table : doc.tables) {
        ojson rows = ojson::array();
        for (const auto& row : table.rows) {
            ojson o = ojson::object();
            for (std::size_t i = 0; i < row.size() && i < table.columns.size(); ++i) {
                o[table.columns[i]] = to_json(row[i]);
            }
            rows.push_back(std::move(o));
        }
        root[table.name] = std::move(rows);
        if (!table.notes.empty()) root[table.name + "_notes"] = table.notes;
    }
    root["warnings"] = doc.warnings;
    out << root.dump(2) << '\n';
}

} // namespace

void render(const Document& doc, Format format, std::ostream& out) {
    switch (format) {
    case Format::markdown: render_markdown(doc, out); break;
    case Format::csv: render_csv(doc, out); break;
    case Format::json: render_json(doc, out); break;
    }
}

} // namespace algoeff::cli
