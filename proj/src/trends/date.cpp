#include "algoeff/date.hpp"

#include "algoeff/error.hpp"

#include <charconv>
#include <cstdio>

namespace algoeff {

namespace {

bool parse_digits(std::string_view text, int& out) {
    for (char c : text) {
        if (c < '0' || c > '9') return false;
    }
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc() && ptr == text.data() + text.size();
}

} // namespace

Date::Date(int year, unsigned month, unsigned day)
    : ymd_(std::chrono::year{year}, std::chrono::month{month}, std::chrono::day{day}) {
    if (!ymd_.ok()) throw ValidationError("invalid calendar date");
}

Date Date::parse(std::string_view iso) {
    int y = 0;
    int m = 0;
    int d = 0;
    if (iso.size() != 10 || iso[4] != '-' || iso[7] != '-' || !parse_digits(iso.substr(0, 4), y) ||
        !parse_digits(iso.substr(5, 2), m) || !parse_digits(iso.substr(8, 2), d)) {
        throw ParseError("date '" + std::string(iso) + "' is not YYYY-MM-DD");
    }
    std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{static_cast<unsigned>(m)},
                                    std::chrono::day{static_cast<unsigned>(d)}};
    if (!ymd.ok()) throw ParseError("date '" + std::string(iso) + "' does not exist");
    return Date(y, static_cast<unsigned>(m), static_cast<unsigned>(d));
}

std::string Date::iso() const {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd_.year()),
                  static_cast<unsigned>(ymd_.month()), static_cast<unsigned>(ymd_.day()));
    return buf;
}

std::int64_t Date::days_since_epoch() const {
    return std::chrono::sys_days(ymd_).time_since_epoch().count();
}

double Date::decimal_year() const {
    const Date start(year(), 1, 1);
    const Date next(year() + 1, 1, 1);
    const double span = static_cast<double>(next.days_since_epoch() - start.days_since_epoch());
    return year() + static_cast<double>(days_since_epoch() - start.days_since_epoch()) / span;
}

double months_between(const Date& from, const Date& to) {
    return static_cast<double>(to.days_since_epoch() - from.days_since_epoch()) / kDaysPerMonth;
}

std::string_view to_string(TimeUnit unit) {
    switch (unit) {
    case TimeUnit::days: return "days";
    case TimeUnit::months: return "months";
    case TimeUnit::years: return "years";
    }
    return "unknown";
}

Duration Duration::parse(std::string_view text) {
    double value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr == text.data()) {
        throw ParseError("duration '" + std::string(text) + "' must start with a number");
    }
    std::string_view suffix(ptr, static_cast<std::size_t>(text.data() + text.size() - ptr));
    if (suffix.starts_with(' ')) suffix.remove_prefix(1);
    if (suffix.empty() || suffix == "mo" || suffix == "month" || suffix == "months") return months(value);
    if (suffix == "d" || suffix == "day" || suffix == "days") return days(value);
    if (suffix == "y" || suffix == "yr" || suffix == "year" || suffix == "years") return years(value);
    throw ParseError("duration '" + std::string(text) + "' has unknown unit '" + std::string(suffix) + "'");
}

double Duration::in_months() const {
    switch (unit) {
    case TimeUnit::days: return value / kDaysPerMonth;
    case TimeUnit::months: return value;
    case TimeUnit::years: return value * 12.0;
    }
    return value;
}

double Duration::in_days() const { return unit == TimeUnit::days ? value : in_months() * kDaysPerMonth; }

Duration Duration::as(TimeUnit target) const {
    if (target == unit) return *this;
    switch (target) {
    case TimeUnit::days: return days(in_days());
    case TimeUnit::months: return months(in_months());
    case TimeUnit::years: return years(in_months() / 12.0);
    }
    return *this;
}

std::string Duration::str(int decimals) const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f %s", decimals, value, std::string(to_string(unit)).c_str());
    return buf;
}

} // namespace algoeff
