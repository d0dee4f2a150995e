#pragma once

#include <chrono>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace algoeff {

// Average Gregorian month.
inline constexpr double kDaysPerMonth = 365.25 / 12.0;

class Date {
public:
    Date() = default;
    Date(int year, unsigned month, unsigned day);

    // Strict YYYY-MM-DD. Throws ParseError.
    static Date parse(std::string_view iso);

    std::string iso() const;
    int year() const { return static_cast<int>(ymd_.year()); }
    std::int64_t days_since_epoch() const;
    // Fractional year, e.g. 2012.75 for early October 2012.
    double decimal_year() const;

    friend double months_between(const Date& from, const Date& to);
    friend bool operator==(const Date& a, const Date& b) { return a.ymd_ == b.ymd_; }
    friend auto operator<=>(const Date& a, const Date& b) { return a.ymd_ <=> b.ymd_; }

private:
    std::chrono::year_month_day ymd_{std::chrono::year{1970}, std::chrono::month{1}, std::chrono::day{1}};
};

// (to - from) in average months; negative when `to` precedes `from`.
double months_between(const Date& from, const Date& to);

enum class TimeUnit { days, months, years };

struct Duration {
    double value = 0.0;
    TimeUnit unit = TimeUnit::months;

    static Duration days(double v) { return {v, TimeUnit::days}; }
    static Duration months(double v) { return {v, TimeUnit::months}; }
    static Duration years(double v) { return {v, TimeUnit::years}; }

    // Accepts "<number>[d|days|mo|months|y|years]"; a bare number is months.
    static Duration parse(std::string_view text);

    double in_months() const;
    double in_days() const;
    Duration as(TimeUnit target) const;
    // e.g. "6.1 months", "25.8 days".
    std::string str(int decimals = 1) const;
};

std::string_view to_string(TimeUnit unit);

} // namespace algoeff
