#include "mesur/rdf/datetime.hpp"

#include <algorithm>
#include <cctype>

namespace mesur::rdf {

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view s) : s_(s) {}

    bool done() const { return pos_ == s_.size(); }
    char peek() const { return done() ? '\0' : s_[pos_]; }
    bool eat(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    std::optional<int> digits(std::size_t n) {
        if (s_.size() - pos_ < n) return std::nullopt;
        int v = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const char c = s_[pos_ + i];
            if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
            v = v * 10 + (c - '0');
        }
        pos_ += n;
        return v;
    }
    std::string digit_run() {
        const std::size_t start = pos_;
        while (!done() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

bool is_leap(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

int days_in_month(int y, int m) {
    static constexpr int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    return m == 2 && is_leap(y) ? 29 : kDays[m - 1];
}

bool parse_zone(Cursor& c) {
    if (c.done()) return true;
    if (c.eat('Z')) return c.done();
    if (!c.eat('+') && !c.eat('-')) return false;
    auto hh = c.digits(2);
    if (!hh || *hh > 14 || !c.eat(':')) return false;
    auto mm = c.digits(2);
    return mm && *mm < 60 && c.done();
}

template <typename T>
int cmp(const T& a, const T& b) {
    return a < b ? -1 : (b < a ? 1 : 0);
}

}  // namespace

std::optional<DateTime> parse_datetime(std::string_view text) {
    Cursor c(text);
    DateTime dt;
    auto year = c.digits(4);
    if (!year) return std::nullopt;
    dt.year = *year;
    dt.precision = TimePrecision::Year;
    if (c.done()) return dt;

    if (!c.eat('-')) return std::nullopt;
    auto month = c.digits(2);
    if (!month || *month < 1 || *month > 12) return std::nullopt;
    dt.month = *month;
    dt.precision = TimePrecision::Month;
    if (c.done()) return dt;

    if (!c.eat('-')) return std::nullopt;
    auto day = c.digits(2);
    if (!day || *day < 1 || *day > days_in_month(dt.year, dt.month)) return std::nullopt;
    dt.day = *day;
    dt.precision = TimePrecision::Day;
    if (c.done()) return dt;

    if (!c.eat('T')) return std::nullopt;
    auto hour = c.digits(2);
    if (!hour || *hour > 23 || !c.eat(':')) return std::nullopt;
    auto minute = c.digits(2);
    if (!minute || *minute > 59) return std::nullopt;
    dt.hour = *hour;
    dt.minute = *minute;
    dt.precision = TimePrecision::Minute;
    if (c.eat(':')) {
        auto second = c.digits(2);
        if (!second || *second > 59) return std::nullopt;
        dt.second = *second;
        dt.precision = TimePrecision::Second;
        if (c.eat('.')) {
            dt.fraction = c.digit_run();
            if (dt.fraction.empty()) return std::nullopt;
        }
    }
    if (!parse_zone(c)) return std::nullopt;
    return dt;
}

std::optional<std::string> normalize_datetime(std::string_view text) {
    std::string s(text);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string::npos) return std::nullopt;
    s.erase(0, first);
    // "YYYY-MM-DD hh:mm..." -> "YYYY-MM-DDThh:mm..."
    if (s.size() > 10 && s[10] == ' ') s[10] = 'T';
    if (!parse_datetime(s)) return std::nullopt;
    return s;
}

int compare_datetime(const DateTime& a, const DateTime& b) {
    const TimePrecision p = std::min(a.precision, b.precision);
    if (int r = cmp(a.year, b.year)) return r;
    if (p == TimePrecision::Year) return 0;
    if (int r = cmp(a.month, b.month)) return r;
    if (p == TimePrecision::Month) return 0;
    if (int r = cmp(a.day, b.day)) return r;
    if (p == TimePrecision::Day) return 0;
    if (int r = cmp(a.hour, b.hour)) return r;
    if (int r = cmp(a.minute, b.minute)) return r;
    if (p == TimePrecision::Minute) return 0;
    if (int r = cmp(a.second, b.second)) return r;
    std::string fa = a.fraction, fb = b.fraction;
    const std::size_t width = std::max(fa.size(), fb.size());
    fa.resize(width, '0');
    fb.resize(width, '0');
    return cmp(fa, fb);
}

}  // namespace mesur::rdf
