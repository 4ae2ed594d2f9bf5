#include "mesur/rdf/decimal.hpp"

#include <cctype>

#include "mesur/error.hpp"

namespace mesur::rdf {

__extension__ typedef __int128 I128;
__extension__ typedef unsigned __int128 U128;

namespace {

bool all_digits(std::string_view s) {
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

struct Magnitude {
    bool negative = false;
    std::string_view integer;   // no leading zeros
    std::string_view fraction;  // no trailing zeros
    bool is_zero() const { return integer.empty() && fraction.empty(); }
};

Magnitude split(std::string_view s) {
    Magnitude m;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        m.negative = s[0] == '-';
        s.remove_prefix(1);
    }
    const auto dot = s.find('.');
    std::string_view ip = s.substr(0, dot);
    std::string_view fp = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
    while (!ip.empty() && ip.front() == '0') ip.remove_prefix(1);
    while (!fp.empty() && fp.back() == '0') fp.remove_suffix(1);
    m.integer = ip;
    m.fraction = fp;
    if (m.is_zero()) m.negative = false;
    return m;
}

int compare_magnitude(const Magnitude& a, const Magnitude& b) {
    if (a.integer.size() != b.integer.size()) return a.integer.size() < b.integer.size() ? -1 : 1;
    if (int c = a.integer.compare(b.integer)) return c < 0 ? -1 : 1;
    if (int c = a.fraction.compare(b.fraction)) return c < 0 ? -1 : 1;
    return 0;
}

}  // namespace

bool is_integer_lexical(std::string_view s) noexcept {
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
    return !s.empty() && all_digits(s);
}

bool is_decimal_lexical(std::string_view s) noexcept {
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
    const auto dot = s.find('.');
    if (dot == std::string_view::npos) return !s.empty() && all_digits(s);
    const auto ip = s.substr(0, dot);
    const auto fp = s.substr(dot + 1);
    return (!ip.empty() || !fp.empty()) && all_digits(ip) && all_digits(fp);
}

int compare_numeric(std::string_view a, std::string_view b) {
    const Magnitude ma = split(a);
    const Magnitude mb = split(b);
    if (ma.negative != mb.negative) return ma.negative ? -1 : 1;
    const int c = compare_magnitude(ma, mb);
    return ma.negative ? -c : c;
}

std::string format_quotient(std::int64_t numerator, std::int64_t denominator, int precision) {
    if (denominator == 0) throw InvalidArgument("division by zero");
    if (precision < 0 || precision > 18) throw InvalidArgument("precision out of range");
    const bool negative = (numerator < 0) != (denominator < 0) && numerator != 0;
    U128 num = numerator < 0 ? -static_cast<I128>(numerator) : numerator;
    const U128 den = denominator < 0 ? -static_cast<I128>(denominator) : denominator;
    U128 scale = 1;
    for (int i = 0; i < precision; ++i) scale *= 10;
    num *= scale;
    U128 q = num / den;
    const U128 r = num % den;
    if (2 * r > den || (2 * r == den && (q & 1) != 0)) ++q;

    std::string digits;
    do {
        digits.insert(digits.begin(), static_cast<char>('0' + static_cast<int>(q % 10)));
        q /= 10;
    } while (q != 0);
    while (digits.size() < static_cast<std::size_t>(precision) + 1) digits.insert(digits.begin(), '0');

    std::string out = negative ? "-" : "";
    out += digits.substr(0, digits.size() - precision);
    if (precision > 0) {
        out += '.';
        out += digits.substr(digits.size() - precision);
    }
    return out;
}

}  // namespace mesur::rdf
