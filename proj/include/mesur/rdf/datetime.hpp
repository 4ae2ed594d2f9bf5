#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace mesur::rdf {

/// Precision of an ISO-8601 date/time value, coarsest first.
enum class TimePrecision { Year, Month, Day, Minute, Second };

/// A parsed ISO-8601 calendar date/time. Reduced-precision forms are kept at
/// their stated precision ("2007" is a whole year, not 2007-01-01T00:00).
struct DateTime {
    int year = 0;
    int month = 1;
    int day = 1;
    int hour = 0;
    int minute = 0;
    int second = 0;
    std::string fraction;  // digits after the decimal point of the seconds, if any
    TimePrecision precision = TimePrecision::Year;
};

/// Accepts YYYY, YYYY-MM, YYYY-MM-DD, YYYY-MM-DDThh:mm[:ss[.f+]] with an
/// optional Z or +hh:mm / -hh:mm zone designator (the zone is validated but
/// not used for ordering).
std::optional<DateTime> parse_datetime(std::string_view text);

/// Normalizes a loosely written timestamp ("2006-09-27 00:00:03") to the
/// ISO-8601 'T' form. Returns nullopt if the result does not parse.
std::optional<std::string> normalize_datetime(std::string_view text);

/// Three-way comparison at the coarser precision of the two operands.
/// Year-precision values therefore compare by year only.
int compare_datetime(const DateTime& a, const DateTime& b);

}  // namespace mesur::rdf
