#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace mesur::rdf {

/// Fractional digits used for every decimal value the system produces.
inline constexpr int kDecimalPrecision = 6;

bool is_integer_lexical(std::string_view s) noexcept;
bool is_decimal_lexical(std::string_view s) noexcept;

/// Exact three-way comparison of two integer/decimal lexical forms.
/// Both arguments must satisfy is_decimal_lexical (integers do).
int compare_numeric(std::string_view a, std::string_view b);

/// numerator / denominator rounded half-to-even to `precision` fractional
/// digits, rendered with exactly that many digits ("2.500000").
/// Throws InvalidArgument when denominator is zero.
std::string format_quotient(std::int64_t numerator, std::int64_t denominator,
                            int precision = kDecimalPrecision);

}  // namespace mesur::rdf
