#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace mesur::sidecar {

/// Splits one line on tabs. A trailing '\r' is dropped first.
std::vector<std::string> split_tsv(std::string_view line);

/// Backslash escaping for fields stored in the sidecar file: \\ \t \n \r.
std::string escape_field(std::string_view s);
/// Inverse of escape_field; also accepts \[ for a literal '['.
/// Throws FormatError on a dangling or unknown escape.
std::string unescape_field(std::string_view s);

/// Trims, collapses runs of whitespace to one space and lowercases ASCII.
std::string normalize_name(std::string_view s);

/// Percent-encodes everything except ASCII letters, digits and -._~/: so the
/// result can sit inside an IRI; injective because '%' itself is encoded.
std::string percent_encode(std::string_view s);
std::string percent_decode(std::string_view s);

}  // namespace mesur::sidecar
