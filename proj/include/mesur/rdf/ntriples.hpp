#pragma once

#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mesur/rdf/term.hpp"

namespace mesur::rdf {

/// Streams triples out of line-oriented N-Triples text. Blank and comment
/// lines are skipped. Errors are reported as ParseError with the 1-based line
/// and column of the offending character.
///
/// Literal datatypes are restricted to xsd:string, xsd:integer, xsd:decimal
/// and xsd:dateTime; language tags are not supported.
void parse_ntriples(std::istream& in, const std::function<void(Triple&&)>& sink);
std::vector<Triple> parse_ntriples(std::istream& in);
std::vector<Triple> parse_ntriples(std::string_view text);

/// Canonical serialization: one "S P O .\n" line per triple, single spaces,
/// string literals without a datatype suffix.
void serialize_ntriples(std::span<const Triple> triples, std::ostream& out);
std::string serialize_ntriples(std::span<const Triple> triples);
void write_ntriples_line(const Triple& t, std::ostream& out);

/// Escaped forms used by the serializer.
std::string escape_iri(std::string_view iri);
std::string escape_string(std::string_view s);

}  // namespace mesur::rdf
