#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "mesur/rdf/term.hpp"

namespace mesur::rdf {

namespace ns {
inline constexpr std::string_view kMesur = "http://www.mesur.org/schemas/2007-01/mesur#";
inline constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kOwl = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
}  // namespace ns

/// prefix -> IRI base map used to expand and compact prefixed names.
class NamespaceTable {
public:
    /// An empty table.
    NamespaceTable() = default;

    /// mesur, rdf, rdfs, owl and xsd, plus the pass-through "urn" prefix so
    /// that names such as urn:issn:1082-9873 read as themselves.
    static const NamespaceTable& defaults();

    /// Registers a prefix. Re-registering the same prefix with the same base
    /// is a no-op; with a different base it throws InvalidArgument.
    void add(std::string prefix, std::string base);

    bool contains(std::string_view prefix) const;
    std::optional<std::string> base(std::string_view prefix) const;

    /// Expands "prefix:local". Throws UnknownPrefixError for unregistered
    /// prefixes and InvalidArgument if the text has no ':'.
    Term expand(std::string_view curie) const;

    /// Shortest prefixed form of the IRI using the longest matching base,
    /// or nullopt if no base matches.
    std::optional<std::string> compact(std::string_view iri) const;

    const std::map<std::string, std::string, std::less<>>& entries() const noexcept { return prefixes_; }

private:
    std::map<std::string, std::string, std::less<>> prefixes_;
};

}  // namespace mesur::rdf
