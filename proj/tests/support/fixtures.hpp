#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mesur/rdf/term.hpp"
#include "mesur/store/triple_store.hpp"

namespace mesur::testkit {

inline constexpr std::string_view kSourceJournal = "urn:issn:1751-1577";
inline constexpr std::string_view kSinkJournal = "urn:issn:0138-9130";
inline constexpr std::string_view kImpactJournal = "urn:issn:1082-9873";

store::TripleStore make_store(const std::vector<rdf::Triple>& triples);

/// About fifty hand-placed contexts over the three journals the listings
/// name, with the two listed coauthors, usage in 2007 and affiliations.
std::vector<rdf::Triple> listing_fixture();

/// Ten units of kImpactJournal published 2005-2006, cited 25 times by units
/// published in 2007 and used 40 times in 2007, plus citations and usage
/// that must not count (wrong year, out-of-window units, other journals).
std::vector<rdf::Triple> impact_fixture();

/// Random MESUR contexts: Publishes, Uses, Citation and Affiliation nodes
/// over shared pools of units, groups (with partOf chains), agents and
/// years. Some contexts omit optional properties, some units are not
/// Articles, and a few inferred triples are present up front.
std::vector<rdf::Triple> random_context_store(std::uint64_t seed, std::size_t contexts);

/// Arbitrary well-formed triples: IRIs, blank nodes and literals of every
/// datatype, including strings that need escaping. Every blank node carries
/// a distinguishing literal so blank-node isomorphism is decidable by hashing.
std::vector<rdf::Triple> random_triples(std::uint64_t seed, std::size_t count);

/// Dense synthetic graph for the scale test: n distinct triples.
std::vector<rdf::Triple> synthetic_triples(std::uint64_t seed, std::size_t count);

/// Tab-separated inputs for the sidecar: the two example rows followed by
/// `generated` synthetic bibliographic records, two usage events per record
/// and a citation per record.
struct SidecarCorpus {
    std::string biblio;
    std::string usage;
    std::string citations;
    std::vector<std::string> titles;
    std::vector<std::string> author_names;
    std::vector<std::string> pages;
};
SidecarCorpus sidecar_corpus(std::uint64_t seed, std::size_t generated);

inline constexpr std::string_view kExampleDocId = "b5e1ab73-26b5-41f0-a83f-b47b4d737";
inline constexpr std::string_view kExampleDoi = "10.1177/0165551506062327";
inline constexpr std::string_view kExampleEventId = "45563ac2-c7d4-4669-ab9c-ac5129535ee5";

}  // namespace mesur::testkit
