#pragma once

#include <cstddef>
#include <set>
#include <string>

#include "mesur/ontology/vocab.hpp"
#include "mesur/sidecar/sidecar.hpp"
#include "mesur/store/triple_store.hpp"

namespace mesur::sidecar {

struct MappingOptions {
    /// Organization credited on every Event (hasProvider). Must be an absolute IRI.
    std::string provider = "urn:mesur:provider:default";
    /// rdf:type given to units and to groups.
    std::string unit_class = std::string(vocab::kArticle);
    std::string group_class = std::string(vocab::kJournal);
    /// Mint an Organization and an Affiliation context from the usage
    /// record's affiliation column.
    bool mint_affiliations = false;
};

struct MappingReport {
    std::size_t publishes = 0;
    std::size_t uses = 0;
    std::size_t citations = 0;
    std::size_t affiliations = 0;
    std::size_t triples_added = 0;
};

/// IRIs minted by the mapping, all deterministic functions of record content.
///   group root     urn:mesur:group:<hash(normalized collection)>
///   group edition  <root>/issue-<hash(volume, issue)> | <root>/year-<year> | <root>/default
///   agents         urn:mesur:agent:<hash(role, normalized name, provider)>
///   contexts       urn:mesur:publishes:<doc_id>, urn:mesur:uses:<event_id>,
///                  urn:mesur:citation:<hash>, urn:mesur:affiliation:<hash>
std::string group_root_iri(const std::string& collection);
std::string group_edition_iri(const BiblioRecord& record);
std::string author_iri(const std::string& name, const std::string& provider);
std::string organization_iri(const std::string& name, const std::string& provider);
std::string user_iri(const std::string& agent, const std::string& provider);
std::string publishes_iri(const BiblioRecord& record);
std::string citation_iri(const CitationRecord& record);

/// Predicates whose objects may be literals after mapping. Titles, names,
/// pages, volumes and issues stay in the sidecar.
const std::set<std::string>& literal_predicates();

/// Writes one Publishes context per bibliographic record, one Uses context per
/// usage record and one Unit-to-Unit Citation per citation record.
MappingReport map_to_graph(const Sidecar& sidecar, store::TripleStore& store, const MappingOptions& options = {});

}  // namespace mesur::sidecar
