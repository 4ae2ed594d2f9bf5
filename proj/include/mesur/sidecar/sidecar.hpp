#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mesur/rdf/term.hpp"

namespace mesur::sidecar {

/// One bibliographic row. Everything but doc_id is optional.
struct BiblioRecord {
    std::string doc_id;
    std::string title;
    std::vector<std::string> authors;
    std::string collection;
    std::string publisher;
    std::string date;  // ISO-8601 after normalization
    std::string start_page;
    std::string end_page;
    std::string volume;
    std::string issue;
    std::string doi;

    friend bool operator==(const BiblioRecord&, const BiblioRecord&) = default;
};

/// One usage event, tied to a bibliographic record through doc_id.
struct UsageRecord {
    std::string event_id;
    std::string time;  // ISO-8601 after normalization
    std::string agent;
    std::string session;
    std::string affiliation;
    std::string doc_id;
    std::string access_type;

    friend bool operator==(const UsageRecord&, const UsageRecord&) = default;
};

/// citing doc_id -> cited doc_id.
struct CitationRecord {
    std::string citing;
    std::string cited;

    friend bool operator==(const CitationRecord&, const CitationRecord&) = default;
};

struct Rejection {
    std::size_t line = 0;  // 1-based line in the input, 0 for direct adds
    std::string reason;
};

struct IngestReport {
    std::size_t loaded = 0;
    std::size_t rejected = 0;
    std::vector<Rejection> rejections;
};

/// Graph IRIs derived from record keys.
///   unit    urn:doi:<doi>             when the record has a doi
///           urn:mesur:doc:<doc_id>    otherwise
///   uses    urn:mesur:uses:<event_id>
/// Keys are percent-encoded, so each mapping is injective.
std::string unit_iri(const BiblioRecord& record);
std::string uses_iri(const UsageRecord& record);

/// doc_id <-> unit IRI and event_id <-> Uses IRI, both bijective.
class IdMap {
public:
    std::optional<std::string> unit_for(std::string_view doc_id) const;
    std::optional<std::string> doc_for(std::string_view iri) const;
    std::optional<std::string> uses_for(std::string_view event_id) const;
    std::optional<std::string> event_for(std::string_view iri) const;

    std::size_t documents() const noexcept { return doc_to_iri_.size(); }
    std::size_t events() const noexcept { return event_to_iri_.size(); }

private:
    friend class Sidecar;
    std::map<std::string, std::string, std::less<>> doc_to_iri_, iri_to_doc_;
    std::map<std::string, std::string, std::less<>> event_to_iri_, iri_to_event_;
};

struct Resolution {
    std::variant<BiblioRecord, UsageRecord> record;
    rdf::Term iri;
};

/// Relational-style record tables kept outside the triple store, indexed by
/// doc_id, doi and event_id.
class Sidecar {
public:
    /// Tab-separated input with a header line naming the columns. Authors
    /// are separated by '|'. Bad rows are rejected individually; a header
    /// without the key column throws FormatError.
    ///   biblio:    title authors collection publisher date start_page end_page volume issue doi doc_id
    ///   usage:     event_id time agent session affiliation doc_id [access_type]
    ///   citations: citing cited
    IngestReport ingest_biblio(std::istream& in);
    IngestReport ingest_usage(std::istream& in);
    IngestReport ingest_citations(std::istream& in);

    /// Single-record adds; return the rejection reason, or nullopt if stored.
    std::optional<std::string> add_biblio(BiblioRecord record);
    std::optional<std::string> add_usage(UsageRecord record);
    std::optional<std::string> add_citation(CitationRecord record);

    const BiblioRecord* find_biblio(std::string_view doc_id) const;
    const BiblioRecord* find_by_doi(std::string_view doi) const;
    const UsageRecord* find_usage(std::string_view event_id) const;

    const std::vector<BiblioRecord>& biblio() const noexcept { return biblio_; }
    const std::vector<UsageRecord>& usage() const noexcept { return usage_; }
    const std::vector<CitationRecord>& citations() const noexcept { return citations_; }
    const IdMap& ids() const noexcept { return ids_; }

    /// Looks up a doc_id, event_id, unit IRI or Uses IRI. Throws NotFoundError.
    Resolution resolve(std::string_view id) const;

    /// "mesur-sidecar\t1", then [biblio], [usage] and [citations] sections,
    /// each a column header followed by escaped rows.
    void save(std::ostream& out) const;
    static Sidecar load(std::istream& in);
    void save_file(const std::string& path) const;
    /// A missing file yields an empty sidecar.
    static Sidecar load_file(const std::string& path);

    friend bool operator==(const Sidecar& a, const Sidecar& b) {
        return a.biblio_ == b.biblio_ && a.usage_ == b.usage_ && a.citations_ == b.citations_;
    }

private:
    std::vector<BiblioRecord> biblio_;
    std::vector<UsageRecord> usage_;
    std::vector<CitationRecord> citations_;
    std::map<std::string, std::size_t, std::less<>> by_doc_, by_doi_, by_event_;
    std::map<std::pair<std::string, std::string>, std::size_t> by_citation_;
    IdMap ids_;
};

}  // namespace mesur::sidecar
