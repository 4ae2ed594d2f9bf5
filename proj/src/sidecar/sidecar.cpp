#include "mesur/sidecar/sidecar.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>

#include "mesur/error.hpp"
#include "mesur/rdf/datetime.hpp"
#include "mesur/sidecar/tsv.hpp"

namespace mesur::sidecar {

namespace {

constexpr std::array<std::string_view, 11> kBiblioColumns = {
    "title", "authors", "collection", "publisher", "date", "start_page", "end_page", "volume", "issue", "doi", "doc_id"};
constexpr std::array<std::string_view, 7> kUsageColumns = {"event_id", "time",   "agent",      "session",
                                                           "affiliation", "doc_id", "access_type"};
constexpr std::array<std::string_view, 2> kCitationColumns = {"citing", "cited"};

constexpr std::string_view kMagic = "mesur-sidecar\t1";

std::vector<std::string> split_authors(std::string_view s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        auto bar = s.find('|', start);
        if (bar == std::string_view::npos) bar = s.size();
        std::string name(s.substr(start, bar - start));
        auto b = name.find_first_not_of(" \t");
        auto e = name.find_last_not_of(" \t");
        if (b != std::string::npos) out.push_back(name.substr(b, e - b + 1));
        start = bar + 1;
    }
    return out;
}

std::string join_authors(const std::vector<std::string>& authors) {
    std::string out;
    for (std::size_t i = 0; i < authors.size(); ++i) {
        if (i) out += '|';
        out += authors[i];
    }
    return out;
}

/// Column name -> field position, validated against the allowed set.
template <std::size_t N>
std::vector<std::string_view> read_header(const std::string& line, const std::array<std::string_view, N>& allowed,
                                          std::string_view key, std::string_view table) {
    std::vector<std::string_view> columns;
    for (const auto& name : split_tsv(line)) {
        auto it = std::find(allowed.begin(), allowed.end(), name);
        if (it == allowed.end()) {
            throw FormatError("unknown " + std::string(table) + " column '" + name + "'");
        }
        if (std::find(columns.begin(), columns.end(), *it) != columns.end()) {
            throw FormatError("duplicate " + std::string(table) + " column '" + name + "'");
        }
        columns.push_back(*it);
    }
    if (std::find(columns.begin(), columns.end(), key) == columns.end()) {
        throw FormatError(std::string(table) + " header lacks the '" + std::string(key) + "' column");
    }
    return columns;
}

using RowHandler = std::function<std::optional<std::string>(const std::vector<std::string_view>& columns,
                                                            const std::vector<std::string>& fields)>;

/// Reads rows until EOF or, when `stop_at_section` is set, a line starting with '['.
IngestReport read_rows(std::istream& in, const std::vector<std::string_view>& columns, std::size_t& line_no,
                       const RowHandler& handle, bool stop_at_section, std::string* next_section) {
    IngestReport report;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (stop_at_section && !line.empty() && line.front() == '[') {
            *next_section = line;
            return report;
        }
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        auto fields = split_tsv(line);
        std::optional<std::string> reason;
        if (fields.size() != columns.size()) {
            reason = "malformed line: expected " + std::to_string(columns.size()) + " fields, found " +
                     std::to_string(fields.size());
        } else {
            reason = handle(columns, fields);
        }
        if (reason) {
            ++report.rejected;
            report.rejections.push_back({line_no, *reason});
        } else {
            ++report.loaded;
        }
    }
    return report;
}

std::string field(const std::vector<std::string_view>& columns, const std::vector<std::string>& fields,
                  std::string_view name) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (columns[i] == name) return fields[i];
    }
    return {};
}

BiblioRecord biblio_from(const std::vector<std::string_view>& c, const std::vector<std::string>& f) {
    BiblioRecord r;
    r.title = field(c, f, "title");
    r.authors = split_authors(field(c, f, "authors"));
    r.collection = field(c, f, "collection");
    r.publisher = field(c, f, "publisher");
    r.date = field(c, f, "date");
    r.start_page = field(c, f, "start_page");
    r.end_page = field(c, f, "end_page");
    r.volume = field(c, f, "volume");
    r.issue = field(c, f, "issue");
    r.doi = field(c, f, "doi");
    r.doc_id = field(c, f, "doc_id");
    return r;
}

UsageRecord usage_from(const std::vector<std::string_view>& c, const std::vector<std::string>& f) {
    UsageRecord r;
    r.event_id = field(c, f, "event_id");
    r.time = field(c, f, "time");
    r.agent = field(c, f, "agent");
    r.session = field(c, f, "session");
    r.affiliation = field(c, f, "affiliation");
    r.doc_id = field(c, f, "doc_id");
    r.access_type = field(c, f, "access_type");
    return r;
}

std::string trim(std::string s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> unescape_all(const std::vector<std::string>& fields) {
    std::vector<std::string> out;
    out.reserve(fields.size());
    for (const auto& f : fields) out.push_back(unescape_field(f));
    return out;
}

}  // namespace

std::string unit_iri(const BiblioRecord& record) {
    if (!record.doi.empty()) return "urn:doi:" + percent_encode(record.doi);
    return "urn:mesur:doc:" + percent_encode(record.doc_id);
}

std::string uses_iri(const UsageRecord& record) { return "urn:mesur:uses:" + percent_encode(record.event_id); }

std::optional<std::string> IdMap::unit_for(std::string_view doc_id) const {
    auto it = doc_to_iri_.find(doc_id);
    return it == doc_to_iri_.end() ? std::nullopt : std::optional(it->second);
}
std::optional<std::string> IdMap::doc_for(std::string_view iri) const {
    auto it = iri_to_doc_.find(iri);
    return it == iri_to_doc_.end() ? std::nullopt : std::optional(it->second);
}
std::optional<std::string> IdMap::uses_for(std::string_view event_id) const {
    auto it = event_to_iri_.find(event_id);
    return it == event_to_iri_.end() ? std::nullopt : std::optional(it->second);
}
std::optional<std::string> IdMap::event_for(std::string_view iri) const {
    auto it = iri_to_event_.find(iri);
    return it == iri_to_event_.end() ? std::nullopt : std::optional(it->second);
}

std::optional<std::string> Sidecar::add_biblio(BiblioRecord r) {
    r.doc_id = trim(r.doc_id);
    r.doi = trim(r.doi);
    if (r.doc_id.empty()) return "missing doc_id";
    if (by_doc_.contains(r.doc_id)) return "duplicate doc_id '" + r.doc_id + "'";
    if (!r.doi.empty() && by_doi_.contains(r.doi)) return "duplicate doi '" + r.doi + "'";
    if (!trim(r.date).empty()) {
        auto normalized = rdf::normalize_datetime(r.date);
        if (!normalized) return "invalid date '" + r.date + "'";
        r.date = *normalized;
    } else {
        r.date.clear();
    }
    for (const auto& a : r.authors) {
        if (a.find('|') != std::string::npos) return "author name contains '|'";
    }
    const std::string iri = unit_iri(r);
    if (ids_.iri_to_doc_.contains(iri)) return "unit IRI " + iri + " already in use";

    const std::size_t index = biblio_.size();
    by_doc_.emplace(r.doc_id, index);
    if (!r.doi.empty()) by_doi_.emplace(r.doi, index);
    ids_.doc_to_iri_.emplace(r.doc_id, iri);
    ids_.iri_to_doc_.emplace(iri, r.doc_id);
    biblio_.push_back(std::move(r));
    return std::nullopt;
}

std::optional<std::string> Sidecar::add_usage(UsageRecord r) {
    r.event_id = trim(r.event_id);
    r.doc_id = trim(r.doc_id);
    if (r.event_id.empty()) return "missing event_id";
    if (by_event_.contains(r.event_id)) return "duplicate event_id '" + r.event_id + "'";
    if (r.doc_id.empty()) return "missing doc_id";
    if (!by_doc_.contains(r.doc_id)) return "unknown doc_id '" + r.doc_id + "'";
    auto normalized = rdf::normalize_datetime(r.time);
    if (!normalized) return r.time.empty() ? "missing time" : "invalid time '" + r.time + "'";
    r.time = *normalized;

    const std::string iri = uses_iri(r);
    by_event_.emplace(r.event_id, usage_.size());
    ids_.event_to_iri_.emplace(r.event_id, iri);
    ids_.iri_to_event_.emplace(iri, r.event_id);
    usage_.push_back(std::move(r));
    return std::nullopt;
}

std::optional<std::string> Sidecar::add_citation(CitationRecord r) {
    r.citing = trim(r.citing);
    r.cited = trim(r.cited);
    if (r.citing.empty() || r.cited.empty()) return "missing citing or cited doc_id";
    for (const auto* id : {&r.citing, &r.cited}) {
        if (!by_doc_.contains(*id)) return "unknown doc_id '" + *id + "'";
    }
    auto key = std::make_pair(r.citing, r.cited);
    if (by_citation_.contains(key)) return "duplicate citation " + r.citing + " -> " + r.cited;
    by_citation_.emplace(std::move(key), citations_.size());
    citations_.push_back(std::move(r));
    return std::nullopt;
}

IngestReport Sidecar::ingest_biblio(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) return {};
    const auto columns = read_header(header, kBiblioColumns, "doc_id", "biblio");
    std::size_t line_no = 1;
    return read_rows(
        in, columns, line_no, [&](const auto& c, const auto& f) { return add_biblio(biblio_from(c, f)); }, false,
        nullptr);
}

IngestReport Sidecar::ingest_usage(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) return {};
    const auto columns = read_header(header, kUsageColumns, "event_id", "usage");
    std::size_t line_no = 1;
    return read_rows(
        in, columns, line_no, [&](const auto& c, const auto& f) { return add_usage(usage_from(c, f)); }, false,
        nullptr);
}

IngestReport Sidecar::ingest_citations(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) return {};
    const auto columns = read_header(header, kCitationColumns, "citing", "citations");
    std::size_t line_no = 1;
    return read_rows(
        in, columns, line_no,
        [&](const auto& c, const auto& f) { return add_citation({field(c, f, "citing"), field(c, f, "cited")}); },
        false, nullptr);
}

const BiblioRecord* Sidecar::find_biblio(std::string_view doc_id) const {
    auto it = by_doc_.find(doc_id);
    return it == by_doc_.end() ? nullptr : &biblio_[it->second];
}

const BiblioRecord* Sidecar::find_by_doi(std::string_view doi) const {
    auto it = by_doi_.find(doi);
    return it == by_doi_.end() ? nullptr : &biblio_[it->second];
}

const UsageRecord* Sidecar::find_usage(std::string_view event_id) const {
    auto it = by_event_.find(event_id);
    return it == by_event_.end() ? nullptr : &usage_[it->second];
}

Resolution Sidecar::resolve(std::string_view id) const {
    if (const auto* b = find_biblio(id)) return {*b, rdf::Term::iri(*ids_.unit_for(id))};
    if (const auto* u = find_usage(id)) return {*u, rdf::Term::iri(*ids_.uses_for(id))};
    if (auto doc = ids_.doc_for(id)) return {*find_biblio(*doc), rdf::Term::iri(std::string(id))};
    if (auto ev = ids_.event_for(id)) return {*find_usage(*ev), rdf::Term::iri(std::string(id))};
    throw NotFoundError("unknown record or IRI '" + std::string(id) + "'");
}

void Sidecar::save(std::ostream& out) const {
    auto row = [&](const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i) out << '\t';
            // a row must not look like a section header
            if (i == 0 && !fields[i].empty() && fields[i].front() == '[') out << '\\';
            out << escape_field(fields[i]);
        }
        out << '\n';
    };
    auto header = [&](std::string_view section, const auto& columns) {
        out << '[' << section << "]\n";
        row(std::vector<std::string>(columns.begin(), columns.end()));
    };
    out << kMagic << '\n';
    header("biblio", kBiblioColumns);
    for (const auto& r : biblio_) {
        row({r.title, join_authors(r.authors), r.collection, r.publisher, r.date, r.start_page, r.end_page, r.volume,
             r.issue, r.doi, r.doc_id});
    }
    header("usage", kUsageColumns);
    for (const auto& r : usage_) row({r.event_id, r.time, r.agent, r.session, r.affiliation, r.doc_id, r.access_type});
    header("citations", kCitationColumns);
    for (const auto& r : citations_) row({r.citing, r.cited});
}

Sidecar Sidecar::load(std::istream& in) {
    Sidecar sc;
    std::string line;
    if (!std::getline(in, line) || line != kMagic) throw FormatError("not a sidecar file (bad header)");
    std::size_t line_no = 1;
    if (!std::getline(in, line)) return sc;
    ++line_no;
    std::string section = line;
    while (!section.empty()) {
        std::string header;
        if (!std::getline(in, header)) throw FormatError("sidecar section " + section + " lacks a column header");
        ++line_no;
        std::vector<std::string_view> columns;
        RowHandler handler;
        if (section == "[biblio]") {
            columns = read_header(header, kBiblioColumns, "doc_id", "biblio");
            handler = [&](const auto& c, const auto& f) { return sc.add_biblio(biblio_from(c, unescape_all(f))); };
        } else if (section == "[usage]") {
            columns = read_header(header, kUsageColumns, "event_id", "usage");
            handler = [&](const auto& c, const auto& f) { return sc.add_usage(usage_from(c, unescape_all(f))); };
        } else if (section == "[citations]") {
            columns = read_header(header, kCitationColumns, "citing", "citations");
            handler = [&](const auto& c, const auto& f) {
                auto u = unescape_all(f);
                return sc.add_citation({field(c, u, "citing"), field(c, u, "cited")});
            };
        } else {
            throw FormatError("unknown sidecar section " + section);
        }
        std::string next;
        auto report = read_rows(in, columns, line_no, handler, true, &next);
        if (report.rejected) {
            const auto& r = report.rejections.front();
            throw FormatError("sidecar line " + std::to_string(r.line) + ": " + r.reason);
        }
        section = next;
    }
    return sc;
}

void Sidecar::save_file(const std::string& path) const {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw FormatError("cannot write " + tmp);
        save(out);
        if (!out.flush()) throw FormatError("write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) throw FormatError("cannot replace " + path);
}

Sidecar Sidecar::load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return {};
    return load(in);
}

}  // namespace mesur::sidecar
