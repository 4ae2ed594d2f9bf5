#include "mesur/sidecar/mapping.hpp"

#include <vector>

#include "mesur/error.hpp"
#include "mesur/inference/keys.hpp"
#include "mesur/rdf/datetime.hpp"
#include "mesur/sidecar/tsv.hpp"

namespace mesur::sidecar {

using rdf::Datatype;
using rdf::Term;

namespace {

std::string short_hash(const std::string& s) { return inference::sha256_hex(s).substr(0, 32); }

std::string agent_iri(std::string_view role, const std::string& name, const std::string& provider) {
    // the role keeps a person and an organization with the same name apart
    return "urn:mesur:agent:" + short_hash(std::string(role) + "\n" + normalize_name(name) + "\n" + provider);
}

class Emitter {
public:
    void add(const std::string& s, std::string_view p, Term o) {
        triples_.push_back(rdf::make_triple(Term::iri(s), Term::iri(std::string(p)), std::move(o)));
    }
    void link(const std::string& s, std::string_view p, const std::string& o) { add(s, p, Term::iri(o)); }
    void type(const std::string& s, std::string_view cls) { link(s, vocab::kRdfType, std::string(cls)); }
    std::vector<rdf::Triple>& triples() { return triples_; }

private:
    std::vector<rdf::Triple> triples_;
};

}  // namespace

std::string group_root_iri(const std::string& collection) {
    return "urn:mesur:group:" + short_hash(normalize_name(collection));
}

std::string group_edition_iri(const BiblioRecord& r) {
    const std::string root = group_root_iri(r.collection);
    if (!r.volume.empty() || !r.issue.empty()) {
        // hashed: volume and issue numbers stay in the sidecar
        return root + "/issue-" + short_hash(r.volume + "\n" + r.issue).substr(0, 16);
    }
    if (auto dt = rdf::parse_datetime(r.date)) return root + "/year-" + std::to_string(dt->year);
    return root + "/default";
}

std::string author_iri(const std::string& name, const std::string& provider) {
    return agent_iri("author", name, provider);
}

std::string organization_iri(const std::string& name, const std::string& provider) {
    return agent_iri("organization", name, provider);
}

std::string user_iri(const std::string& agent, const std::string& provider) {
    return agent_iri("user", agent, provider);
}

std::string publishes_iri(const BiblioRecord& r) { return "urn:mesur:publishes:" + percent_encode(r.doc_id); }

std::string citation_iri(const CitationRecord& r) {
    return "urn:mesur:citation:" + short_hash(r.citing + "\n" + r.cited);
}

const std::set<std::string>& literal_predicates() {
    static const std::set<std::string> preds = {
        std::string(vocab::kHasTime),          std::string(vocab::kHasSession),
        std::string(vocab::kHasAccessType),    std::string(vocab::kHasWeight),
        std::string(vocab::kHasNumericValue),  std::string(vocab::kHasStartTime),
        std::string(vocab::kHasEndTime),       std::string(vocab::kHasSourceStartTime),
        std::string(vocab::kHasSourceEndTime), std::string(vocab::kHasSinkStartTime),
        std::string(vocab::kHasSinkEndTime),
    };
    return preds;
}

MappingReport map_to_graph(const Sidecar& sidecar, store::TripleStore& store, const MappingOptions& options) {
    const std::string& provider = options.provider;
    try {
        Term::iri(provider);
    } catch (const InvalidArgument& e) {
        throw InvalidArgument("provider must be an absolute IRI: " + std::string(e.what()));
    }

    MappingReport report;
    Emitter out;
    if (!sidecar.biblio().empty() || !sidecar.usage().empty()) out.type(provider, vocab::kOrganization);

    for (const auto& r : sidecar.biblio()) {
        const std::string ctx = publishes_iri(r);
        const std::string unit = *sidecar.ids().unit_for(r.doc_id);
        out.type(ctx, vocab::kPublishes);
        out.type(unit, options.unit_class);
        out.link(ctx, vocab::kHasUnit, unit);
        out.link(ctx, vocab::kHasProvider, provider);
        if (!r.date.empty()) out.add(ctx, vocab::kHasTime, Term::literal(r.date, Datatype::DateTime));
        if (!r.collection.empty()) {
            const std::string root = group_root_iri(r.collection);
            const std::string edition = group_edition_iri(r);
            out.type(root, options.group_class);
            out.type(edition, options.group_class);
            out.link(edition, vocab::kPartOf, root);
            out.link(ctx, vocab::kHasGroup, edition);
        }
        if (!r.publisher.empty()) {
            const std::string org = organization_iri(r.publisher, provider);
            out.type(org, vocab::kOrganization);
            out.link(ctx, vocab::kHasPublisher, org);
        }
        for (const auto& name : r.authors) {
            const std::string person = author_iri(name, provider);
            out.type(person, vocab::kHuman);
            out.link(ctx, vocab::kHasAuthor, person);
        }
        ++report.publishes;
    }

    for (const auto& r : sidecar.usage()) {
        const std::string ctx = *sidecar.ids().uses_for(r.event_id);
        out.type(ctx, vocab::kUses);
        out.link(ctx, vocab::kHasDocument, *sidecar.ids().unit_for(r.doc_id));
        out.link(ctx, vocab::kHasProvider, provider);
        out.add(ctx, vocab::kHasTime, Term::literal(r.time, Datatype::DateTime));
        if (!r.session.empty()) out.add(ctx, vocab::kHasSession, Term::string_literal(r.session));
        if (!r.access_type.empty()) out.add(ctx, vocab::kHasAccessType, Term::string_literal(r.access_type));
        if (!r.agent.empty()) {
            const std::string user = user_iri(r.agent, provider);
            out.type(user, vocab::kHuman);
            out.link(ctx, vocab::kHasUser, user);
            if (options.mint_affiliations && !r.affiliation.empty()) {
                const std::string org = organization_iri(r.affiliation, provider);
                const std::string aff = "urn:mesur:affiliation:" + short_hash(org + "\n" + user);
                out.type(org, vocab::kOrganization);
                out.type(aff, vocab::kAffiliation);
                out.link(aff, vocab::kHasAffiliator, org);
                out.link(aff, vocab::kHasAffiliatee, user);
                ++report.affiliations;
            }
        }
        ++report.uses;
    }

    for (const auto& r : sidecar.citations()) {
        const std::string ctx = citation_iri(r);
        out.type(ctx, vocab::kCitation);
        out.link(ctx, vocab::kHasSource, *sidecar.ids().unit_for(r.citing));
        out.link(ctx, vocab::kHasSink, *sidecar.ids().unit_for(r.cited));
        ++report.citations;
    }

    report.triples_added = store.bulk_load(out.triples());
    return report;
}

}  // namespace mesur::sidecar
