#include "mesur/ontology/schema.hpp"

#include <algorithm>
#include <sstream>

#include "mesur/error.hpp"
#include "mesur/ontology/vocab.hpp"

namespace mesur::ontology {

using rdf::Datatype;
namespace v = vocab;

std::string_view property_kind_name(PropertyKind kind) {
    switch (kind) {
        case PropertyKind::Context: return "context";
        case PropertyKind::Inferred: return "inferred";
        case PropertyKind::Structural: return "structural";
    }
    return "?";
}

namespace {

Range cls(std::string_view iri) { return Range{std::string(iri), Datatype::None}; }
Range lit(Datatype dt) { return Range{std::string(rdf::datatype_iri(dt)), dt}; }

PropertyDef context(std::string_view iri, std::string_view domain, Range range) {
    return PropertyDef{std::string(iri), PropertyKind::Context, std::string(domain), std::move(range), std::nullopt};
}

PropertyDef inferred(std::string_view iri, std::string_view domain, std::string_view range,
                     std::string_view inverse) {
    return PropertyDef{std::string(iri), PropertyKind::Inferred, std::string(domain), cls(range),
                       std::string(inverse)};
}

}  // namespace

Schema::Schema() {
    auto add = [this](std::string_view iri, std::string_view parent) {
        classes_.push_back(ClassDef{std::string(iri), std::string(parent)});
    };
    classes_.push_back(ClassDef{std::string(v::kOwlThing), std::nullopt});
    add(v::kAgent, v::kOwlThing);
    add(v::kDocument, v::kOwlThing);
    add(v::kContext, v::kOwlThing);
    add(v::kHuman, v::kAgent);
    add(v::kOrganization, v::kAgent);
    add(v::kGroup, v::kDocument);
    add(v::kUnit, v::kDocument);
    add(v::kJournal, v::kGroup);
    add(v::kProceedings, v::kGroup);
    add(v::kEditedBook, v::kGroup);
    add(v::kArticle, v::kUnit);
    add(v::kPreprintArticle, v::kUnit);
    add(v::kBook, v::kUnit);
    add(v::kEvent, v::kContext);
    add(v::kState, v::kContext);
    add(v::kPublishes, v::kEvent);
    add(v::kUses, v::kEvent);
    add(v::kWeightedRelationship, v::kState);
    add(v::kAffiliation, v::kState);
    add(v::kMetric, v::kState);
    add(v::kCitation, v::kWeightedRelationship);
    add(v::kCoauthor, v::kWeightedRelationship);
    add(v::kNumericMetric, v::kMetric);
    add(v::kNominalMetric, v::kMetric);
    add(v::kImpactFactor, v::kNumericMetric);
    add(v::kUsageImpactFactor, v::kNumericMetric);

    properties_ = {
        // Publishes
        context(v::kHasUnit, v::kPublishes, cls(v::kUnit)),
        context(v::kHasGroup, v::kPublishes, cls(v::kGroup)),
        context(v::kHasAuthor, v::kPublishes, cls(v::kAgent)),
        context(v::kHasPublisher, v::kPublishes, cls(v::kAgent)),
        // Event
        context(v::kHasProvider, v::kEvent, cls(v::kOrganization)),
        context(v::kHasTime, v::kEvent, lit(Datatype::DateTime)),
        // Uses
        context(v::kHasDocument, v::kUses, cls(v::kDocument)),
        context(v::kHasUser, v::kUses, cls(v::kAgent)),
        context(v::kHasSession, v::kUses, lit(Datatype::String)),
        context(v::kHasAccessType, v::kUses, lit(Datatype::String)),
        // WeightedRelationship: source and sink may be any Agent or Document
        context(v::kHasSource, v::kWeightedRelationship, cls(v::kOwlThing)),
        context(v::kHasSink, v::kWeightedRelationship, cls(v::kOwlThing)),
        context(v::kHasWeight, v::kWeightedRelationship, lit(Datatype::Decimal)),
        context(v::kHasSourceStartTime, v::kWeightedRelationship, lit(Datatype::DateTime)),
        context(v::kHasSourceEndTime, v::kWeightedRelationship, lit(Datatype::DateTime)),
        context(v::kHasSinkStartTime, v::kWeightedRelationship, lit(Datatype::DateTime)),
        context(v::kHasSinkEndTime, v::kWeightedRelationship, lit(Datatype::DateTime)),
        // Affiliation
        context(v::kHasAffiliator, v::kAffiliation, cls(v::kOrganization)),
        context(v::kHasAffiliatee, v::kAffiliation, cls(v::kAgent)),
        // State spans (Affiliation, Metric)
        context(v::kHasStartTime, v::kState, lit(Datatype::DateTime)),
        context(v::kHasEndTime, v::kState, lit(Datatype::DateTime)),
        // Metric
        context(v::kHasObject, v::kMetric, cls(v::kOwlThing)),
        context(v::kHasNumericValue, v::kNumericMetric, lit(Datatype::Decimal)),
        // structural
        PropertyDef{std::string(v::kPartOf), PropertyKind::Structural, std::string(v::kDocument),
                    cls(v::kDocument), std::nullopt},
        // inferred pairs
        inferred(v::kAuthored, v::kAgent, v::kDocument, v::kAuthoredBy),
        inferred(v::kAuthoredBy, v::kDocument, v::kAgent, v::kAuthored),
        inferred(v::kPublished, v::kAgent, v::kDocument, v::kPublishedBy),
        inferred(v::kPublishedBy, v::kDocument, v::kAgent, v::kPublished),
        inferred(v::kUsed, v::kAgent, v::kDocument, v::kUsedBy),
        inferred(v::kUsedBy, v::kDocument, v::kAgent, v::kUsed),
        inferred(v::kContains, v::kGroup, v::kUnit, v::kContainedIn),
        inferred(v::kContainedIn, v::kUnit, v::kGroup, v::kContains),
        inferred(v::kHasAffiliate, v::kAgent, v::kAgent, v::kHasAffiliation),
        inferred(v::kHasAffiliation, v::kAgent, v::kAgent, v::kHasAffiliate),
    };

    auto pair = [](std::string_view a, std::string_view b) { return std::pair{std::string(a), std::string(b)}; };
    disjoint_ = {
        pair(v::kAgent, v::kDocument), pair(v::kAgent, v::kContext), pair(v::kDocument, v::kContext),
        pair(v::kHuman, v::kOrganization), pair(v::kGroup, v::kUnit),
    };

    auto req = [](std::string_view c, std::initializer_list<std::string_view> props) {
        std::vector<std::string> list;
        for (auto p : props) list.emplace_back(p);
        return std::pair{std::string(c), std::move(list)};
    };
    required_ = {
        req(v::kPublishes, {v::kHasUnit, v::kHasProvider, v::kHasTime}),
        req(v::kUses, {v::kHasDocument, v::kHasUser, v::kHasTime}),
        req(v::kCitation, {v::kHasSource, v::kHasSink}),
        req(v::kAffiliation, {v::kHasAffiliator, v::kHasAffiliatee}),
    };
}

const Schema& Schema::mesur() {
    static const Schema schema;
    return schema;
}

bool Schema::has_class(std::string_view iri) const {
    return std::any_of(classes_.begin(), classes_.end(), [&](const ClassDef& c) { return c.iri == iri; });
}

const ClassDef& Schema::class_def(std::string_view iri) const {
    for (const auto& c : classes_) {
        if (c.iri == iri) return c;
    }
    throw NotFoundError("unknown class <" + std::string(iri) + ">");
}

bool Schema::is_subclass(std::string_view child, std::string_view parent) const {
    class_def(parent);
    const ClassDef* c = &class_def(child);
    while (true) {
        if (c->iri == parent) return true;
        if (!c->parent) return false;
        c = &class_def(*c->parent);
    }
}

std::vector<std::string> Schema::ancestors(std::string_view iri) const {
    std::vector<std::string> out;
    const ClassDef* c = &class_def(iri);
    while (true) {
        out.push_back(c->iri);
        if (!c->parent) break;
        c = &class_def(*c->parent);
    }
    return out;
}

std::vector<std::string> Schema::children(std::string_view iri) const {
    std::vector<std::string> out;
    for (const auto& c : classes_) {
        if (c.parent && *c.parent == iri) out.push_back(c.iri);
    }
    return out;
}

const PropertyDef* Schema::find_property(std::string_view iri) const {
    for (const auto& p : properties_) {
        if (p.iri == iri) return &p;
    }
    return nullptr;
}

const PropertyDef& Schema::property(std::string_view iri) const {
    if (const auto* p = find_property(iri)) return *p;
    throw NotFoundError("unknown property <" + std::string(iri) + ">");
}

std::vector<std::string> Schema::required_properties(std::string_view context_class) const {
    for (const auto& [c, props] : required_) {
        if (c == context_class) return props;
    }
    return {};
}

std::string Schema::export_listing() const {
    std::ostringstream out;
    for (const auto& c : classes_) {
        out << "class\t" << c.iri << '\t' << (c.parent ? *c.parent : "-") << '\n';
    }
    for (const auto& p : properties_) {
        out << "property\t" << p.iri << '\t' << property_kind_name(p.kind) << '\t' << p.domain << '\t'
            << p.range.class_iri << '\t' << (p.inverse ? *p.inverse : "-") << '\n';
    }
    return out.str();
}

}  // namespace mesur::ontology
