#include <algorithm>

#include "mesur/error.hpp"
#include "mesur/ontology/schema.hpp"
#include "mesur/ontology/vocab.hpp"
#include "mesur/rdf/namespaces.hpp"
#include "mesur/store/triple_store.hpp"

namespace mesur::ontology {

using rdf::Term;

std::string_view violation_kind_name(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::UnknownClass: return "unknown-class";
        case ViolationKind::Disjointness: return "disjointness";
        case ViolationKind::Domain: return "domain";
        case ViolationKind::Range: return "range";
        case ViolationKind::MissingProperty: return "missing-property";
        case ViolationKind::Restriction: return "restriction";
    }
    return "?";
}

namespace {

bool in_mesur_namespace(std::string_view iri) {
    return iri.substr(0, rdf::ns::kMesur.size()) == rdf::ns::kMesur;
}

std::string local_name(std::string_view iri) {
    const auto hash = iri.rfind('#');
    return std::string(hash == std::string_view::npos ? iri : iri.substr(hash + 1));
}

bool literal_fits(const Term& object, rdf::Datatype range) {
    if (!object.is_literal()) return false;
    if (object.datatype() == range) return true;
    return range == rdf::Datatype::Decimal && object.datatype() == rdf::Datatype::Integer;
}

}  // namespace

std::set<std::string> types_of(const Term& node, const store::TripleStore& store) {
    const Schema& schema = Schema::mesur();
    std::set<std::string> out;
    for (const auto& type : store.objects(node, Term::iri(std::string(vocab::kRdfType)))) {
        if (!type.is_iri()) continue;
        if (schema.has_class(type.value())) {
            for (auto& a : schema.ancestors(type.value())) out.insert(std::move(a));
        } else {
            out.insert(type.value());
        }
    }
    return out;
}

std::vector<Violation> validate_instance(const Term& node, const store::TripleStore& store) {
    if (!store.mentions(node)) throw NotFoundError("node " + node.to_string() + " is not in the store");

    const Schema& schema = Schema::mesur();
    const Term rdf_type = Term::iri(std::string(vocab::kRdfType));
    std::vector<Violation> out;
    auto report = [&](ViolationKind kind, std::string property, std::string message) {
        out.push_back(Violation{kind, node, std::move(property), std::move(message)});
    };

    for (const auto& type : store.objects(node, rdf_type)) {
        if (type.is_iri() && in_mesur_namespace(type.value()) && !schema.has_class(type.value())) {
            report(ViolationKind::UnknownClass, "", "type <" + type.value() + "> is not a schema class");
        }
    }

    const std::set<std::string> types = types_of(node, store);
    for (const auto& [a, b] : schema.disjoint_pairs()) {
        if (types.contains(a) && types.contains(b)) {
            report(ViolationKind::Disjointness, "", local_name(a) + " and " + local_name(b) + " are disjoint");
        }
    }

    for (const auto& t : store.find(node, std::nullopt, std::nullopt)) {
        const std::string& p = t.predicate.value();
        if (p == vocab::kRdfType) continue;
        const PropertyDef* def = schema.find_property(p);
        if (def == nullptr) {
            if (in_mesur_namespace(p)) report(ViolationKind::UnknownClass, p, "property is not in the schema");
            continue;
        }
        if (!types.empty() && !types.contains(def->domain)) {
            report(ViolationKind::Domain, p, local_name(p) + " used outside its domain " + local_name(def->domain));
        }
        if (def->range.is_datatype()) {
            if (!literal_fits(t.object, def->range.datatype)) {
                report(ViolationKind::Range, p,
                       local_name(p) + " expects a " + std::string(rdf::datatype_name(def->range.datatype)) +
                           " literal, got " + t.object.to_string());
            }
        } else if (t.object.is_literal()) {
            report(ViolationKind::Range, p, local_name(p) + " expects a resource, got " + t.object.to_string());
        } else if (def->range.class_iri != vocab::kOwlThing) {
            const auto object_types = types_of(t.object, store);
            if (!object_types.empty() && !object_types.contains(def->range.class_iri)) {
                report(ViolationKind::Range, p,
                       local_name(p) + " object " + t.object.to_string() + " is not a " +
                           local_name(def->range.class_iri));
            }
        }
    }

    for (const auto& type : types) {
        for (const auto& required : schema.required_properties(type)) {
            if (store.objects(node, Term::iri(required)).empty()) {
                report(ViolationKind::MissingProperty, required,
                       local_name(type) + " context is missing " + local_name(required));
            }
        }
    }

    if (types.contains(std::string(vocab::kPublishes))) {
        const bool has_group = !store.objects(node, Term::iri(std::string(vocab::kHasGroup))).empty();
        for (const auto& unit : store.objects(node, Term::iri(std::string(vocab::kHasUnit)))) {
            const auto unit_types = types_of(unit, store);
            for (auto restricted : {vocab::kPreprintArticle, vocab::kBook}) {
                if (has_group && unit_types.contains(std::string(restricted))) {
                    report(ViolationKind::Restriction, std::string(vocab::kHasGroup),
                           local_name(restricted) + " " + unit.to_string() + " is not published in a Group");
                }
            }
        }
    }
    return out;
}

}  // namespace mesur::ontology
