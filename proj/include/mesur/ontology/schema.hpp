#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mesur/rdf/term.hpp"

namespace mesur::store {
class TripleStore;
}

namespace mesur::ontology {

enum class PropertyKind { Context, Inferred, Structural };

std::string_view property_kind_name(PropertyKind kind);

/// Range of a property: a schema class (owl:Thing for "any resource") or a
/// literal datatype.
struct Range {
    std::string class_iri;
    rdf::Datatype datatype = rdf::Datatype::None;

    bool is_datatype() const noexcept { return datatype != rdf::Datatype::None; }
};

struct ClassDef {
    std::string iri;
    std::optional<std::string> parent;  // empty only for owl:Thing
};

struct PropertyDef {
    std::string iri;
    PropertyKind kind = PropertyKind::Context;
    std::string domain;
    Range range;
    std::optional<std::string> inverse;
};

/// The compiled-in MESUR class taxonomy and property catalog. Immutable.
class Schema {
public:
    /// The single schema instance.
    static const Schema& mesur();

    bool has_class(std::string_view iri) const;
    /// Throws NotFoundError for classes outside the schema.
    const ClassDef& class_def(std::string_view iri) const;

    /// Reflexive-transitive subclass test. Throws NotFoundError if either
    /// class is unknown.
    bool is_subclass(std::string_view child, std::string_view parent) const;

    /// The class and all its ancestors up to owl:Thing, most specific first.
    std::vector<std::string> ancestors(std::string_view iri) const;
    std::vector<std::string> children(std::string_view iri) const;

    const PropertyDef* find_property(std::string_view iri) const;
    const PropertyDef& property(std::string_view iri) const;

    const std::vector<ClassDef>& classes() const noexcept { return classes_; }
    const std::vector<PropertyDef>& properties() const noexcept { return properties_; }

    /// Class pairs treated as disjoint during validation.
    const std::vector<std::pair<std::string, std::string>>& disjoint_pairs() const noexcept { return disjoint_; }

    /// Properties a context of the given class must carry at least once.
    std::vector<std::string> required_properties(std::string_view context_class) const;

    /// Tab-separated documentation listing, one class or property per line:
    ///   class    <iri> <parent>
    ///   property <iri> <kind> <domain> <range> <inverse or ->
    std::string export_listing() const;

private:
    Schema();

    std::vector<ClassDef> classes_;
    std::vector<PropertyDef> properties_;
    std::vector<std::pair<std::string, std::string>> disjoint_;
    std::vector<std::pair<std::string, std::vector<std::string>>> required_;
};

enum class ViolationKind {
    UnknownClass,
    Disjointness,
    Domain,
    Range,
    MissingProperty,
    Restriction,
};

std::string_view violation_kind_name(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    rdf::Term node;
    std::string property;  // empty when not property-specific
    std::string message;
};

/// Declared rdf:type classes of the node closed under superclass. Classes
/// outside the schema are returned as declared, without closure.
std::set<std::string> types_of(const rdf::Term& node, const store::TripleStore& store);

/// Checks the node's outgoing edges against the schema: domains, ranges,
/// disjointness, context minimum cardinalities, and the Publishes restriction
/// that a PreprintArticle or Book unit has no group. Throws NotFoundError if
/// the node does not occur in the store.
std::vector<Violation> validate_instance(const rdf::Term& node, const store::TripleStore& store);

}  // namespace mesur::ontology
