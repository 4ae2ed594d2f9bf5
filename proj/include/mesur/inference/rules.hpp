#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mesur/rdf/namespaces.hpp"

namespace mesur::inference {

struct RuleInfo {
    std::string name;
    std::string description;
    /// Properties (or, for context rules, the context class) the rule writes.
    std::vector<std::string> produces;
    /// Script text for query-driven rules; empty for natively computed ones.
    std::string_view script;
};

/// Registered rules in execution order.
const std::vector<RuleInfo>& rule_registry();

/// Throws NotFoundError for unregistered names.
const RuleInfo& find_rule(std::string_view name);

/// The nine reference inference and metric scripts, with
/// the typos fixed (a colon for the stray dot in two property names, the
/// misspelled numeric-value property, missing spaces before variables, and
/// AND for the tautological OR in the usage impact factor window).
namespace listings {
extern const std::string_view kAuthoredBy;
extern const std::string_view kContainedIn;
extern const std::string_view kPublishedBy;
extern const std::string_view kUsedBy;
extern const std::string_view kGroupCitation;
extern const std::string_view kCoauthor;
extern const std::string_view kAffiliation;
extern const std::string_view kImpactFactor;
extern const std::string_view kUsageImpactFactor;

struct Listing {
    std::string_view name;
    std::string_view text;
};
const std::vector<Listing>& all();

/// Default namespaces plus the example prefixes the listings use (lanl, foaf, vub).
const rdf::NamespaceTable& namespaces();
}  // namespace listings

}  // namespace mesur::inference
