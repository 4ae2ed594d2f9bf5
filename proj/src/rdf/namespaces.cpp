#include "mesur/rdf/namespaces.hpp"

#include "mesur/error.hpp"

namespace mesur::rdf {

const NamespaceTable& NamespaceTable::defaults() {
    static const NamespaceTable table = [] {
        NamespaceTable t;
        t.add("mesur", std::string(ns::kMesur));
        t.add("rdf", std::string(ns::kRdf));
        t.add("rdfs", std::string(ns::kRdfs));
        t.add("owl", std::string(ns::kOwl));
        t.add("xsd", std::string(xsd::kNamespace));
        t.add("urn", "urn:");
        return t;
    }();
    return table;
}

void NamespaceTable::add(std::string prefix, std::string base) {
    if (base.empty()) throw InvalidArgument("namespace base for '" + prefix + "' must not be empty");
    auto it = prefixes_.find(prefix);
    if (it != prefixes_.end()) {
        if (it->second != base) {
            throw InvalidArgument("prefix '" + prefix + "' already bound to <" + it->second + ">");
        }
        return;
    }
    prefixes_.emplace(std::move(prefix), std::move(base));
}

bool NamespaceTable::contains(std::string_view prefix) const {
    return prefixes_.find(prefix) != prefixes_.end();
}

std::optional<std::string> NamespaceTable::base(std::string_view prefix) const {
    auto it = prefixes_.find(prefix);
    if (it == prefixes_.end()) return std::nullopt;
    return it->second;
}

Term NamespaceTable::expand(std::string_view curie) const {
    const auto colon = curie.find(':');
    if (colon == std::string_view::npos) {
        throw InvalidArgument("not a prefixed name: '" + std::string(curie) + "'");
    }
    const auto prefix = curie.substr(0, colon);
    auto it = prefixes_.find(prefix);
    if (it == prefixes_.end()) throw UnknownPrefixError(std::string(prefix));
    return Term::iri(it->second + std::string(curie.substr(colon + 1)));
}

std::optional<std::string> NamespaceTable::compact(std::string_view iri) const {
    const std::pair<const std::string, std::string>* best = nullptr;
    for (const auto& entry : prefixes_) {
        const auto& base = entry.second;
        if (iri.size() >= base.size() && iri.substr(0, base.size()) == base &&
            (best == nullptr || base.size() > best->second.size())) {
            best = &entry;
        }
    }
    if (best == nullptr) return std::nullopt;
    return best->first + ":" + std::string(iri.substr(best->second.size()));
}

}  // namespace mesur::rdf
