#pragma once

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "mesur/rdf/term.hpp"

namespace mesur::inference {

/// Which triples each rule added to the store. Only triples that were new at
/// insertion time are recorded, so retracting a rule never touches base data
/// or another rule's output.
class MaterializationLedger {
public:
    void record(const std::string& rule, const rdf::Triple& t);
    /// Forgets one triple; returns false if the rule had not recorded it.
    bool forget(const std::string& rule, const rdf::Triple& t);

    const std::set<rdf::Triple>& entries(const std::string& rule) const;
    bool contains(const std::string& rule, const rdf::Triple& t) const;
    std::size_t size(const std::string& rule) const;
    std::size_t total() const;
    std::vector<std::string> rules() const;

    void clear(const std::string& rule);
    void clear();

    /// Text format: a "mesur-ledger 1" line, then per rule "@rule <name> <n>"
    /// followed by n N-Triples lines.
    void save(std::ostream& out) const;
    static MaterializationLedger load(std::istream& in);
    void save_file(const std::string& path) const;
    /// A missing file yields an empty ledger.
    static MaterializationLedger load_file(const std::string& path);

    friend bool operator==(const MaterializationLedger&, const MaterializationLedger&) = default;

private:
    std::map<std::string, std::set<rdf::Triple>> entries_;
};

}  // namespace mesur::inference
