#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mesur/inference/ledger.hpp"
#include "mesur/store/triple_store.hpp"

namespace mesur::inference {

/// Inclusive range of years.
struct YearRange {
    int first = 0;
    int last = 0;

    bool contains(int year) const noexcept { return first <= year && year <= last; }
    bool empty() const noexcept { return first > last; }
    /// "2007" or "2005-2006".
    std::string to_string() const;
    friend bool operator==(const YearRange&, const YearRange&) = default;
};

/// Parses "2007" or "2005-2006". Throws InvalidArgument.
YearRange parse_year_range(std::string_view text);

enum class PartOfMode {
    /// The root itself and everything reaching it through any number of partOf hops.
    Transitive,
    /// Only nodes with a direct partOf edge to the root, as the listings write it.
    OneHop,
};

/// Year of a time literal: a datetime (any precision) or a bare integer.
std::optional<int> literal_year(const rdf::Term& t);

/// Groups considered part of `root` under the given mode.
std::set<rdf::Term> part_of_closure(const rdf::Term& root, const store::TripleStore& store,
                                    PartOfMode mode = PartOfMode::Transitive);

/// Names accepted by retract_rule besides the registered rules: the ledger
/// names of the keyed aggregate derivations.
inline constexpr std::string_view kGroupCitationLedger = "group_citation";
inline constexpr std::string_view kImpactFactorLedger = "impact_factor";
inline constexpr std::string_view kUsageImpactFactorLedger = "usage_impact_factor";
inline constexpr std::string_view kCoauthorLedger = "coauthor";

struct GroupCitationResult {
    rdf::Term node;
    std::uint64_t weight = 0;
};

struct CoauthorResult {
    rdf::Term forward;   // a -> b
    rdf::Term backward;  // b -> a
    std::uint64_t weight = 0;
};

/// Runs registered rules against a store and keeps the ledger of what they
/// added. Takes the writer role on the store for every mutating call.
class InferenceEngine {
public:
    explicit InferenceEngine(store::TripleStore& store, MaterializationLedger ledger = {});

    store::TripleStore& store() noexcept { return *store_; }
    const MaterializationLedger& ledger() const noexcept { return ledger_; }
    MaterializationLedger& ledger() noexcept { return ledger_; }

    /// Runs one registered rule; returns the number of triples it added.
    /// Throws NotFoundError for unknown names.
    std::size_t run_rule(std::string_view name);
    /// Every registered rule in registry order, with per-rule counts.
    std::vector<std::pair<std::string, std::size_t>> run_all();

    /// Removes exactly the triples the ledger holds for `name`. Returns the
    /// number removed (0 if the rule never ran).
    std::size_t retract_rule(std::string_view name);
    /// Retracts every ledger entry, rules and derivations alike.
    std::size_t retract_all();

    /// Writes the node keyed by (rule, key) with the given outgoing edges,
    /// replacing whatever that node carried before.
    rdf::Term upsert_context(const std::string& rule, const std::string& key,
                             const std::vector<std::pair<rdf::Term, rdf::Term>>& edges);

    /// Group-to-group Citation: the number of distinct (source unit, sink unit)
    /// pairs among Unit-to-Unit Citation nodes where the source unit has a
    /// Publishes in a group of sourceRoot dated within sourceWindow and the
    /// sink unit likewise for sinkRoot and sinkWindow. Throws NotFoundError
    /// for roots absent from the store and InvalidArgument for empty windows.
    GroupCitationResult derive_group_citation(const rdf::Term& source_root, const rdf::Term& sink_root,
                                              YearRange source_window, YearRange sink_window,
                                              PartOfMode mode = PartOfMode::Transitive);

    /// Coauthor weight of a and b: Publishes contexts listing both as authors
    /// (dated within the window, if given). Writes both directed nodes.
    CoauthorResult derive_coauthor(const rdf::Term& a, const rdf::Term& b,
                                   std::optional<YearRange> window = std::nullopt);

    /// Coauthor nodes for every author pair with a nonzero weight; stale nodes
    /// from earlier runs are removed. Returns the number of triples added.
    std::size_t derive_all_coauthors(std::optional<YearRange> window = std::nullopt);

private:
    std::size_t insert_recorded(const std::string& rule, const rdf::Triple& t);
    std::vector<std::pair<rdf::Term, rdf::Term>> coauthor_edges(const rdf::Term& source, const rdf::Term& sink,
                                                                std::uint64_t weight,
                                                                const std::optional<YearRange>& window) const;
    static std::string coauthor_key(const rdf::Term& source, const rdf::Term& sink,
                                    const std::optional<YearRange>& window);

    store::TripleStore* store_;
    MaterializationLedger ledger_;
};

}  // namespace mesur::inference
