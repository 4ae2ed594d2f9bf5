#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "mesur/query/ast.hpp"
#include "mesur/rdf/decimal.hpp"
#include "mesur/store/triple_store.hpp"

namespace mesur::query {

struct BlockResult {
    std::vector<std::string> columns;            // the projection, in order
    std::vector<std::vector<rdf::Term>> rows;    // distinct projected rows, sorted by term id
    /// Distinct solutions over all block variables. This is what COUNT(?v)
    /// reports for the block projecting ?v.
    std::uint64_t solutions = 0;
};

/// Conjunctive evaluation of one block: patterns are joined in a greedy
/// selectivity order with an index nested loop; each filter runs as soon as
/// all of its variables are bound.
BlockResult evaluate_block(const SelectBlock& block, const store::TripleStore& store);

/// The join order evaluate_block uses, as indexes into block.items.
std::vector<std::size_t> join_order(const SelectBlock& block, const store::TripleStore& store);

struct ExecuteOptions {
    /// Fractional digits of decimal values produced by inserts.
    int precision = rdf::kDecimalPrecision;
    /// Supplies the node for a blank placeholder ("_123"). When unset each
    /// placeholder gets a freshly minted blank node.
    std::function<rdf::Term(const std::string& label)> placeholder_factory;
};

struct ExecutionReport {
    std::vector<BlockResult> blocks;
    /// Every triple the insert templates produced, in template order, without repeats.
    std::vector<rdf::Triple> produced;
    /// The subset of `produced` that was not already in the store.
    std::vector<rdf::Triple> new_triples;
    std::map<std::string, rdf::Term> placeholders;

    std::size_t inserted() const noexcept { return new_triples.size(); }
};

/// Evaluates every block, instantiates the insert templates and inserts the
/// result. A template whose variables come from one block runs once per
/// projected row of that block; any other template runs once. All triples
/// are computed before the first insert, so a failing script (for example a
/// division by zero) leaves the store untouched.
///
/// Integer constants and aggregate values are coerced to the range of the
/// predicate when the schema declares one: a year datetime for datetime
/// ranges and a fixed-precision decimal for decimal ranges.
ExecutionReport execute_script(const QueryScript& script, store::TripleStore& store,
                               const ExecuteOptions& options = {});

}  // namespace mesur::query
