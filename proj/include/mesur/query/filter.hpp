#pragma once

#include <functional>

#include "mesur/query/ast.hpp"

namespace mesur::query {

/// Compares two terms under the dialect's rules:
///   numeric vs numeric       exact decimal comparison
///   datetime vs datetime     at the coarser precision of the two
///   datetime vs integer      the integer is a year
///   string vs string         byte-wise lexicographic
///   resource vs resource     '=' only (term identity)
/// Anything else throws QueryError.
bool compare_terms(const rdf::Term& lhs, CompareOp op, const rdf::Term& rhs);

/// Resolves a variable name to its bound term during evaluation.
using VariableLookup = std::function<const rdf::Term&(const std::string&)>;

bool evaluate_filter(const FilterExpr& filter, const VariableLookup& lookup);

}  // namespace mesur::query
