#pragma once

// Reference implementations used only by tests. They share the AST and term
// types with the library but none of its evaluation code: joins are naive
// backtracking over a flat triple list, comparisons work on lexical forms,
// and rules are hand-written loops.

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "mesur/query/ast.hpp"
#include "mesur/rdf/term.hpp"

namespace mesur::testkit {

using Solution = std::map<std::string, rdf::Term>;

/// True, false, or throws std::domain_error for incomparable operands.
bool naive_compare(const rdf::Term& a, query::CompareOp op, const rdf::Term& b);

/// All distinct solutions of the block, patterns taken in written order and
/// filters checked on complete solutions.
std::set<Solution> naive_solutions(const query::SelectBlock& block, const std::vector<rdf::Triple>& triples);

/// Distinct projections of the solutions onto the block's projection.
std::set<std::vector<rdf::Term>> naive_rows(const query::SelectBlock& block, const std::set<Solution>& solutions);

struct NaiveExecution {
    std::vector<std::set<Solution>> solutions;         // per block
    std::vector<std::set<std::vector<rdf::Term>>> rows;  // per block
    std::vector<std::size_t> template_runs;            // per insert template
    std::set<rdf::Triple> produced;
};

/// Instantiates every insert template the way the query dialect defines it,
/// with placeholders resolved by `placeholder`. Numbers are coerced to the
/// schema range of the predicate; quotients are rendered with six digits.
NaiveExecution naive_execute(const query::QueryScript& script, const std::vector<rdf::Triple>& triples,
                             const std::function<rdf::Term(const std::string&)>& placeholder);

/// n / d rounded half-to-even to `digits` fractional digits.
std::string naive_quotient(std::int64_t n, std::int64_t d, int digits = 6);

/// Expected output of a registered rule on `base`: every triple the rule
/// derives that is not already in `base`. Coauthor nodes are blank, so the
/// coauthor oracle returns triples in canonical form (see canonical_coauthor).
std::set<rdf::Triple> rule_oracle(const std::string& rule, const std::vector<rdf::Triple>& base);

/// Replaces each Coauthor blank node by an IRI naming its (source, sink) pair.
std::set<rdf::Triple> canonical_coauthor(const std::set<rdf::Triple>& triples);

/// Equal triple sets up to a renaming of blank nodes. Blank nodes are told
/// apart by iterated neighbourhood hashing; the check fails if two nodes of
/// one graph end up indistinguishable.
bool isomorphic(const std::vector<rdf::Triple>& a, const std::vector<rdf::Triple>& b);

}  // namespace mesur::testkit
