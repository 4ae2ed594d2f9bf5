#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mesur/rdf/term.hpp"
#include "mesur/store/triple_store.hpp"

namespace mesur::query {

using store::Variable;

struct SourcePos {
    std::size_t line = 1;
    std::size_t column = 1;
};

/// A pattern slot: a constant term or a variable.
using PatternTerm = std::variant<rdf::Term, Variable>;

struct Pattern {
    PatternTerm subject;
    PatternTerm predicate;
    PatternTerm object;
};

enum class CompareOp { Equal, Less, Greater };

/// Filter operand: a variable or a literal constant.
using Operand = std::variant<Variable, rdf::Term>;

struct Comparison {
    Operand lhs;
    CompareOp op = CompareOp::Equal;
    Operand rhs;
};

/// Boolean filter tree. Leaves are comparisons; inner nodes combine their
/// children with AND or OR.
struct FilterExpr {
    enum class Kind { Compare, And, Or };
    Kind kind = Kind::Compare;
    Comparison comparison;              // Kind::Compare
    std::vector<FilterExpr> children;   // Kind::And / Kind::Or
};

struct PatternItem {
    Pattern pattern;
    std::optional<FilterExpr> filter;
    SourcePos pos;
};

struct SelectBlock {
    std::vector<std::string> projection;  // variable names without '?'
    std::vector<PatternItem> items;
    SourcePos pos;
};

/// "_123": one fresh blank node per script execution.
struct Placeholder {
    std::string label;
    friend bool operator==(const Placeholder&, const Placeholder&) = default;
};

/// COUNT(?v), or a quotient of two aggregate expressions.
struct AggExpr {
    enum class Kind { Count, Divide };
    Kind kind = Kind::Count;
    std::string variable;            // Kind::Count
    std::vector<AggExpr> operands;   // Kind::Divide: numerator, denominator
};

using ItemTerm = std::variant<rdf::Term, Variable, Placeholder>;
using ItemObject = std::variant<rdf::Term, Variable, Placeholder, AggExpr>;

struct InsertTemplate {
    ItemTerm subject;
    ItemTerm predicate;
    ItemObject object;
    SourcePos pos;
    /// Index of the block whose rows drive this template, or nullopt for a
    /// template that runs once per script (constants, placeholders, aggregates).
    std::optional<std::size_t> row_block;
};

struct QueryScript {
    std::vector<SelectBlock> blocks;
    std::vector<InsertTemplate> inserts;

    /// Index of the block that projects `variable`, if any.
    std::optional<std::size_t> projecting_block(const std::string& variable) const;
};

}  // namespace mesur::query
