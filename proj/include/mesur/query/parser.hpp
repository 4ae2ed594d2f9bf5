#pragma once

#include <string_view>

#include "mesur/query/ast.hpp"
#include "mesur/rdf/namespaces.hpp"

namespace mesur::query {

/// Parses and statically validates a query script.
///
///   script      := block+ insert* "."
///   block       := "SELECT" var+ "WHERE" patternItem+
///   patternItem := "(" term term term ")" [ "AND" filter ]
///   filter      := andExpr ("OR" andExpr)*
///   andExpr     := atom ("AND" atom)*
///   atom        := comparison | "(" filter ")"
///   comparison  := operand ("=" | "<" | ">") operand
///   insert      := "INSERT" "<" itemTerm itemTerm itemObj ">"
///   itemObj     := itemTerm | literal | aggExpr
///   aggExpr     := "COUNT" "(" var ")" | "(" aggExpr "/" aggExpr ")"
///
/// Every failure (lexical, syntactic, unknown prefix, unbound or mis-scoped
/// variable) is reported as a single ParseError carrying line and column.
/// Projected variable names must be unique across blocks; an insert template
/// may draw row variables from at most one block.
QueryScript parse_script(std::string_view text,
                         const rdf::NamespaceTable& namespaces = rdf::NamespaceTable::defaults());

}  // namespace mesur::query
