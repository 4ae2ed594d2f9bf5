#include "mesur/query/filter.hpp"

#include "mesur/error.hpp"
#include "mesur/rdf/datetime.hpp"
#include "mesur/rdf/decimal.hpp"

namespace mesur::query {

using rdf::Datatype;
using rdf::Term;

namespace {

bool is_numeric(const Term& t) {
    return t.is_literal() && (t.datatype() == Datatype::Integer || t.datatype() == Datatype::Decimal);
}

bool is_datetime(const Term& t) { return t.is_literal() && t.datatype() == Datatype::DateTime; }

bool apply(int cmp, CompareOp op) {
    switch (op) {
        case CompareOp::Equal: return cmp == 0;
        case CompareOp::Less: return cmp < 0;
        case CompareOp::Greater: return cmp > 0;
    }
    return false;
}

std::string_view op_name(CompareOp op) {
    switch (op) {
        case CompareOp::Equal: return "=";
        case CompareOp::Less: return "<";
        case CompareOp::Greater: return ">";
    }
    return "?";
}

rdf::DateTime datetime_of(const Term& t) {
    auto dt = rdf::parse_datetime(t.value());
    // literals are validated on construction, so this cannot fail
    if (!dt) throw QueryError("invalid datetime literal " + t.to_string());
    return *dt;
}

[[noreturn]] void mismatch(const Term& a, CompareOp op, const Term& b) {
    throw QueryError("cannot compare " + a.to_string() + " " + std::string(op_name(op)) + " " + b.to_string());
}

}  // namespace

bool compare_terms(const Term& a, CompareOp op, const Term& b) {
    if (is_numeric(a) && is_numeric(b)) return apply(rdf::compare_numeric(a.value(), b.value()), op);
    if (is_datetime(a) && is_datetime(b)) return apply(rdf::compare_datetime(datetime_of(a), datetime_of(b)), op);
    if (is_datetime(a) && b.is_literal() && b.datatype() == Datatype::Integer) {
        return apply(rdf::compare_numeric(std::to_string(datetime_of(a).year), b.value()), op);
    }
    if (a.is_literal() && a.datatype() == Datatype::Integer && is_datetime(b)) {
        return apply(rdf::compare_numeric(a.value(), std::to_string(datetime_of(b).year)), op);
    }
    if (a.is_literal() && b.is_literal() && a.datatype() == Datatype::String && b.datatype() == Datatype::String) {
        return apply(a.value().compare(b.value()), op);
    }
    if (a.is_resource() && b.is_resource() && op == CompareOp::Equal) return a == b;
    mismatch(a, op, b);
}

bool evaluate_filter(const FilterExpr& f, const VariableLookup& lookup) {
    switch (f.kind) {
        case FilterExpr::Kind::Compare: {
            auto resolve = [&](const Operand& op) -> const Term& {
                if (const auto* v = std::get_if<Variable>(&op)) return lookup(v->name);
                return std::get<Term>(op);
            };
            return compare_terms(resolve(f.comparison.lhs), f.comparison.op, resolve(f.comparison.rhs));
        }
        case FilterExpr::Kind::And:
            for (const auto& c : f.children) {
                if (!evaluate_filter(c, lookup)) return false;
            }
            return true;
        case FilterExpr::Kind::Or:
            for (const auto& c : f.children) {
                if (evaluate_filter(c, lookup)) return true;
            }
            return false;
    }
    return false;
}

}  // namespace mesur::query
