#include "mesur/rdf/term.hpp"

#include <cctype>

#include "mesur/error.hpp"
#include "mesur/rdf/datetime.hpp"
#include "mesur/rdf/decimal.hpp"
#include "mesur/rdf/ntriples.hpp"

namespace mesur::rdf {

namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool has_scheme(std::string_view iri) {
    if (iri.empty() || !std::isalpha(static_cast<unsigned char>(iri[0]))) return false;
    for (std::size_t i = 1; i < iri.size(); ++i) {
        const char c = iri[i];
        if (c == ':') return true;
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '.') return false;
    }
    return false;
}

bool is_label_char(char c, bool first) {
    const auto u = static_cast<unsigned char>(c);
    if (u >= 0x80 || std::isalnum(u) || c == '_') return true;
    return !first && (c == '-' || c == '.');
}

}  // namespace

std::string_view datatype_iri(Datatype dt) {
    switch (dt) {
        case Datatype::String: return xsd::kString;
        case Datatype::Integer: return xsd::kInteger;
        case Datatype::Decimal: return xsd::kDecimal;
        case Datatype::DateTime: return xsd::kDateTime;
        case Datatype::None: break;
    }
    return {};
}

std::string_view datatype_name(Datatype dt) {
    switch (dt) {
        case Datatype::String: return "string";
        case Datatype::Integer: return "integer";
        case Datatype::Decimal: return "decimal";
        case Datatype::DateTime: return "datetime";
        case Datatype::None: break;
    }
    return "none";
}

Datatype datatype_from_iri(std::string_view iri) {
    if (iri == xsd::kString) return Datatype::String;
    if (iri == xsd::kInteger) return Datatype::Integer;
    if (iri == xsd::kDecimal) return Datatype::Decimal;
    if (iri == xsd::kDateTime) return Datatype::DateTime;
    return Datatype::None;
}

Term Term::iri(std::string value) {
    if (value.empty()) throw InvalidArgument("IRI must not be empty");
    for (char c : value) {
        if (is_space(c)) throw InvalidArgument("IRI contains whitespace: '" + value + "'");
    }
    if (!has_scheme(value)) throw InvalidArgument("IRI is not absolute: '" + value + "'");
    return Term(TermKind::Iri, Datatype::None, std::move(value));
}

Term Term::literal(std::string lexical, Datatype datatype) {
    switch (datatype) {
        case Datatype::String: break;
        case Datatype::Integer:
            if (!is_integer_lexical(lexical)) throw InvalidArgument("invalid integer literal '" + lexical + "'");
            break;
        case Datatype::Decimal:
            if (!is_decimal_lexical(lexical)) throw InvalidArgument("invalid decimal literal '" + lexical + "'");
            break;
        case Datatype::DateTime:
            if (!parse_datetime(lexical)) throw InvalidArgument("invalid ISO-8601 datetime literal '" + lexical + "'");
            break;
        case Datatype::None: throw InvalidArgument("literal requires a datatype");
    }
    return Term(TermKind::Literal, datatype, std::move(lexical));
}

Term Term::blank(std::string label) {
    if (label.empty()) throw InvalidArgument("blank node label must not be empty");
    for (std::size_t i = 0; i < label.size(); ++i) {
        if (!is_label_char(label[i], i == 0)) throw InvalidArgument("illegal character in blank node label '" + label + "'");
    }
    if (label.back() == '.') throw InvalidArgument("blank node label must not end with '.'");
    return Term(TermKind::Blank, Datatype::None, std::move(label));
}

Term Term::integer_literal(std::int64_t value) {
    return Term(TermKind::Literal, Datatype::Integer, std::to_string(value));
}

Term Term::year_literal(int year) {
    if (year < 0 || year > 9999) throw InvalidArgument("year out of range: " + std::to_string(year));
    std::string s = std::to_string(year);
    while (s.size() < 4) s.insert(s.begin(), '0');
    return Term(TermKind::Literal, Datatype::DateTime, std::move(s));
}

std::string Term::to_string() const {
    switch (kind_) {
        case TermKind::Iri: return "<" + escape_iri(value_) + ">";
        case TermKind::Blank: return "_:" + value_;
        case TermKind::Literal: {
            std::string out = "\"" + escape_string(value_) + "\"";
            if (datatype_ != Datatype::String) {
                out += "^^<";
                out += datatype_iri(datatype_);
                out += ">";
            }
            return out;
        }
    }
    return {};
}

bool is_well_formed(const Triple& t) noexcept {
    return t.predicate.is_iri() && !t.subject.is_literal();
}

Triple make_triple(Term subject, Term predicate, Term object) {
    if (!predicate.is_iri()) throw InvalidArgument("predicate must be an IRI, got " + predicate.to_string());
    if (subject.is_literal()) throw InvalidArgument("literal in subject position: " + subject.to_string());
    return Triple{std::move(subject), std::move(predicate), std::move(object)};
}

}  // namespace mesur::rdf
