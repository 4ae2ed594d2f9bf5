#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace mesur::rdf {

enum class TermKind : std::uint8_t { Iri = 0, Literal = 1, Blank = 2 };

/// Literal datatypes understood by the store. Anything else is rejected at
/// parse time.
enum class Datatype : std::uint8_t { None = 0, String = 1, Integer = 2, Decimal = 3, DateTime = 4 };

namespace xsd {
inline constexpr std::string_view kNamespace = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view kString = "http://www.w3.org/2001/XMLSchema#string";
inline constexpr std::string_view kInteger = "http://www.w3.org/2001/XMLSchema#integer";
inline constexpr std::string_view kDecimal = "http://www.w3.org/2001/XMLSchema#decimal";
inline constexpr std::string_view kDateTime = "http://www.w3.org/2001/XMLSchema#dateTime";
}  // namespace xsd

std::string_view datatype_iri(Datatype dt);
std::string_view datatype_name(Datatype dt);
/// Maps a datatype IRI to its tag; returns Datatype::None for unsupported IRIs.
Datatype datatype_from_iri(std::string_view iri);

/// An RDF term: IRI, typed literal, or blank node. Construction validates the
/// lexical form, so every Term in the system satisfies the term invariants.
class Term {
public:
    Term() = default;

    /// Throws InvalidArgument if the IRI is empty or contains whitespace.
    static Term iri(std::string value);
    /// Throws InvalidArgument if the lexical form is not valid for the datatype.
    static Term literal(std::string lexical, Datatype datatype = Datatype::String);
    /// Throws InvalidArgument on an empty label or one with illegal characters.
    static Term blank(std::string label);

    static Term string_literal(std::string value) { return literal(std::move(value), Datatype::String); }
    static Term integer_literal(std::int64_t value);
    /// A year-precision datetime literal, e.g. "2007".
    static Term year_literal(int year);

    TermKind kind() const noexcept { return kind_; }
    Datatype datatype() const noexcept { return datatype_; }
    /// IRI string, literal lexical form, or blank label (without "_:").
    const std::string& value() const noexcept { return value_; }

    bool is_iri() const noexcept { return kind_ == TermKind::Iri; }
    bool is_literal() const noexcept { return kind_ == TermKind::Literal; }
    bool is_blank() const noexcept { return kind_ == TermKind::Blank; }
    bool is_resource() const noexcept { return kind_ != TermKind::Literal; }

    /// N-Triples rendering of the term.
    std::string to_string() const;

    friend bool operator==(const Term&, const Term&) = default;
    friend auto operator<=>(const Term&, const Term&) = default;

private:
    Term(TermKind kind, Datatype dt, std::string value)
        : kind_(kind), datatype_(dt), value_(std::move(value)) {}

    TermKind kind_ = TermKind::Iri;
    Datatype datatype_ = Datatype::None;
    std::string value_;
};

struct TermHash {
    std::size_t operator()(const Term& t) const noexcept {
        std::size_t h = std::hash<std::string>{}(t.value());
        return h ^ (static_cast<std::size_t>(t.kind()) * 0x9e3779b97f4a7c15ULL) ^
               (static_cast<std::size_t>(t.datatype()) << 7);
    }
};

struct Triple {
    Term subject;
    Term predicate;
    Term object;

    friend bool operator==(const Triple&, const Triple&) = default;
    friend auto operator<=>(const Triple&, const Triple&) = default;
};

/// Builds a triple, enforcing: predicate is an IRI, subject is not a literal.
Triple make_triple(Term subject, Term predicate, Term object);
bool is_well_formed(const Triple& t) noexcept;

}  // namespace mesur::rdf
