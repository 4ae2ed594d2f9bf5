#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mesur/query/ast.hpp"

namespace mesur::query::detail {

enum class TokenKind {
    Select,
    Where,
    And,
    Or,
    Insert,
    Count,
    Word,         // any other bare word; never valid in the grammar
    Var,          // ?name (text holds the name)
    Placeholder,  // _123 (text holds "_123")
    IriRef,       // <...> (text holds the IRI)
    PName,        // prefix:local
    Integer,
    Decimal,
    String,       // text holds the unescaped value; datatype fields optional
    LParen,
    RParen,
    Lt,
    Gt,
    Eq,
    Slash,
    Dot,
    End,
};

std::string_view token_kind_name(TokenKind kind);

struct Token {
    TokenKind kind = TokenKind::End;
    std::string text;
    SourcePos pos;
    std::string datatype;          // String only: "^^" target text, empty if none
    bool datatype_is_iri = false;  // true for ^^<iri>, false for ^^prefix:local
};

/// Splits query text into tokens. Throws ParseError on the first lexical error.
std::vector<Token> tokenize(std::string_view text);

}  // namespace mesur::query::detail
