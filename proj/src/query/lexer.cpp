#include "lexer.hpp"

#include <cctype>

#include "mesur/error.hpp"

namespace mesur::query::detail {

std::string_view token_kind_name(TokenKind kind) {
    switch (kind) {
        case TokenKind::Select: return "SELECT";
        case TokenKind::Where: return "WHERE";
        case TokenKind::And: return "AND";
        case TokenKind::Or: return "OR";
        case TokenKind::Insert: return "INSERT";
        case TokenKind::Count: return "COUNT";
        case TokenKind::Word: return "word";
        case TokenKind::Var: return "variable";
        case TokenKind::Placeholder: return "blank placeholder";
        case TokenKind::IriRef: return "IRI";
        case TokenKind::PName: return "prefixed name";
        case TokenKind::Integer: return "integer";
        case TokenKind::Decimal: return "decimal";
        case TokenKind::String: return "string";
        case TokenKind::LParen: return "'('";
        case TokenKind::RParen: return "')'";
        case TokenKind::Lt: return "'<'";
        case TokenKind::Gt: return "'>'";
        case TokenKind::Eq: return "'='";
        case TokenKind::Slash: return "'/'";
        case TokenKind::Dot: return "'.'";
        case TokenKind::End: return "end of input";
    }
    return "?";
}

namespace {

bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_ws(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

bool is_prefix_char(char c) { return is_alpha(c) || is_digit(c) || c == '_' || c == '-'; }
bool is_local_char(char c) {
    return is_alpha(c) || is_digit(c) || c == '_' || c == '-' || c == ':' || c == '.' || c == '%';
}
bool is_name_char(char c) { return is_alpha(c) || is_digit(c) || c == '_'; }

bool is_delimiter(char c) {
    return c == '\0' || is_ws(c) || c == '(' || c == ')' || c == '<' || c == '>' || c == '=' || c == '/' ||
           c == '.' || c == '#';
}

std::string upper(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return out;
}

class Lexer {
public:
    explicit Lexer(std::string_view text) : s_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_ws_and_comments();
            Token t;
            t.pos = here();
            if (done()) {
                t.kind = TokenKind::End;
                out.push_back(std::move(t));
                return out;
            }
            lex_one(t);
            out.push_back(std::move(t));
        }
    }

private:
    [[noreturn]] void fail(SourcePos pos, const std::string& message) const {
        throw ParseError(pos.line, pos.column, message);
    }

    bool done() const { return i_ >= s_.size(); }
    char peek(std::size_t ahead = 0) const { return i_ + ahead < s_.size() ? s_[i_ + ahead] : '\0'; }
    SourcePos here() const { return SourcePos{line_, col_}; }

    void advance() {
        if (s_[i_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++i_;
    }

    void skip_ws_and_comments() {
        while (!done()) {
            if (is_ws(peek())) {
                advance();
            } else if (peek() == '#') {
                while (!done() && peek() != '\n') advance();
            } else {
                break;
            }
        }
    }

    /// Terms must be followed by whitespace or punctuation.
    void require_delimiter() const {
        if (!is_delimiter(peek())) {
            fail(here(), std::string("unexpected character '") + peek() + "' (missing whitespace?)");
        }
    }

    void lex_one(Token& t) {
        const char c = peek();
        switch (c) {
            case '(': t.kind = TokenKind::LParen; advance(); return;
            case ')': t.kind = TokenKind::RParen; advance(); return;
            case '>': t.kind = TokenKind::Gt; advance(); return;
            case '=': t.kind = TokenKind::Eq; advance(); return;
            case '/': t.kind = TokenKind::Slash; advance(); return;
            case '.':
                t.kind = TokenKind::Dot;
                advance();
                return;
            case '<': lex_angle(t); return;
            case '?': lex_var(t); return;
            case '"': lex_string(t); return;
            default: break;
        }
        if (c == '_' && is_digit(peek(1))) {
            lex_placeholder(t);
        } else if (is_digit(c) || ((c == '-' || c == '+') && is_digit(peek(1)))) {
            lex_number(t);
        } else if (is_alpha(c)) {
            lex_word(t);
        } else {
            fail(here(), std::string("unexpected character '") + c + "'");
        }
    }

    void lex_angle(Token& t) {
        // An IRI reference is '<' non-space... '>' containing a scheme colon;
        // anything else is the '<' operator / insert delimiter.
        std::size_t j = i_ + 1;
        bool ok = j < s_.size() && is_alpha(s_[j]);
        bool colon = false;
        while (ok && j < s_.size() && s_[j] != '>') {
            const char c = s_[j];
            if (is_ws(c) || c == '<' || c == '"' || c == '{' || c == '}' || c == '|' || c == '\\' || c == '^' ||
                c == '`') {
                ok = false;
                break;
            }
            colon = colon || c == ':';
            ++j;
        }
        if (ok && colon && j < s_.size()) {
            t.kind = TokenKind::IriRef;
            t.text = std::string(s_.substr(i_ + 1, j - i_ - 1));
            while (i_ <= j) advance();
            require_delimiter();
            return;
        }
        t.kind = TokenKind::Lt;
        advance();
    }

    void lex_var(Token& t) {
        advance();
        const std::size_t start = i_;
        while (!done() && is_name_char(peek())) advance();
        if (i_ == start) fail(t.pos, "empty variable name after '?'");
        t.kind = TokenKind::Var;
        t.text = std::string(s_.substr(start, i_ - start));
        require_delimiter();
    }

    void lex_placeholder(Token& t) {
        const std::size_t start = i_;
        advance();
        while (!done() && is_digit(peek())) advance();
        t.kind = TokenKind::Placeholder;
        t.text = std::string(s_.substr(start, i_ - start));
        require_delimiter();
    }

    void lex_number(Token& t) {
        const std::size_t start = i_;
        if (peek() == '-' || peek() == '+') advance();
        while (!done() && is_digit(peek())) advance();
        t.kind = TokenKind::Integer;
        if (peek() == '.' && is_digit(peek(1))) {
            advance();
            while (!done() && is_digit(peek())) advance();
            t.kind = TokenKind::Decimal;
        }
        t.text = std::string(s_.substr(start, i_ - start));
        require_delimiter();
    }

    void lex_word(Token& t) {
        const std::size_t start = i_;
        while (!done() && is_prefix_char(peek())) advance();
        if (peek() == ':') {
            advance();
            while (!done() && is_local_char(peek())) advance();
            // a trailing '.' ends the script, not the name
            while (i_ > start && s_[i_ - 1] == '.') {
                --i_;
                --col_;
            }
            t.kind = TokenKind::PName;
            t.text = std::string(s_.substr(start, i_ - start));
            require_delimiter();
            return;
        }
        t.text = std::string(s_.substr(start, i_ - start));
        const std::string kw = upper(t.text);
        if (kw == "SELECT") t.kind = TokenKind::Select;
        else if (kw == "WHERE") t.kind = TokenKind::Where;
        else if (kw == "AND") t.kind = TokenKind::And;
        else if (kw == "OR") t.kind = TokenKind::Or;
        else if (kw == "INSERT") t.kind = TokenKind::Insert;
        else if (kw == "COUNT") t.kind = TokenKind::Count;
        else t.kind = TokenKind::Word;
        if (t.kind != TokenKind::Count) require_delimiter();
    }

    void lex_string(Token& t) {
        advance();
        std::string value;
        while (true) {
            if (done()) fail(t.pos, "unterminated string literal");
            const char c = peek();
            if (c == '"') {
                advance();
                break;
            }
            if (c == '\n') fail(here(), "line break in string literal");
            if (c == '\\') {
                const SourcePos esc = here();
                advance();
                switch (peek()) {
                    case 'n': value += '\n'; break;
                    case 't': value += '\t'; break;
                    case 'r': value += '\r'; break;
                    case '"': value += '"'; break;
                    case '\\': value += '\\'; break;
                    default: fail(esc, "invalid escape sequence in string literal");
                }
                advance();
                continue;
            }
            value += c;
            advance();
        }
        t.kind = TokenKind::String;
        t.text = std::move(value);
        if (peek() == '^' && peek(1) == '^') {
            advance();
            advance();
            if (peek() == '<') {
                const std::size_t start = i_ + 1;
                while (!done() && peek() != '>' && !is_ws(peek())) advance();
                if (peek() != '>') fail(here(), "unterminated datatype IRI");
                t.datatype = std::string(s_.substr(start, i_ - start));
                t.datatype_is_iri = true;
                advance();
            } else {
                const std::size_t start = i_;
                while (!done() && (is_prefix_char(peek()) || peek() == ':')) advance();
                if (i_ == start) fail(here(), "expected datatype after '^^'");
                t.datatype = std::string(s_.substr(start, i_ - start));
            }
        }
        require_delimiter();
    }

    std::string_view s_;
    std::size_t i_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

}  // namespace

std::vector<Token> tokenize(std::string_view text) { return Lexer(text).run(); }

}  // namespace mesur::query::detail
