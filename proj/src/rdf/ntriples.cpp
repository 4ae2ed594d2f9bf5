#include "mesur/rdf/ntriples.hpp"

#include <cctype>
#include <cstdio>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "mesur/error.hpp"

namespace mesur::rdf {

namespace {

bool iri_forbidden(unsigned char c) {
    return c <= 0x20 || c == '<' || c == '>' || c == '"' || c == '{' || c == '}' || c == '|' ||
           c == '^' || c == '`' || c == '\\';
}

void append_utf8(std::string& out, std::uint32_t cp) {
    if (cp < 0x80) {
        out += static_cast<char>(cp);
    } else if (cp < 0x800) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
        out += static_cast<char>(0xF0 | (cp >> 18));
        out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
}

void append_u_escape(std::string& out, unsigned char c) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "\\u%04X", static_cast<unsigned>(c));
    out += buf;
}

/// Parses one N-Triples statement line.
class LineParser {
public:
    LineParser(std::string_view line, std::size_t line_no) : s_(line), line_(line_no) {}

    /// Returns nullopt for blank and comment-only lines.
    std::optional<Triple> parse() {
        skip_ws();
        if (done() || peek() == '#') return std::nullopt;

        Term subject = parse_subject();
        skip_ws();
        if (peek() != '<') fail("expected predicate IRI");
        Term predicate = parse_iri();
        skip_ws();
        Term object = parse_object();
        skip_ws();
        if (!eat('.')) fail("expected '.' after object");
        skip_ws();
        if (!done() && peek() != '#') fail("unexpected content after '.'");
        return Triple{std::move(subject), std::move(predicate), std::move(object)};
    }

private:
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(line_, pos_ + 1, message); }
    [[noreturn]] void fail_at(std::size_t pos, const std::string& message) const {
        throw ParseError(line_, pos + 1, message);
    }

    bool done() const { return pos_ >= s_.size(); }
    char peek() const { return done() ? '\0' : s_[pos_]; }
    bool eat(char c) {
        if (peek() != c || done()) return false;
        ++pos_;
        return true;
    }
    void skip_ws() {
        while (!done() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\r')) ++pos_;
    }

    Term parse_subject() {
        if (peek() == '<') return parse_iri();
        if (peek() == '_') return parse_blank();
        fail("expected subject IRI or blank node");
    }

    Term parse_object() {
        if (peek() == '<') return parse_iri();
        if (peek() == '_') return parse_blank();
        if (peek() == '"') return parse_literal();
        fail("expected object IRI, blank node, or literal");
    }

    std::uint32_t parse_hex(std::size_t n) {
        std::uint32_t v = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (done() || !std::isxdigit(static_cast<unsigned char>(peek()))) fail("invalid unicode escape");
            const char c = s_[pos_++];
            v = v * 16 + static_cast<std::uint32_t>(std::isdigit(static_cast<unsigned char>(c))
                                                        ? c - '0'
                                                        : std::tolower(static_cast<unsigned char>(c)) - 'a' + 10);
        }
        if (v > 0x10FFFF || (v >= 0xD800 && v <= 0xDFFF)) fail("escape is not a Unicode scalar value");
        return v;
    }

    void parse_uchar(std::string& out) {
        // positioned just after the backslash
        if (eat('u')) {
            append_utf8(out, parse_hex(4));
        } else if (eat('U')) {
            append_utf8(out, parse_hex(8));
        } else {
            fail("invalid escape sequence");
        }
    }

    std::string parse_iri_text() {
        const std::size_t start = pos_;
        if (!eat('<')) fail("expected '<'");
        std::string out;
        while (true) {
            if (done()) fail_at(start, "unterminated IRI");
            const char c = s_[pos_];
            if (c == '>') {
                ++pos_;
                break;
            }
            if (c == '\\') {
                ++pos_;
                parse_uchar(out);
                continue;
            }
            if (iri_forbidden(static_cast<unsigned char>(c))) fail("illegal character in IRI");
            out += c;
            ++pos_;
        }
        return out;
    }

    Term parse_iri() {
        const std::size_t start = pos_;
        std::string text = parse_iri_text();
        try {
            return Term::iri(std::move(text));
        } catch (const InvalidArgument& e) {
            fail_at(start, e.what());
        }
    }

    Term parse_blank() {
        const std::size_t start = pos_;
        if (!eat('_') || !eat(':')) fail_at(start, "expected blank node '_:'");
        const std::size_t label_start = pos_;
        while (!done()) {
            const auto c = static_cast<unsigned char>(s_[pos_]);
            const bool first = pos_ == label_start;
            if (c >= 0x80 || std::isalnum(c) || c == '_' || (!first && (c == '-' || c == '.'))) {
                ++pos_;
            } else {
                break;
            }
        }
        // a trailing '.' terminates the statement rather than the label
        while (pos_ > label_start && s_[pos_ - 1] == '.') --pos_;
        if (pos_ == label_start) fail("empty blank node label");
        return Term::blank(std::string(s_.substr(label_start, pos_ - label_start)));
    }

    Term parse_literal() {
        const std::size_t start = pos_;
        eat('"');
        std::string lexical;
        while (true) {
            if (done()) fail_at(start, "unterminated string literal");
            const char c = s_[pos_];
            if (c == '"') {
                ++pos_;
                break;
            }
            if (c == '\n' || c == '\r') fail("raw line break in string literal");
            if (c == '\\') {
                ++pos_;
                switch (peek()) {
                    case 't': lexical += '\t'; ++pos_; break;
                    case 'b': lexical += '\b'; ++pos_; break;
                    case 'n': lexical += '\n'; ++pos_; break;
                    case 'r': lexical += '\r'; ++pos_; break;
                    case 'f': lexical += '\f'; ++pos_; break;
                    case '"': lexical += '"'; ++pos_; break;
                    case '\'': lexical += '\''; ++pos_; break;
                    case '\\': lexical += '\\'; ++pos_; break;
                    default: parse_uchar(lexical); break;
                }
                continue;
            }
            lexical += c;
            ++pos_;
        }

        Datatype dt = Datatype::String;
        if (peek() == '@') fail("language-tagged literals are not supported");
        if (eat('^')) {
            if (!eat('^')) fail("expected '^^'");
            const std::size_t dt_pos = pos_;
            const std::string iri = parse_iri_text();
            dt = datatype_from_iri(iri);
            if (dt == Datatype::None) fail_at(dt_pos, "unsupported literal datatype <" + iri + ">");
        }
        try {
            return Term::literal(std::move(lexical), dt);
        } catch (const InvalidArgument& e) {
            fail_at(start, e.what());
        }
    }

    std::string_view s_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

}  // namespace

void parse_ntriples(std::istream& in, const std::function<void(Triple&&)>& sink) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        LineParser parser(line, line_no);
        if (auto t = parser.parse()) sink(std::move(*t));
    }
}

std::vector<Triple> parse_ntriples(std::istream& in) {
    std::vector<Triple> out;
    parse_ntriples(in, [&](Triple&& t) { out.push_back(std::move(t)); });
    return out;
}

std::vector<Triple> parse_ntriples(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_ntriples(in);
}

std::string escape_iri(std::string_view iri) {
    std::string out;
    out.reserve(iri.size());
    for (char c : iri) {
        const auto u = static_cast<unsigned char>(c);
        if (u < 0x80 && iri_forbidden(u)) {
            append_u_escape(out, u);
        } else {
            out += c;
        }
    }
    return out;
}

std::string escape_string(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '\\': out += "\\\\"; break;
            case '"': out += "\\\""; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20 || c == 0x7F) {
                    append_u_escape(out, static_cast<unsigned char>(c));
                } else {
                    out += c;
                }
        }
    }
    return out;
}

void write_ntriples_line(const Triple& t, std::ostream& out) {
    out << t.subject.to_string() << ' ' << t.predicate.to_string() << ' ' << t.object.to_string() << " .\n";
}

void serialize_ntriples(std::span<const Triple> triples, std::ostream& out) {
    for (const auto& t : triples) write_ntriples_line(t, out);
}

std::string serialize_ntriples(std::span<const Triple> triples) {
    std::ostringstream out;
    serialize_ntriples(triples, out);
    return out.str();
}

}  // namespace mesur::rdf
