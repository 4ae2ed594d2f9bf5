#include "mesur/query/parser.hpp"

#include <algorithm>
#include <initializer_list>
#include <set>

#include "lexer.hpp"
#include "mesur/error.hpp"

namespace mesur::query {

using detail::Token;
using detail::TokenKind;
using rdf::Term;

std::optional<std::size_t> QueryScript::projecting_block(const std::string& variable) const {
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const auto& p = blocks[i].projection;
        if (std::find(p.begin(), p.end(), variable) != p.end()) return i;
    }
    return std::nullopt;
}

namespace {

void collect_filter_vars(const FilterExpr& f, std::vector<std::pair<std::string, SourcePos>>& out, SourcePos pos) {
    if (f.kind == FilterExpr::Kind::Compare) {
        for (const Operand* op : {&f.comparison.lhs, &f.comparison.rhs}) {
            if (const auto* v = std::get_if<Variable>(op)) out.emplace_back(v->name, pos);
        }
        return;
    }
    for (const auto& c : f.children) collect_filter_vars(c, out, pos);
}

void collect_agg_vars(const AggExpr& e, std::vector<std::string>& out) {
    if (e.kind == AggExpr::Kind::Count) {
        out.push_back(e.variable);
        return;
    }
    for (const auto& o : e.operands) collect_agg_vars(o, out);
}

class Parser {
public:
    Parser(std::vector<Token> tokens, const rdf::NamespaceTable& ns) : tokens_(std::move(tokens)), ns_(ns) {}

    QueryScript parse() {
        QueryScript script;
        if (peek().kind != TokenKind::Select) fail_expected({TokenKind::Select});
        while (peek().kind == TokenKind::Select) script.blocks.push_back(parse_block());
        while (peek().kind == TokenKind::Insert) script.inserts.push_back(parse_insert());
        if (peek().kind != TokenKind::Dot) {
            fail_expected({TokenKind::Select, TokenKind::Insert, TokenKind::Dot});
        }
        next();
        if (peek().kind != TokenKind::End) fail_expected({TokenKind::End});
        validate(script);
        return script;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() {
        const Token& t = tokens_[pos_];
        if (t.kind != TokenKind::End) ++pos_;
        return t;
    }

    [[noreturn]] static void fail(SourcePos pos, const std::string& message) {
        throw ParseError(pos.line, pos.column, message);
    }

    static std::string describe(const Token& t) {
        switch (t.kind) {
            case TokenKind::Var: return "variable ?" + t.text;
            case TokenKind::Word: return "'" + t.text + "'";
            case TokenKind::PName:
            case TokenKind::Integer:
            case TokenKind::Decimal:
            case TokenKind::Placeholder: return "'" + t.text + "'";
            case TokenKind::IriRef: return "<" + t.text + ">";
            default: return std::string(detail::token_kind_name(t.kind));
        }
    }

    [[noreturn]] void fail_expected(std::initializer_list<TokenKind> expected) const {
        std::string msg = "expected ";
        bool first = true;
        for (auto k : expected) {
            if (!first) msg += " or ";
            msg += detail::token_kind_name(k);
            first = false;
        }
        msg += ", found " + describe(peek());
        fail(peek().pos, msg);
    }

    [[noreturn]] void fail_expected(const std::string& what) const {
        fail(peek().pos, "expected " + what + ", found " + describe(peek()));
    }

    const Token& expect(TokenKind kind) {
        if (peek().kind != kind) fail_expected({kind});
        return next();
    }

    Term expand(const Token& t) const {
        try {
            return ns_.expand(t.text);
        } catch (const UnknownPrefixError& e) {
            fail(t.pos, e.what());
        } catch (const InvalidArgument& e) {
            fail(t.pos, e.what());
        }
    }

    Term make_iri(const Token& t) const {
        try {
            return Term::iri(t.text);
        } catch (const InvalidArgument& e) {
            fail(t.pos, e.what());
        }
    }

    Term make_literal(const Token& t) const {
        try {
            switch (t.kind) {
                case TokenKind::Integer: return Term::literal(t.text, rdf::Datatype::Integer);
                case TokenKind::Decimal: return Term::literal(t.text, rdf::Datatype::Decimal);
                default: break;
            }
            rdf::Datatype dt = rdf::Datatype::String;
            if (!t.datatype.empty()) {
                std::string iri = t.datatype;
                if (!t.datatype_is_iri) {
                    try {
                        iri = ns_.expand(t.datatype).value();
                    } catch (const Error& e) {
                        fail(t.pos, e.what());
                    }
                }
                dt = rdf::datatype_from_iri(iri);
                if (dt == rdf::Datatype::None) fail(t.pos, "unsupported literal datatype <" + iri + ">");
            }
            return Term::literal(t.text, dt);
        } catch (const InvalidArgument& e) {
            fail(t.pos, e.what());
        }
    }

    static bool is_literal_token(TokenKind k) {
        return k == TokenKind::Integer || k == TokenKind::Decimal || k == TokenKind::String;
    }

    SelectBlock parse_block() {
        SelectBlock block;
        block.pos = expect(TokenKind::Select).pos;
        if (peek().kind != TokenKind::Var) fail_expected({TokenKind::Var});
        while (peek().kind == TokenKind::Var) {
            const Token& v = next();
            if (std::find(block.projection.begin(), block.projection.end(), v.text) != block.projection.end()) {
                fail(v.pos, "variable ?" + v.text + " is projected twice");
            }
            block.projection.push_back(v.text);
        }
        expect(TokenKind::Where);
        if (peek().kind != TokenKind::LParen) fail_expected({TokenKind::LParen});
        while (peek().kind == TokenKind::LParen) block.items.push_back(parse_pattern_item());
        return block;
    }

    PatternTerm parse_pattern_term(int slot) {
        const Token& t = peek();
        switch (t.kind) {
            case TokenKind::Var: next(); return Variable{t.text};
            case TokenKind::IriRef: next(); return make_iri(t);
            case TokenKind::PName: next(); return expand(t);
            case TokenKind::Integer:
            case TokenKind::Decimal:
            case TokenKind::String:
                if (slot != 2) fail(t.pos, "literal not allowed in " + std::string(slot == 0 ? "subject" : "predicate") + " position");
                next();
                return make_literal(t);
            default: fail_expected("variable, IRI, prefixed name, or literal");
        }
    }

    PatternItem parse_pattern_item() {
        PatternItem item;
        item.pos = expect(TokenKind::LParen).pos;
        item.pattern.subject = parse_pattern_term(0);
        item.pattern.predicate = parse_pattern_term(1);
        item.pattern.object = parse_pattern_term(2);
        expect(TokenKind::RParen);
        if (peek().kind == TokenKind::And) {
            next();
            item.filter = parse_or();
        }
        return item;
    }

    FilterExpr parse_or() {
        FilterExpr first = parse_and();
        if (peek().kind != TokenKind::Or) return first;
        FilterExpr node;
        node.kind = FilterExpr::Kind::Or;
        node.children.push_back(std::move(first));
        while (peek().kind == TokenKind::Or) {
            next();
            node.children.push_back(parse_and());
        }
        return node;
    }

    FilterExpr parse_and() {
        FilterExpr first = parse_atom();
        if (peek().kind != TokenKind::And) return first;
        FilterExpr node;
        node.kind = FilterExpr::Kind::And;
        node.children.push_back(std::move(first));
        while (peek().kind == TokenKind::And) {
            next();
            node.children.push_back(parse_atom());
        }
        return node;
    }

    FilterExpr parse_atom() {
        if (peek().kind == TokenKind::LParen) {
            next();
            FilterExpr inner = parse_or();
            expect(TokenKind::RParen);
            return inner;
        }
        FilterExpr leaf;
        leaf.comparison.lhs = parse_operand();
        switch (peek().kind) {
            case TokenKind::Eq: leaf.comparison.op = CompareOp::Equal; break;
            case TokenKind::Lt: leaf.comparison.op = CompareOp::Less; break;
            case TokenKind::Gt: leaf.comparison.op = CompareOp::Greater; break;
            default: fail_expected({TokenKind::Eq, TokenKind::Lt, TokenKind::Gt});
        }
        next();
        leaf.comparison.rhs = parse_operand();
        return leaf;
    }

    Operand parse_operand() {
        const Token& t = peek();
        if (t.kind == TokenKind::Var) {
            next();
            return Variable{t.text};
        }
        if (is_literal_token(t.kind)) {
            next();
            return make_literal(t);
        }
        if (t.kind == TokenKind::IriRef) {
            next();
            return make_iri(t);
        }
        if (t.kind == TokenKind::PName) {
            next();
            return expand(t);
        }
        fail_expected("variable, literal, or IRI");
    }

    ItemTerm parse_item_term(int slot) {
        const Token& t = peek();
        switch (t.kind) {
            case TokenKind::Var: next(); return Variable{t.text};
            case TokenKind::IriRef: next(); return make_iri(t);
            case TokenKind::PName: next(); return expand(t);
            case TokenKind::Placeholder:
                if (slot == 1) fail(t.pos, "blank placeholder " + t.text + " cannot be a predicate");
                next();
                return Placeholder{t.text};
            default:
                if (is_literal_token(t.kind)) {
                    fail(t.pos, "literal not allowed in " + std::string(slot == 0 ? "subject" : "predicate") + " position");
                }
                fail_expected("variable, IRI, prefixed name, or blank placeholder");
        }
    }

    AggExpr parse_agg() {
        if (peek().kind == TokenKind::Count) {
            next();
            expect(TokenKind::LParen);
            AggExpr e;
            e.kind = AggExpr::Kind::Count;
            e.variable = expect(TokenKind::Var).text;
            expect(TokenKind::RParen);
            return e;
        }
        if (peek().kind == TokenKind::LParen) {
            next();
            AggExpr e;
            e.kind = AggExpr::Kind::Divide;
            e.operands.push_back(parse_agg());
            expect(TokenKind::Slash);
            e.operands.push_back(parse_agg());
            expect(TokenKind::RParen);
            return e;
        }
        fail_expected({TokenKind::Count, TokenKind::LParen});
    }

    ItemObject parse_item_object() {
        const Token& t = peek();
        if (is_literal_token(t.kind)) {
            next();
            return make_literal(t);
        }
        if (t.kind == TokenKind::Count || t.kind == TokenKind::LParen) return parse_agg();
        ItemTerm term = parse_item_term(2);
        return std::visit([](auto&& v) -> ItemObject { return v; }, std::move(term));
    }

    InsertTemplate parse_insert() {
        InsertTemplate tpl;
        tpl.pos = expect(TokenKind::Insert).pos;
        expect(TokenKind::Lt);
        tpl.subject = parse_item_term(0);
        tpl.predicate = parse_item_term(1);
        tpl.object = parse_item_object();
        expect(TokenKind::Gt);
        return tpl;
    }

    static void add_pattern_vars(const PatternTerm& t, std::set<std::string>& out) {
        if (const auto* v = std::get_if<Variable>(&t)) out.insert(v->name);
    }

    static void validate(QueryScript& script) {
        std::set<std::string> projected;
        for (const auto& block : script.blocks) {
            std::set<std::string> vars;
            for (const auto& item : block.items) {
                add_pattern_vars(item.pattern.subject, vars);
                add_pattern_vars(item.pattern.predicate, vars);
                add_pattern_vars(item.pattern.object, vars);
            }
            for (const auto& v : block.projection) {
                if (!vars.contains(v)) fail(block.pos, "projected variable ?" + v + " does not occur in the block");
                if (!projected.insert(v).second) {
                    fail(block.pos, "variable ?" + v + " is projected by more than one block");
                }
            }
            for (const auto& item : block.items) {
                if (!item.filter) continue;
                std::vector<std::pair<std::string, SourcePos>> fvars;
                collect_filter_vars(*item.filter, fvars, item.pos);
                for (const auto& [name, pos] : fvars) {
                    if (!vars.contains(name)) fail(pos, "filter variable ?" + name + " is not bound in its block");
                }
            }
        }

        for (auto& tpl : script.inserts) {
            std::set<std::size_t> blocks;
            auto row_var = [&](const std::string& name) {
                auto b = script.projecting_block(name);
                if (!b) fail(tpl.pos, "variable ?" + name + " is not projected by any block");
                blocks.insert(*b);
            };
            for (const ItemTerm* t : {&tpl.subject, &tpl.predicate}) {
                if (const auto* v = std::get_if<Variable>(t)) row_var(v->name);
            }
            if (const auto* v = std::get_if<Variable>(&tpl.object)) row_var(v->name);
            if (const auto* agg = std::get_if<AggExpr>(&tpl.object)) {
                std::vector<std::string> names;
                collect_agg_vars(*agg, names);
                for (const auto& n : names) {
                    if (!script.projecting_block(n)) {
                        fail(tpl.pos, "COUNT(?" + n + ") refers to a variable no block projects");
                    }
                }
            }
            if (blocks.size() > 1) {
                fail(tpl.pos, "insert template mixes row variables from blocks " +
                                  std::to_string(*blocks.begin() + 1) + " and " +
                                  std::to_string(*std::next(blocks.begin()) + 1));
            }
            if (!blocks.empty()) tpl.row_block = *blocks.begin();
        }
    }

    std::vector<Token> tokens_;
    const rdf::NamespaceTable& ns_;
    std::size_t pos_ = 0;
};

}  // namespace

QueryScript parse_script(std::string_view text, const rdf::NamespaceTable& namespaces) {
    return Parser(detail::tokenize(text), namespaces).parse();
}

}  // namespace mesur::query
