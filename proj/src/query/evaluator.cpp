#include "mesur/query/evaluator.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <unordered_map>

#include "mesur/error.hpp"
#include "mesur/ontology/schema.hpp"
#include "mesur/ontology/vocab.hpp"
#include "mesur/query/filter.hpp"

namespace mesur::query {

using rdf::Datatype;
using rdf::Term;
using store::IdPattern;
using store::IdTriple;
using store::TermId;
using store::TripleStore;

namespace {

__extension__ typedef __int128 I128;

/// One pattern slot after compilation: a dictionary id or a variable index.
struct Slot {
    bool is_var = false;
    TermId id = 0;
    std::size_t var = 0;
};

struct CompiledBlock {
    std::vector<std::string> var_names;
    std::vector<std::array<Slot, 3>> patterns;       // parallel to block.items
    std::vector<std::vector<std::size_t>> filter_vars;
    bool unsatisfiable = false;                        // some constant is not in the store
};

CompiledBlock compile(const SelectBlock& block, const TripleStore& store) {
    CompiledBlock c;
    std::unordered_map<std::string, std::size_t> index;
    auto var_index = [&](const std::string& name) {
        auto [it, fresh] = index.emplace(name, c.var_names.size());
        if (fresh) c.var_names.push_back(name);
        return it->second;
    };
    for (const auto& item : block.items) {
        std::array<Slot, 3> slots;
        const PatternTerm* terms[3] = {&item.pattern.subject, &item.pattern.predicate, &item.pattern.object};
        for (int i = 0; i < 3; ++i) {
            if (const auto* v = std::get_if<Variable>(terms[i])) {
                slots[i].is_var = true;
                slots[i].var = var_index(v->name);
            } else {
                auto id = store.lookup(std::get<Term>(*terms[i]));
                if (id) slots[i].id = *id;
                else c.unsatisfiable = true;
            }
        }
        c.patterns.push_back(slots);
    }
    for (const auto& item : block.items) {
        std::vector<std::size_t> vars;
        if (item.filter) {
            std::vector<const FilterExpr*> stack = {&*item.filter};
            while (!stack.empty()) {
                const FilterExpr* f = stack.back();
                stack.pop_back();
                if (f->kind == FilterExpr::Kind::Compare) {
                    for (const Operand* op : {&f->comparison.lhs, &f->comparison.rhs}) {
                        if (const auto* v = std::get_if<Variable>(op)) vars.push_back(var_index(v->name));
                    }
                }
                for (const auto& ch : f->children) stack.push_back(&ch);
            }
        }
        c.filter_vars.push_back(std::move(vars));
    }
    return c;
}

std::vector<std::size_t> plan(const CompiledBlock& c, const TripleStore& store) {
    const std::size_t n = c.patterns.size();
    std::vector<bool> used(n, false);
    std::vector<bool> bound(c.var_names.size(), false);
    std::vector<std::size_t> estimate(n, 0);
    if (!c.unsatisfiable) {
        for (std::size_t i = 0; i < n; ++i) {
            IdPattern q;
            const auto& p = c.patterns[i];
            if (!p[0].is_var) q.s = p[0].id;
            if (!p[1].is_var) q.p = p[1].id;
            if (!p[2].is_var) q.o = p[2].id;
            estimate[i] = store.count(q);
        }
    }
    std::vector<std::size_t> order;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best = n;
        int best_unbound = 4;
        for (std::size_t i = 0; i < n; ++i) {
            if (used[i]) continue;
            int unbound = 0;
            for (const auto& s : c.patterns[i]) {
                if (s.is_var && !bound[s.var]) ++unbound;
            }
            if (best == n || unbound < best_unbound ||
                (unbound == best_unbound && estimate[i] < estimate[best])) {
                best = i;
                best_unbound = unbound;
            }
        }
        used[best] = true;
        order.push_back(best);
        for (const auto& s : c.patterns[best]) {
            if (s.is_var) bound[s.var] = true;
        }
    }
    return order;
}

class Joiner {
public:
    Joiner(const SelectBlock& block, const CompiledBlock& c, const TripleStore& store, std::vector<std::size_t> order)
        : block_(block), c_(c), store_(store), order_(std::move(order)), values_(c.var_names.size(), 0) {
        // attach each filter to the first step after which all its variables are bound
        std::vector<bool> bound(c.var_names.size(), false);
        filters_at_.resize(order_.size());
        std::vector<bool> attached(block.items.size(), false);
        for (std::size_t step = 0; step < order_.size(); ++step) {
            std::vector<std::size_t> fresh;
            for (int k = 0; k < 3; ++k) {
                const Slot& s = c.patterns[order_[step]][k];
                if (s.is_var && !bound[s.var]) {
                    bound[s.var] = true;
                    fresh.push_back(s.var);
                }
            }
            // slots binding a variable for the first time at this step
            binds_.push_back(std::move(fresh));
            for (std::size_t f = 0; f < block.items.size(); ++f) {
                if (attached[f] || !block.items[f].filter) continue;
                const auto& vars = c.filter_vars[f];
                if (std::all_of(vars.begin(), vars.end(), [&](std::size_t v) { return bound[v]; })) {
                    attached[f] = true;
                    filters_at_[step].push_back(f);
                }
            }
        }
        for (const auto& name : block.projection) {
            projected_.push_back(static_cast<std::size_t>(
                std::find(c.var_names.begin(), c.var_names.end(), name) - c.var_names.begin()));
        }
    }

    void run() {
        if (c_.unsatisfiable) return;
        descend(0);
    }

    std::uint64_t solutions = 0;
    std::set<std::vector<TermId>> rows;

private:
    void descend(std::size_t step) {
        if (step == order_.size()) {
            ++solutions;
            std::vector<TermId> row;
            row.reserve(projected_.size());
            for (auto v : projected_) row.push_back(values_[v]);
            rows.insert(std::move(row));
            return;
        }
        const auto& pat = c_.patterns[order_[step]];
        const auto& fresh = binds_[step];
        auto is_fresh = [&](std::size_t var) { return std::find(fresh.begin(), fresh.end(), var) != fresh.end(); };

        IdPattern q;
        std::optional<TermId>* slots[3] = {&q.s, &q.p, &q.o};
        for (int k = 0; k < 3; ++k) {
            if (!pat[k].is_var) *slots[k] = pat[k].id;
            else if (!is_fresh(pat[k].var)) *slots[k] = values_[pat[k].var];
        }
        store_.scan(q, [&](const IdTriple& t) {
            const TermId ids[3] = {t.s, t.p, t.o};
            // assign fresh variables; a variable repeated inside the pattern must agree
            std::vector<std::size_t> assigned;
            bool ok = true;
            for (int k = 0; k < 3 && ok; ++k) {
                if (!pat[k].is_var || !is_fresh(pat[k].var)) continue;
                const std::size_t v = pat[k].var;
                if (std::find(assigned.begin(), assigned.end(), v) != assigned.end()) {
                    ok = values_[v] == ids[k];
                } else {
                    values_[v] = ids[k];
                    assigned.push_back(v);
                }
            }
            if (ok && passes_filters(step)) descend(step + 1);
        });
    }

    bool passes_filters(std::size_t step) {
        for (auto f : filters_at_[step]) {
            VariableLookup lookup = [&](const std::string& name) -> const Term& {
                auto it = std::find(c_.var_names.begin(), c_.var_names.end(), name);
                return store_.term(values_[static_cast<std::size_t>(it - c_.var_names.begin())]);
            };
            if (!evaluate_filter(*block_.items[f].filter, lookup)) return false;
        }
        return true;
    }

    const SelectBlock& block_;
    const CompiledBlock& c_;
    const TripleStore& store_;
    std::vector<std::size_t> order_;
    std::vector<TermId> values_;
    std::vector<std::vector<std::size_t>> binds_;
    std::vector<std::vector<std::size_t>> filters_at_;
    std::vector<std::size_t> projected_;
};

// ---- inserts ---------------------------------------------------------------

/// An exact non-negative rational; counts and their quotients.
struct Rational {
    I128 num = 0;
    I128 den = 1;
};

std::string local_name(const std::string& iri) {
    auto cut = iri.find_last_of("#/");
    return cut == std::string::npos ? iri : iri.substr(cut + 1);
}

std::string describe_agg(const AggExpr& e) {
    if (e.kind == AggExpr::Kind::Count) return "COUNT(?" + e.variable + ")";
    return "(" + describe_agg(e.operands[0]) + " / " + describe_agg(e.operands[1]) + ")";
}

class Instantiator {
public:
    Instantiator(const QueryScript& script, TripleStore& store, const ExecuteOptions& options,
                 const std::vector<BlockResult>& blocks)
        : script_(script), store_(store), options_(options), blocks_(blocks) {}

    std::vector<rdf::Triple> run(std::map<std::string, Term>& placeholders) {
        std::vector<rdf::Triple> out;
        std::set<rdf::Triple> seen;
        for (const auto& tpl : script_.inserts) {
            auto emit = [&](const std::vector<Term>* row, const BlockResult* block) {
                Term s = resolve(tpl, tpl.subject, row, block, placeholders);
                Term p = resolve(tpl, tpl.predicate, row, block, placeholders);
                Term o = object(tpl, p, row, block, placeholders);
                if (s.is_literal()) fail(tpl, "a literal cannot be the subject of a triple: " + s.to_string());
                if (!p.is_iri()) fail(tpl, "the predicate must be an IRI: " + p.to_string());
                rdf::Triple t{std::move(s), std::move(p), std::move(o)};
                if (seen.insert(t).second) out.push_back(std::move(t));
            };
            if (tpl.row_block) {
                const BlockResult& b = blocks_[*tpl.row_block];
                for (const auto& row : b.rows) emit(&row, &b);
            } else {
                emit(nullptr, nullptr);
            }
        }
        return out;
    }

private:
    [[noreturn]] static void fail(const InsertTemplate& tpl, const std::string& message) {
        throw QueryError("INSERT at line " + std::to_string(tpl.pos.line) + ": " + message);
    }

    Term resolve_var(const InsertTemplate& tpl, const std::string& name, const std::vector<Term>* row,
                     const BlockResult* block) const {
        if (row && block) {
            for (std::size_t i = 0; i < block->columns.size(); ++i) {
                if (block->columns[i] == name) return (*row)[i];
            }
        }
        // the parser guarantees row variables come from the driving block
        fail(tpl, "variable ?" + name + " is not bound");
    }

    Term resolve(const InsertTemplate& tpl, const ItemTerm& item, const std::vector<Term>* row,
                 const BlockResult* block, std::map<std::string, Term>& placeholders) {
        if (const auto* t = std::get_if<Term>(&item)) return *t;
        if (const auto* v = std::get_if<Variable>(&item)) return resolve_var(tpl, v->name, row, block);
        return placeholder(std::get<Placeholder>(item).label, placeholders);
    }

    Term placeholder(const std::string& label, std::map<std::string, Term>& placeholders) {
        auto it = placeholders.find(label);
        if (it != placeholders.end()) return it->second;
        Term node = options_.placeholder_factory ? options_.placeholder_factory(label) : store_.mint_blank();
        placeholders.emplace(label, node);
        return node;
    }

    Term object(const InsertTemplate& tpl, const Term& predicate, const std::vector<Term>* row,
                const BlockResult* block, std::map<std::string, Term>& placeholders) {
        const ontology::PropertyDef* prop =
            predicate.is_iri() ? ontology::Schema::mesur().find_property(predicate.value()) : nullptr;
        const Datatype range = prop ? prop->range.datatype : Datatype::None;

        if (const auto* agg = std::get_if<AggExpr>(&tpl.object)) {
            Rational r = evaluate(tpl, *agg);
            const bool integral = r.den == 1;
            if (range == Datatype::Decimal || (range == Datatype::None && !integral)) {
                return Term::literal(format(r), Datatype::Decimal);
            }
            if (range == Datatype::None || range == Datatype::Integer) {
                return Term::literal(to_string(r.num), Datatype::Integer);
            }
            fail(tpl, "aggregate value cannot fill a " + std::string(rdf::datatype_name(range)) + " property");
        }
        if (const auto* t = std::get_if<Term>(&tpl.object)) return coerce(tpl, *t, range);
        if (const auto* v = std::get_if<Variable>(&tpl.object)) return resolve_var(tpl, v->name, row, block);
        return placeholder(std::get<Placeholder>(tpl.object).label, placeholders);
    }

    Term coerce(const InsertTemplate& tpl, const Term& t, Datatype range) const {
        if (!t.is_literal() || t.datatype() != Datatype::Integer) return t;
        try {
            if (range == Datatype::DateTime) return Term::literal(t.value(), Datatype::DateTime);
            if (range == Datatype::Decimal) {
                return Term::literal(rdf::format_quotient(std::stoll(t.value()), 1, options_.precision),
                                     Datatype::Decimal);
            }
        } catch (const std::exception&) {
            fail(tpl, "constant " + t.to_string() + " does not fit the " +
                          std::string(rdf::datatype_name(range)) + " range of its property");
        }
        return t;
    }

    std::string format(const Rational& r) const {
        constexpr I128 kMax = std::numeric_limits<std::int64_t>::max();
        if (r.num > kMax || r.den > kMax) throw QueryError("aggregate value out of range");
        return rdf::format_quotient(static_cast<std::int64_t>(r.num), static_cast<std::int64_t>(r.den),
                                    options_.precision);
    }

    static std::string to_string(I128 v) {
        if (v == 0) return "0";
        std::string s;
        bool neg = v < 0;
        if (neg) v = -v;
        while (v > 0) {
            s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
            v /= 10;
        }
        return neg ? "-" + s : s;
    }

    Rational evaluate(const InsertTemplate& tpl, const AggExpr& e) const {
        if (e.kind == AggExpr::Kind::Count) {
            auto b = script_.projecting_block(e.variable);
            return Rational{static_cast<I128>(blocks_[*b].solutions), 1};
        }
        Rational a = evaluate(tpl, e.operands[0]);
        Rational b = evaluate(tpl, e.operands[1]);
        if (b.num == 0) {
            throw QueryError(metric_name(tpl) + " is undefined: " + describe_agg(e.operands[1]) +
                             " is zero in " + describe_agg(e));
        }
        Rational r{a.num * b.den, a.den * b.num};
        I128 g = std::gcd(r.num, r.den);
        if (g > 1) {
            r.num /= g;
            r.den /= g;
        }
        return r;
    }

    /// Name of the metric a template belongs to: the rdf:type another
    /// template assigns to the same subject.
    std::string metric_name(const InsertTemplate& tpl) const {
        for (const auto& other : script_.inserts) {
            if (other.subject != tpl.subject) continue;
            const auto* p = std::get_if<Term>(&other.predicate);
            const auto* o = std::get_if<Term>(&other.object);
            if (p && o && p->value() == vocab::kRdfType && o->is_iri()) return local_name(o->value());
        }
        return "aggregate";
    }

    const QueryScript& script_;
    TripleStore& store_;
    const ExecuteOptions& options_;
    const std::vector<BlockResult>& blocks_;
};

}  // namespace

std::vector<std::size_t> join_order(const SelectBlock& block, const TripleStore& store) {
    return plan(compile(block, store), store);
}

BlockResult evaluate_block(const SelectBlock& block, const TripleStore& store) {
    const CompiledBlock c = compile(block, store);
    Joiner joiner(block, c, store, plan(c, store));
    joiner.run();
    BlockResult result;
    result.columns = block.projection;
    result.solutions = joiner.solutions;
    result.rows.reserve(joiner.rows.size());
    for (const auto& ids : joiner.rows) {
        std::vector<Term> row;
        row.reserve(ids.size());
        for (auto id : ids) row.push_back(store.term(id));
        result.rows.push_back(std::move(row));
    }
    return result;
}

ExecutionReport execute_script(const QueryScript& script, TripleStore& store, const ExecuteOptions& options) {
    ExecutionReport report;
    for (const auto& block : script.blocks) report.blocks.push_back(evaluate_block(block, store));
    Instantiator inst(script, store, options, report.blocks);
    report.produced = inst.run(report.placeholders);
    for (const auto& t : report.produced) {
        if (store.insert(t)) report.new_triples.push_back(t);
    }
    return report;
}

}  // namespace mesur::query
