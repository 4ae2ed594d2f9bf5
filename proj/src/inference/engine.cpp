#include "mesur/inference/engine.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "mesur/error.hpp"
#include "mesur/inference/keys.hpp"
#include "mesur/inference/rules.hpp"
#include "mesur/ontology/schema.hpp"
#include "mesur/ontology/vocab.hpp"
#include "mesur/query/evaluator.hpp"
#include "mesur/query/parser.hpp"
#include "mesur/rdf/datetime.hpp"
#include "mesur/rdf/decimal.hpp"

namespace mesur::inference {

using rdf::Term;
using rdf::Triple;
using store::TripleStore;

namespace {

Term iri(std::string_view v) { return Term::iri(std::string(v)); }

int parse_year(std::string_view s) {
    int y = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), y);
    if (ec != std::errc() || p != s.data() + s.size() || s.size() != 4) {
        throw InvalidArgument("invalid year '" + std::string(s) + "'");
    }
    return y;
}

bool has_type(const TripleStore& store, const Term& node, std::string_view cls) {
    return store.contains(Triple{node, iri(vocab::kRdfType), iri(cls)});
}

bool is_unit(const TripleStore& store, const Term& node) {
    const auto& schema = ontology::Schema::mesur();
    for (const auto& t : store.objects(node, iri(vocab::kRdfType))) {
        if (t.is_iri() && schema.has_class(t.value()) && schema.is_subclass(t.value(), vocab::kUnit)) return true;
    }
    return false;
}

/// Units with a Publishes context in one of `groups` dated within `window`.
std::set<Term> units_published_in(const TripleStore& store, const std::set<Term>& groups, YearRange window) {
    std::set<Term> units;
    for (const auto& ctx : store.subjects(iri(vocab::kRdfType), iri(vocab::kPublishes))) {
        bool dated = false;
        for (const auto& t : store.objects(ctx, iri(vocab::kHasTime))) {
            auto y = literal_year(t);
            if (y && window.contains(*y)) dated = true;
        }
        if (!dated) continue;
        bool grouped = false;
        for (const auto& g : store.objects(ctx, iri(vocab::kHasGroup))) grouped = grouped || groups.contains(g);
        if (!grouped) continue;
        for (const auto& u : store.objects(ctx, iri(vocab::kHasUnit))) units.insert(u);
    }
    return units;
}

Term weight_literal(std::uint64_t weight) {
    return Term::literal(rdf::format_quotient(static_cast<std::int64_t>(weight), 1), rdf::Datatype::Decimal);
}

}  // namespace

std::string YearRange::to_string() const {
    if (first == last) return std::to_string(first);
    return std::to_string(first) + "-" + std::to_string(last);
}

YearRange parse_year_range(std::string_view text) {
    auto dash = text.find('-', 1);
    if (dash == std::string_view::npos) {
        int y = parse_year(text);
        return {y, y};
    }
    YearRange r{parse_year(text.substr(0, dash)), parse_year(text.substr(dash + 1))};
    if (r.empty()) throw InvalidArgument("empty year range '" + std::string(text) + "'");
    return r;
}

std::optional<int> literal_year(const Term& t) {
    if (!t.is_literal()) return std::nullopt;
    if (t.datatype() == rdf::Datatype::DateTime) {
        auto dt = rdf::parse_datetime(t.value());
        if (dt) return dt->year;
    } else if (t.datatype() == rdf::Datatype::Integer) {
        int y = 0;
        const auto& s = t.value();
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), y);
        if (ec == std::errc() && p == s.data() + s.size()) return y;
    }
    return std::nullopt;
}

std::set<Term> part_of_closure(const Term& root, const TripleStore& store, PartOfMode mode) {
    const Term part_of = iri(vocab::kPartOf);
    std::set<Term> out;
    if (mode == PartOfMode::OneHop) {
        for (auto& s : store.subjects(part_of, root)) out.insert(std::move(s));
        return out;
    }
    std::vector<Term> frontier = {root};
    out.insert(root);
    while (!frontier.empty()) {
        Term node = std::move(frontier.back());
        frontier.pop_back();
        for (auto& s : store.subjects(part_of, node)) {
            if (out.insert(s).second) frontier.push_back(std::move(s));
        }
    }
    return out;
}

InferenceEngine::InferenceEngine(TripleStore& store, MaterializationLedger ledger)
    : store_(&store), ledger_(std::move(ledger)) {}

std::size_t InferenceEngine::insert_recorded(const std::string& rule, const Triple& t) {
    if (!store_->insert(t)) return 0;
    ledger_.record(rule, t);
    return 1;
}

std::size_t InferenceEngine::run_rule(std::string_view name) {
    const RuleInfo& rule = find_rule(name);
    if (rule.name == kCoauthorLedger) return derive_all_coauthors();
    const auto script = query::parse_script(rule.script);
    const auto report = query::execute_script(script, *store_);
    for (const auto& t : report.new_triples) ledger_.record(rule.name, t);
    return report.inserted();
}

std::vector<std::pair<std::string, std::size_t>> InferenceEngine::run_all() {
    std::vector<std::pair<std::string, std::size_t>> out;
    for (const auto& rule : rule_registry()) out.emplace_back(rule.name, run_rule(rule.name));
    return out;
}

std::size_t InferenceEngine::retract_rule(std::string_view name) {
    const std::string key(name);
    const bool known = name == kGroupCitationLedger || name == kImpactFactorLedger ||
                       name == kUsageImpactFactorLedger || !ledger_.entries(key).empty();
    if (!known) find_rule(name);  // throws for unknown names
    std::size_t removed = 0;
    for (const auto& t : ledger_.entries(key)) removed += store_->remove(t) ? 1 : 0;
    ledger_.clear(key);
    return removed;
}

std::size_t InferenceEngine::retract_all() {
    std::size_t removed = 0;
    for (const auto& name : ledger_.rules()) removed += retract_rule(name);
    return removed;
}

Term InferenceEngine::upsert_context(const std::string& rule, const std::string& key,
                                     const std::vector<std::pair<Term, Term>>& edges) {
    const Term node = keyed_blank(rule + "|" + key);
    std::set<Triple> wanted;
    for (const auto& [p, o] : edges) wanted.insert(rdf::make_triple(node, p, o));

    std::vector<Triple> stale;
    const auto& recorded = ledger_.entries(rule);
    for (auto it = recorded.lower_bound(Triple{node, Term(), Term()}); it != recorded.end() && it->subject == node;
         ++it) {
        if (!wanted.contains(*it)) stale.push_back(*it);
    }
    for (const auto& t : stale) {
        store_->remove(t);
        ledger_.forget(rule, t);
    }
    for (const auto& t : wanted) insert_recorded(rule, t);
    return node;
}

GroupCitationResult InferenceEngine::derive_group_citation(const Term& source_root, const Term& sink_root,
                                                           YearRange source_window, YearRange sink_window,
                                                           PartOfMode mode) {
    for (const Term* root : {&source_root, &sink_root}) {
        if (!store_->mentions(*root)) throw NotFoundError("unknown group " + root->to_string());
    }
    if (source_window.empty() || sink_window.empty()) throw InvalidArgument("empty year window");

    const auto sources =
        units_published_in(*store_, part_of_closure(source_root, *store_, mode), source_window);
    const auto sinks = units_published_in(*store_, part_of_closure(sink_root, *store_, mode), sink_window);

    std::set<std::pair<Term, Term>> pairs;
    for (const auto& c : store_->subjects(iri(vocab::kRdfType), iri(vocab::kCitation))) {
        for (const auto& a : store_->objects(c, iri(vocab::kHasSource))) {
            if (!sources.contains(a) || !is_unit(*store_, a)) continue;
            for (const auto& b : store_->objects(c, iri(vocab::kHasSink))) {
                if (sinks.contains(b) && is_unit(*store_, b)) pairs.emplace(a, b);
            }
        }
    }

    GroupCitationResult result;
    result.weight = pairs.size();
    const std::string key = source_root.to_string() + "|" + sink_root.to_string() + "|" + source_window.to_string() +
                            "|" + sink_window.to_string() + (mode == PartOfMode::OneHop ? "|one-hop" : "");
    result.node = upsert_context(std::string(kGroupCitationLedger), key,
                                 {
                                     {iri(vocab::kRdfType), iri(vocab::kCitation)},
                                     {iri(vocab::kHasSource), source_root},
                                     {iri(vocab::kHasSink), sink_root},
                                     {iri(vocab::kHasWeight), weight_literal(result.weight)},
                                     {iri(vocab::kHasSourceStartTime), Term::year_literal(source_window.first)},
                                     {iri(vocab::kHasSourceEndTime), Term::year_literal(source_window.last)},
                                     {iri(vocab::kHasSinkStartTime), Term::year_literal(sink_window.first)},
                                     {iri(vocab::kHasSinkEndTime), Term::year_literal(sink_window.last)},
                                 });
    return result;
}

std::string InferenceEngine::coauthor_key(const Term& source, const Term& sink,
                                          const std::optional<YearRange>& window) {
    return source.to_string() + "|" + sink.to_string() + "|" + (window ? window->to_string() : "*");
}

std::vector<std::pair<Term, Term>> InferenceEngine::coauthor_edges(const Term& source, const Term& sink,
                                                                   std::uint64_t weight,
                                                                   const std::optional<YearRange>& window) const {
    std::vector<std::pair<Term, Term>> edges = {
        {iri(vocab::kRdfType), iri(vocab::kCoauthor)},
        {iri(vocab::kHasSource), source},
        {iri(vocab::kHasSink), sink},
        {iri(vocab::kHasWeight), weight_literal(weight)},
    };
    if (window) {
        for (auto p : {vocab::kHasSourceStartTime, vocab::kHasSinkStartTime}) {
            edges.emplace_back(iri(p), Term::year_literal(window->first));
        }
        for (auto p : {vocab::kHasSourceEndTime, vocab::kHasSinkEndTime}) {
            edges.emplace_back(iri(p), Term::year_literal(window->last));
        }
    }
    return edges;
}

namespace {

bool dated_within(const TripleStore& store, const Term& ctx, const std::optional<YearRange>& window) {
    if (!window) return true;
    for (const auto& t : store.objects(ctx, iri(vocab::kHasTime))) {
        auto y = literal_year(t);
        if (y && window->contains(*y)) return true;
    }
    return false;
}

}  // namespace

CoauthorResult InferenceEngine::derive_coauthor(const Term& a, const Term& b, std::optional<YearRange> window) {
    if (a == b) throw InvalidArgument("coauthorship of " + a.to_string() + " with itself is undefined");
    if (window && window->empty()) throw InvalidArgument("empty year window");
    CoauthorResult result;
    const Term has_author = iri(vocab::kHasAuthor);
    for (const auto& ctx : store_->subjects(has_author, a)) {
        if (!has_type(*store_, ctx, vocab::kPublishes)) continue;
        if (!store_->contains(Triple{ctx, has_author, b})) continue;
        if (dated_within(*store_, ctx, window)) ++result.weight;
    }
    const std::string rule(kCoauthorLedger);
    result.forward = upsert_context(rule, coauthor_key(a, b, window), coauthor_edges(a, b, result.weight, window));
    result.backward = upsert_context(rule, coauthor_key(b, a, window), coauthor_edges(b, a, result.weight, window));
    return result;
}

std::size_t InferenceEngine::derive_all_coauthors(std::optional<YearRange> window) {
    if (window && window->empty()) throw InvalidArgument("empty year window");
    std::map<std::pair<Term, Term>, std::uint64_t> weights;
    const Term has_author = iri(vocab::kHasAuthor);
    for (const auto& ctx : store_->subjects(iri(vocab::kRdfType), iri(vocab::kPublishes))) {
        if (!dated_within(*store_, ctx, window)) continue;
        auto authors = store_->objects(ctx, has_author);
        std::sort(authors.begin(), authors.end());
        for (std::size_t i = 0; i < authors.size(); ++i) {
            for (std::size_t j = i + 1; j < authors.size(); ++j) ++weights[{authors[i], authors[j]}];
        }
    }

    const std::string rule(kCoauthorLedger);
    std::set<Triple> wanted;
    for (const auto& [pair, weight] : weights) {
        const auto& [a, b] = pair;
        for (const auto& [src, dst] : {std::pair{a, b}, std::pair{b, a}}) {
            const Term node = keyed_blank(rule + "|" + coauthor_key(src, dst, window));
            for (const auto& [p, o] : coauthor_edges(src, dst, weight, window)) {
                wanted.insert(rdf::make_triple(node, p, o));
            }
        }
    }
    std::vector<Triple> stale;
    for (const auto& t : ledger_.entries(rule)) {
        if (!wanted.contains(t)) stale.push_back(t);
    }
    for (const auto& t : stale) {
        store_->remove(t);
        ledger_.forget(rule, t);
    }
    std::size_t added = 0;
    for (const auto& t : wanted) added += insert_recorded(rule, t);
    return added;
}

}  // namespace mesur::inference
