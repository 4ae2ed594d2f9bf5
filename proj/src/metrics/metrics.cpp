#include "mesur/metrics/metrics.hpp"

#include <set>

#include "mesur/error.hpp"
#include "mesur/ontology/vocab.hpp"
#include "mesur/rdf/decimal.hpp"

namespace mesur::metrics {

using inference::YearRange;
using rdf::Term;
using store::TripleStore;

namespace {

Term iri(std::string_view v) { return Term::iri(std::string(v)); }

bool dated(const TripleStore& store, const Term& ctx, const YearRange& range) {
    for (const auto& t : store.objects(ctx, iri(vocab::kHasTime))) {
        auto y = inference::literal_year(t);
        if (y && range.contains(*y)) return true;
    }
    return false;
}

struct Window {
    YearRange range;
    std::set<Term> units;
};

Window window_units(const MetricRequest& req, const TripleStore& store) {
    if (!store.mentions(req.object)) throw NotFoundError("unknown group " + req.object.to_string());
    Window w{req.effective_window(), {}};
    if (w.range.empty()) throw InvalidArgument("empty publication window " + w.range.to_string());
    if (w.range.last >= req.year) {
        throw InvalidArgument("publication window " + w.range.to_string() + " must precede " +
                              std::to_string(req.year));
    }
    const auto groups = inference::part_of_closure(req.object, store, req.part_of);
    for (const auto& ctx : store.subjects(iri(vocab::kRdfType), iri(vocab::kPublishes))) {
        if (!dated(store, ctx, w.range)) continue;
        bool in_group = false;
        for (const auto& g : store.objects(ctx, iri(vocab::kHasGroup))) in_group = in_group || groups.contains(g);
        if (!in_group) continue;
        for (const auto& u : store.objects(ctx, iri(vocab::kHasUnit))) w.units.insert(u);
    }
    return w;
}

MetricResult finish(const MetricRequest& req, const Window& w, std::uint64_t numerator,
                    inference::InferenceEngine& engine) {
    MetricResult r;
    r.kind = req.kind;
    r.object = req.object;
    r.year = req.year;
    r.window = w.range;
    r.numerator = numerator;
    r.denominator = w.units.size();
    if (r.denominator == 0) {
        throw MetricError(std::string(metric_kind_name(req.kind)) + " of " + req.object.to_string() + " for " +
                          std::to_string(req.year) + " is undefined: no units published in " +
                          w.range.to_string());
    }
    r.value = rdf::format_quotient(static_cast<std::int64_t>(numerator), static_cast<std::int64_t>(r.denominator),
                                  req.precision);

    const std::string ledger(req.kind == MetricKind::ImpactFactor ? inference::kImpactFactorLedger
                                                                    : inference::kUsageImpactFactorLedger);
    const std::string key = req.object.to_string() + "|" + std::to_string(req.year) + "|" + w.range.to_string() +
                            (req.part_of == inference::PartOfMode::OneHop ? "|one-hop" : "");
    const std::string cls(req.kind == MetricKind::ImpactFactor ? vocab::kImpactFactor : vocab::kUsageImpactFactor);
    r.node = engine.upsert_context(ledger, key,
                                   {
                                       {iri(vocab::kRdfType), iri(cls)},
                                       {iri(vocab::kHasObject), req.object},
                                       {iri(vocab::kHasStartTime), Term::year_literal(req.year)},
                                       {iri(vocab::kHasEndTime), Term::year_literal(req.year)},
                                       {iri(vocab::kHasNumericValue), Term::literal(r.value, rdf::Datatype::Decimal)},
                                   });
    return r;
}

}  // namespace

std::string_view metric_kind_name(MetricKind kind) {
    return kind == MetricKind::ImpactFactor ? "ImpactFactor" : "UsageImpactFactor";
}

YearRange MetricRequest::effective_window() const {
    return window ? *window : YearRange{year - 2, year - 1};
}

MetricResult impact_factor(const MetricRequest& request, inference::InferenceEngine& engine) {
    MetricRequest req = request;
    req.kind = MetricKind::ImpactFactor;
    const TripleStore& store = engine.store();
    const Window w = window_units(req, store);
    const YearRange target{req.year, req.year};

    // units with a Publishes dated in the target year
    std::set<Term> citing;
    for (const auto& ctx : store.subjects(iri(vocab::kRdfType), iri(vocab::kPublishes))) {
        if (!dated(store, ctx, target)) continue;
        for (const auto& u : store.objects(ctx, iri(vocab::kHasUnit))) citing.insert(u);
    }
    std::set<std::pair<Term, Term>> citations;
    for (const auto& c : store.subjects(iri(vocab::kRdfType), iri(vocab::kCitation))) {
        for (const auto& sink : store.objects(c, iri(vocab::kHasSink))) {
            if (!w.units.contains(sink)) continue;
            for (const auto& source : store.objects(c, iri(vocab::kHasSource))) {
                if (citing.contains(source)) citations.emplace(source, sink);
            }
        }
    }
    return finish(req, w, citations.size(), engine);
}

MetricResult usage_impact_factor(const MetricRequest& request, inference::InferenceEngine& engine) {
    MetricRequest req = request;
    req.kind = MetricKind::UsageImpactFactor;
    const TripleStore& store = engine.store();
    const Window w = window_units(req, store);
    const YearRange target{req.year, req.year};

    std::uint64_t events = 0;
    for (const auto& ctx : store.subjects(iri(vocab::kRdfType), iri(vocab::kUses))) {
        if (!dated(store, ctx, target)) continue;
        bool hit = false;
        for (const auto& d : store.objects(ctx, iri(vocab::kHasDocument))) hit = hit || w.units.contains(d);
        if (hit) ++events;
    }
    return finish(req, w, events, engine);
}

MetricResult compute_metric(const MetricRequest& request, inference::InferenceEngine& engine) {
    return request.kind == MetricKind::ImpactFactor ? impact_factor(request, engine)
                                                    : usage_impact_factor(request, engine);
}

}  // namespace mesur::metrics
