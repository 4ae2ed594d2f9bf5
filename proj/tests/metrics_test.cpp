#include <gtest/gtest.h>

#include <sstream>

#include "fixtures.hpp"
#include "mesur/error.hpp"
#include "mesur/inference/rules.hpp"
#include "mesur/metrics/metrics.hpp"
#include "mesur/ontology/vocab.hpp"
#include "mesur/query/evaluator.hpp"
#include "mesur/query/parser.hpp"
#include "oracle.hpp"

using namespace mesur;
using inference::InferenceEngine;
using metrics::MetricKind;
using metrics::MetricRequest;
using rdf::Term;

namespace {

Term iri(std::string_view s) { return Term::iri(std::string(s)); }

MetricRequest request(MetricKind kind, int year = 2007) {
    MetricRequest r;
    r.kind = kind;
    r.object = iri(testkit::kImpactJournal);
    r.year = year;
    return r;
}

std::string snapshot(const store::TripleStore& s) {
    std::ostringstream out;
    s.save(out);
    return out.str();
}

// Value the listing script stores, run on its own copy of the data.
Term listing_value(std::string_view text, const std::vector<rdf::Triple>& base) {
    auto store = testkit::make_store(base);
    const auto script = query::parse_script(text, inference::listings::namespaces());
    const auto report = query::execute_script(script, store);
    for (const auto& t : report.produced) {
        if (t.predicate.value() == vocab::kHasNumericValue) return t.object;
    }
    return Term::string_literal("no value");
}

}  // namespace

TEST(Metrics, ImpactFactorOfFixture) {
    auto store = testkit::make_store(testkit::impact_fixture());
    InferenceEngine engine(store);
    const auto r = metrics::impact_factor(request(MetricKind::ImpactFactor), engine);
    EXPECT_EQ(r.window, (inference::YearRange{2005, 2006}));
    EXPECT_EQ(r.numerator, 25u);
    EXPECT_EQ(r.denominator, 10u);
    EXPECT_EQ(r.value, testkit::naive_quotient(25, 10));
    EXPECT_EQ(r.value, "2.500000");

    EXPECT_EQ(store.objects(r.node, iri(vocab::kRdfType)), std::vector<Term>{iri(vocab::kImpactFactor)});
    EXPECT_EQ(store.objects(r.node, iri(vocab::kHasObject)), std::vector<Term>{iri(testkit::kImpactJournal)});
    EXPECT_EQ(store.objects(r.node, iri(vocab::kHasStartTime)), std::vector<Term>{Term::year_literal(2007)});
    EXPECT_EQ(store.objects(r.node, iri(vocab::kHasEndTime)), std::vector<Term>{Term::year_literal(2007)});
    EXPECT_EQ(store.objects(r.node, iri(vocab::kHasNumericValue)),
              std::vector<Term>{Term::literal("2.500000", rdf::Datatype::Decimal)});
}

TEST(Metrics, UsageImpactFactorOfFixture) {
    auto store = testkit::make_store(testkit::impact_fixture());
    InferenceEngine engine(store);
    const auto r = metrics::usage_impact_factor(request(MetricKind::UsageImpactFactor), engine);
    EXPECT_EQ(r.numerator, 40u);
    EXPECT_EQ(r.denominator, 10u);
    EXPECT_EQ(r.value, "4.000000");
    EXPECT_EQ(store.objects(r.node, iri(vocab::kRdfType)), std::vector<Term>{iri(vocab::kUsageImpactFactor)});
}

TEST(Metrics, AgreeWithListingScripts) {
    const auto base = testkit::impact_fixture();
    auto store = testkit::make_store(base);
    InferenceEngine engine(store);
    const auto f = metrics::compute_metric(request(MetricKind::ImpactFactor), engine);
    const auto u = metrics::compute_metric(request(MetricKind::UsageImpactFactor), engine);
    EXPECT_EQ(listing_value(inference::listings::kImpactFactor, base), Term::literal(f.value, rdf::Datatype::Decimal));
    EXPECT_EQ(listing_value(inference::listings::kUsageImpactFactor, base),
              Term::literal(u.value, rdf::Datatype::Decimal));
}

TEST(Metrics, RecomputingReplacesTheNode) {
    auto store = testkit::make_store(testkit::impact_fixture());
    InferenceEngine engine(store);
    const auto a = metrics::impact_factor(request(MetricKind::ImpactFactor), engine);
    const std::size_t size = store.size();
    const auto b = metrics::impact_factor(request(MetricKind::ImpactFactor), engine);
    EXPECT_EQ(a.node, b.node);
    EXPECT_EQ(store.size(), size);
    auto other = request(MetricKind::ImpactFactor);
    other.precision = 2;
    EXPECT_EQ(metrics::impact_factor(other, engine).value, "2.50");
}

TEST(Metrics, NoCitationsOrUsageGivesZero) {
    auto base = testkit::impact_fixture();
    std::erase_if(base, [](const rdf::Triple& t) {
        return t.object.value() == vocab::kCitation || t.object.value() == vocab::kUses;
    });
    auto store = testkit::make_store(base);
    InferenceEngine engine(store);
    const auto f = metrics::impact_factor(request(MetricKind::ImpactFactor), engine);
    EXPECT_EQ(f.numerator, 0u);
    EXPECT_EQ(f.value, "0.000000");
    EXPECT_EQ(metrics::usage_impact_factor(request(MetricKind::UsageImpactFactor), engine).value, "0.000000");
}

TEST(Metrics, EmptyWindowIsAnErrorAndWritesNothing) {
    auto store = testkit::make_store(testkit::impact_fixture());
    const std::string before = snapshot(store);
    InferenceEngine engine(store);
    // no units of the journal published in 2009-2010
    EXPECT_THROW(metrics::impact_factor(request(MetricKind::ImpactFactor, 2011), engine), MetricError);
    EXPECT_THROW(metrics::usage_impact_factor(request(MetricKind::UsageImpactFactor, 2011), engine), MetricError);
    EXPECT_EQ(snapshot(store), before);
    EXPECT_EQ(engine.ledger().total(), 0u);
}

TEST(Metrics, RequestValidation) {
    auto store = testkit::make_store(testkit::impact_fixture());
    InferenceEngine engine(store);
    auto r = request(MetricKind::ImpactFactor);
    r.window = inference::YearRange{2006, 2005};
    EXPECT_THROW(metrics::impact_factor(r, engine), InvalidArgument);
    r.window = inference::YearRange{2006, 2007};
    EXPECT_THROW(metrics::impact_factor(r, engine), InvalidArgument);
    r.window.reset();
    r.object = iri("urn:issn:9999-9999");
    EXPECT_THROW(metrics::impact_factor(r, engine), NotFoundError);
}

TEST(Metrics, OlderUnitsAreOutsideTheDefaultWindow) {
    // units from 2004 (year - 3) are cited too, but the default window stops at year - 2
    auto store = testkit::make_store(testkit::impact_fixture());
    InferenceEngine engine(store);
    auto wide = request(MetricKind::ImpactFactor);
    wide.window = inference::YearRange{2004, 2006};
    const auto narrow = metrics::impact_factor(request(MetricKind::ImpactFactor), engine);
    const auto w = metrics::impact_factor(wide, engine);
    EXPECT_EQ(w.denominator, 13u);
    EXPECT_EQ(w.numerator, narrow.numerator + 3);
    EXPECT_NE(w.node, narrow.node);
}

TEST(Metrics, KindNames) {
    EXPECT_EQ(metrics::metric_kind_name(MetricKind::ImpactFactor), "ImpactFactor");
    EXPECT_EQ(metrics::metric_kind_name(MetricKind::UsageImpactFactor), "UsageImpactFactor");
}
