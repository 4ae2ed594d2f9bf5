// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <sys/resource.h>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "mesur/error.hpp"
#include "mesur/inference/engine.hpp"
#include "mesur/inference/rules.hpp"
#include "mesur/metrics/metrics.hpp"
#include "mesur/ontology/vocab.hpp"
#include "mesur/query/evaluator.hpp"
#include "mesur/query/parser.hpp"
#include "mesur/rdf/ntriples.hpp"
#include "mesur/sidecar/mapping.hpp"
#include "mesur/sidecar/sidecar.hpp"
#include "oracle.hpp"

using namespace mesur;
using rdf::Term;
using rdf::Triple;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Check {
    bool ok = true;
    std::string why;
    void fail(const std::string& msg) {
        if (ok) why = msg;
        ok = false;
    }
};

query::QueryScript parse(std::string_view text) {
    return query::parse_script(text, inference::listings::namespaces());
}

std::string snapshot(const store::TripleStore& s) {
    std::ostringstream out;
    s.save(out);
    return out.str();
}

Check listings_conform() {
    Check c;
    const auto t0 = Clock::now();
    const auto triples = testkit::listing_fixture();
    for (const auto& listing : inference::listings::all()) {
        const std::string name(listing.name);
        auto store = testkit::make_store(triples);
        const auto script = parse(listing.text);
        query::ExecuteOptions opts;
        opts.placeholder_factory = [](const std::string& label) { return Term::blank("ph" + label); };
        const auto report = query::execute_script(script, store, opts);
        const auto oracle = testkit::naive_execute(script, triples, opts.placeholder_factory);
        for (std::size_t b = 0; b < report.blocks.size(); ++b) {
            const auto& got = report.blocks[b];
            if (got.solutions != oracle.solutions[b].size()) c.fail(name + ": solution count differs");
            if (got.rows.size() != oracle.rows[b].size()) c.fail(name + ": row count differs");
            if (oracle.solutions[b].empty()) c.fail(name + ": fixture leaves a block empty");
        }
        const std::set<Triple> produced(report.produced.begin(), report.produced.end());
        if (produced != oracle.produced) c.fail(name + ": inserted triples differ");
        const std::set<Triple> existing(triples.begin(), triples.end());
        std::size_t fresh = 0;
        for (const auto& t : oracle.produced) fresh += !existing.contains(t);
        if (report.inserted() != fresh) c.fail(name + ": insert count differs");
    }
    const double s = seconds_since(t0);
    if (s >= 5.0) c.fail("took " + std::to_string(s) + " s");
    c.why += (c.why.empty() ? "" : "; ") + std::to_string(inference::listings::all().size()) + " listings in " +
             std::to_string(s) + " s";
    return c;
}

Check rules_match_oracle() {
    Check c;
    const auto t0 = Clock::now();
    std::size_t compared = 0;
    for (std::uint64_t i = 0; i < 50; ++i) {
        const std::size_t contexts = 100 + i * 100;  // up to 5000
        const auto base = testkit::random_context_store(500 + i, contexts);
        auto store = testkit::make_store(base);
        inference::InferenceEngine engine(store);
        engine.run_all();
        for (const auto& rule : inference::rule_registry()) {
            auto got = engine.ledger().entries(rule.name);
            if (rule.name == inference::kCoauthorLedger) got = testkit::canonical_coauthor(got);
            if (got != testkit::rule_oracle(rule.name, base)) {
                c.fail(rule.name + " differs on store " + std::to_string(i));
            }
            compared += got.size();
        }
    }
    const double s = seconds_since(t0);
    if (s >= 120.0) c.fail("took " + std::to_string(s) + " s");
    c.why += (c.why.empty() ? "" : "; ") + std::to_string(compared) + " triples compared in " + std::to_string(s) +
             " s";
    return c;
}

Check retraction_is_lossless() {
    Check c;
    std::vector<Triple> base = testkit::random_context_store(77, 3000);
    const auto impact = testkit::impact_fixture();
    base.insert(base.end(), impact.begin(), impact.end());
    auto store = testkit::make_store(base);
    const std::string before = snapshot(store);
    inference::InferenceEngine engine(store);
    engine.run_all();
    engine.derive_group_citation(Term::iri("urn:test:journal:0"), Term::iri("urn:test:journal:1"), {2006, 2008},
                                 {2003, 2005});
    metrics::MetricRequest req;
    req.object = Term::iri(std::string(testkit::kImpactJournal));
    req.year = 2007;
    metrics::compute_metric(req, engine);
    req.kind = metrics::MetricKind::UsageImpactFactor;
    metrics::compute_metric(req, engine);
    const std::size_t added = engine.ledger().total();
    if (added == 0) c.fail("nothing was inferred");
    engine.retract_all();
    if (snapshot(store) != before) c.fail("snapshot differs after retraction");
    c.why += (c.why.empty() ? "" : "; ") + std::to_string(added) + " inferred triples retracted, " +
             std::to_string(before.size()) + " snapshot bytes compared";
    return c;
}

Check impact_factors() {
    Check c;
    const auto base = testkit::impact_fixture();
    auto listing_counts = [&](std::string_view text) {
        auto store = testkit::make_store(base);
        const auto report = query::execute_script(parse(text), store);
        Term value = Term::string_literal("none");
        for (const auto& t : report.produced) {
            if (t.predicate.value() == vocab::kHasNumericValue) value = t.object;
        }
        return std::tuple{report.blocks[0].solutions, report.blocks[1].solutions, value};
    };
    std::string summary;
    for (auto kind : {metrics::MetricKind::ImpactFactor, metrics::MetricKind::UsageImpactFactor}) {
        auto store = testkit::make_store(base);
        inference::InferenceEngine engine(store);
        metrics::MetricRequest req;
        req.kind = kind;
        req.object = Term::iri(std::string(testkit::kImpactJournal));
        req.year = 2007;
        const auto r = metrics::compute_metric(req, engine);
        const bool is_if = kind == metrics::MetricKind::ImpactFactor;
        const auto [num, den, value] =
            listing_counts(is_if ? inference::listings::kImpactFactor : inference::listings::kUsageImpactFactor);
        const std::string name(metrics::metric_kind_name(kind));
        const std::string expected = is_if ? "2.500000" : "4.000000";
        if (r.value != expected) c.fail(name + " = " + r.value);
        if (r.numerator != num || r.denominator != den) c.fail(name + " counts differ from the script");
        if (value != Term::literal(r.value, rdf::Datatype::Decimal)) c.fail(name + " value differs from the script");
        summary += (summary.empty() ? "" : ", ") + name + " " + std::to_string(r.numerator) + "/" +
                   std::to_string(r.denominator) + " = " + r.value;
    }
    c.why += (c.why.empty() ? "" : "; ") + summary;
    return c;
}

Check hybrid_split() {
    Check c;
    const auto corpus = testkit::sidecar_corpus(2024, 1000);
    sidecar::Sidecar sc;
    std::istringstream b(corpus.biblio), u(corpus.usage), ct(corpus.citations);
    const auto rb = sc.ingest_biblio(b);
    const auto ru = sc.ingest_usage(u);
    const auto rc = sc.ingest_citations(ct);
    if (rb.rejected + ru.rejected + rc.rejected) c.fail("records were rejected");
    store::TripleStore store;
    sidecar::map_to_graph(sc, store);
    std::set<std::string> forbidden(corpus.titles.begin(), corpus.titles.end());
    forbidden.insert(corpus.author_names.begin(), corpus.author_names.end());
    forbidden.insert(corpus.pages.begin(), corpus.pages.end());
    std::size_t literals = 0;
    for (const auto& t : store.triples()) {
        if (!t.object.is_literal()) continue;
        ++literals;
        if (forbidden.contains(t.object.value())) c.fail("literal " + t.object.to_string() + " in the store");
    }
    std::set<std::string> iris;
    for (const auto& rec : sc.biblio()) {
        const auto r = sc.resolve(rec.doc_id);
        if (!iris.insert(r.iri.value()).second) c.fail("two documents share " + r.iri.value());
        const auto back = sc.resolve(r.iri.value());
        if (std::get<sidecar::BiblioRecord>(back.record).doc_id != rec.doc_id) c.fail("no round trip for " + rec.doc_id);
        if (!store.mentions(r.iri)) c.fail("unit " + r.iri.value() + " not in the store");
    }
    c.why += (c.why.empty() ? "" : "; ") + std::to_string(sc.biblio().size()) + " records resolved, " +
             std::to_string(literals) + " literals scanned";
    return c;
}

Check round_trip() {
    Check c;
    const auto triples = testkit::random_triples(6, 100'000);
    const auto original = testkit::make_store(triples);
    // fresh import of the export, with every blank node renamed
    auto parsed = rdf::parse_ntriples(rdf::serialize_ntriples(original.triples()));
    std::map<std::string, Term> renamed;
    auto rename = [&](Term& t) {
        if (!t.is_blank()) return;
        auto [it, fresh] = renamed.try_emplace(t.value(), Term::blank("r" + std::to_string(renamed.size())));
        t = it->second;
    };
    for (auto& t : parsed) {
        rename(t.subject);
        rename(t.object);
    }
    store::TripleStore imported;
    imported.bulk_load(parsed);
    if (imported.size() != original.size()) c.fail("size differs");
    if (!testkit::isomorphic(original.triples(), imported.triples())) c.fail("not isomorphic");
    c.why += (c.why.empty() ? "" : "; ") + std::to_string(imported.size()) + " triples, " +
             std::to_string(renamed.size()) + " blank nodes";
    return c;
}

Check performance() {
    Check c;
    const auto triples = testkit::synthetic_triples(7, 1'000'000);
    const std::string text = rdf::serialize_ntriples(triples);
    const auto t0 = Clock::now();
    store::TripleStore store;
    store.bulk_load(rdf::parse_ntriples(text));
    const double load = seconds_since(t0);
    if (store.size() != 1'000'000) c.fail("loaded " + std::to_string(store.size()) + " triples");
    if (load >= 60.0) c.fail("load took " + std::to_string(load) + " s");

    std::mt19937_64 rng(8);
    std::vector<store::TriplePattern> patterns;
    for (int i = 0; i < 1000; ++i) {
        const Triple& t = triples[rng() % triples.size()];
        store::TriplePattern q{store::Variable{"s"}, store::Variable{"p"}, store::Variable{"o"}};
        switch (i % 4) {
            case 0: q.subject = t.subject; break;
            case 1: q.subject = t.subject; q.predicate = t.predicate; break;
            case 2: q.predicate = t.predicate; q.object = t.object; break;
            default: q.subject = t.subject; q.object = t.object; break;
        }
        patterns.push_back(q);
    }
    std::size_t rows = 0;
    const auto t1 = Clock::now();
    for (const auto& q : patterns) rows += store.match(q).size();
    const double match = seconds_since(t1);
    if (match >= 1.0) c.fail("matches took " + std::to_string(match) + " s");

    rusage usage{};
    getrusage(RUSAGE_SELF, &usage);
    const double peak_mb = static_cast<double>(usage.ru_maxrss) / 1024.0;  // ru_maxrss is in KiB on Linux
    if (peak_mb >= 2048.0) c.fail("peak memory " + std::to_string(peak_mb) + " MB");
    c.why += (c.why.empty() ? "" : "; ") + std::string("load ") + std::to_string(load) + " s, 1000 matches (" +
             std::to_string(rows) + " rows) " + std::to_string(match) + " s, peak " + std::to_string(peak_mb) +
             " MB";
    return c;
}

Check parser_fuzz() {
    Check c;
    std::mt19937_64 rng(31337);
    const auto& listings = inference::listings::all();
    const char* tokens[] = {"(", ")", "<", ">", "?", "?x", "_1", "AND", "OR", "COUNT(", "/", ".", "\"", "SELECT",
                            "WHERE", "INSERT", ":", "^^", "#", "\n", "2007", "1e9", "\\", "mesur:", "<urn:x>"};
    std::size_t parsed = 0, rejected = 0;
    double worst = 0;
    for (int i = 0; i < 10'000; ++i) {
        std::string text;
        if (i % 10 == 0) {
            const std::size_t n = rng() % 200;
            for (std::size_t k = 0; k < n; ++k) text += static_cast<char>(rng() % 256);
        } else {
            text = listings[rng() % listings.size()].text;
            const int edits = 1 + static_cast<int>(rng() % 6);
            for (int k = 0; k < edits && !text.empty(); ++k) {
                const std::size_t at = rng() % text.size();
                switch (rng() % 4) {
                    case 0: text.erase(at, 1 + rng() % 16); break;
                    case 1: text.insert(at, tokens[rng() % std::size(tokens)]); break;
                    case 2: text[at] = static_cast<char>(rng() % 256); break;
                    default: text.insert(at, text.substr(rng() % text.size(), rng() % 40)); break;
                }
            }
        }
        const auto t0 = Clock::now();
        try {
            parse(text);
            ++parsed;
        } catch (const ParseError& e) {
            if (e.line() < 1 || e.column() < 1) c.fail("unpositioned error on input " + std::to_string(i));
            ++rejected;
        } catch (const std::exception& e) {
            c.fail("input " + std::to_string(i) + " raised " + e.what());
        }
        const double s = seconds_since(t0);
        worst = std::max(worst, s);
        if (s >= 0.1) c.fail("input " + std::to_string(i) + " took " + std::to_string(s) + " s");
    }
    c.why += (c.why.empty() ? "" : "; ") + std::to_string(parsed) + " parsed, " + std::to_string(rejected) +
             " rejected, slowest " + std::to_string(worst * 1000) + " ms";
    return c;
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<Check()>> criteria[] = {
        {"listing conformance", listings_conform},    {"inference oracle equivalence", rules_match_oracle},
        {"lossless retraction", retraction_is_lossless}, {"impact factor correctness", impact_factors},
        {"hybrid split invariant", hybrid_split},    {"N-Triples round trip", round_trip},
        {"performance smoke", performance},          {"parser robustness", parser_fuzz},
    };
    int failures = 0, n = 0;
    for (const auto& [name, fn] : criteria) {
        ++n;
        Check c;
        try {
            c = fn();
        } catch (const std::exception& e) {
            c.fail(std::string("exception: ") + e.what());
        }
        failures += !c.ok;
        std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << n << " (" << name << "): " << c.why << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
