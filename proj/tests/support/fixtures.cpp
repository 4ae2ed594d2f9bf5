#include "fixtures.hpp"

#include <random>
#include <set>

#include "mesur/ontology/vocab.hpp"

namespace mesur::testkit {

using rdf::Datatype;
using rdf::Term;
using rdf::Triple;

namespace {

Term iri(std::string_view s) { return Term::iri(std::string(s)); }
Term dt(const std::string& s) { return Term::literal(s, Datatype::DateTime); }

class Builder {
public:
    void add(const Term& s, std::string_view p, const Term& o) { out_.push_back(Triple{s, iri(p), o}); }
    void type(const Term& s, std::string_view cls) { add(s, vocab::kRdfType, iri(cls)); }
    std::vector<Triple> take() { return std::move(out_); }

    Term publishes(const std::string& id, const Term& unit, std::string_view unit_class, const std::string& time,
                   const std::optional<Term>& group, const std::vector<Term>& authors,
                   const std::optional<Term>& publisher = std::nullopt) {
        Term x = Term::iri("urn:test:publishes:" + id);
        type(x, vocab::kPublishes);
        type(unit, unit_class);
        add(x, vocab::kHasUnit, unit);
        add(x, vocab::kHasProvider, iri("urn:test:provider"));
        add(x, vocab::kHasTime, dt(time));
        if (group) add(x, vocab::kHasGroup, *group);
        if (publisher) add(x, vocab::kHasPublisher, *publisher);
        for (const auto& a : authors) add(x, vocab::kHasAuthor, a);
        return x;
    }
    void citation(const std::string& id, const Term& source, const Term& sink) {
        Term x = Term::iri("urn:test:citation:" + id);
        type(x, vocab::kCitation);
        add(x, vocab::kHasSource, source);
        add(x, vocab::kHasSink, sink);
    }
    void uses(const std::string& id, const Term& doc, const Term& user, const std::string& time) {
        Term x = Term::iri("urn:test:uses:" + id);
        type(x, vocab::kUses);
        add(x, vocab::kHasDocument, doc);
        add(x, vocab::kHasUser, user);
        add(x, vocab::kHasProvider, iri("urn:test:provider"));
        add(x, vocab::kHasTime, dt(time));
    }
    void affiliation(const std::string& id, const Term& org, const Term& person) {
        Term x = Term::iri("urn:test:affiliation:" + id);
        type(x, vocab::kAffiliation);
        add(x, vocab::kHasAffiliator, org);
        add(x, vocab::kHasAffiliatee, person);
    }
    Term edition(std::string_view root, const std::string& suffix, std::string_view cls = vocab::kJournal) {
        Term e = Term::iri(std::string(root) + "/" + suffix);
        type(e, cls);
        add(e, vocab::kPartOf, iri(root));
        return e;
    }

private:
    std::vector<Triple> out_;
};

// a date in `year` at one of several precisions
std::string date_in(int year, int variant) {
    const std::string y = std::to_string(year);
    switch (variant % 4) {
        case 0: return y;
        case 1: return y + "-0" + std::to_string(1 + variant % 9);
        case 2: return y + "-05-1" + std::to_string(variant % 10);
        default: return y + "-11-02T1" + std::to_string(variant % 10) + ":30:00";
    }
}

}  // namespace

store::TripleStore make_store(const std::vector<Triple>& triples) {
    store::TripleStore s;
    s.bulk_load(triples);
    return s;
}

std::vector<Triple> listing_fixture() {
    Builder b;
    const Term marko = iri("http://www.lanl.gov/people#marko");
    const Term herbert = iri("http://www.lanl.gov/people#herbertv");
    const Term johan = iri("http://www.lanl.gov/people#jbollen");
    const Term other = iri("http://homepages.vub.ac.be/#someone");
    const std::vector<Term> people = {marko, herbert, johan, other};
    for (const auto& p : people) b.type(p, vocab::kHuman);
    const Term elsevier = iri("urn:test:org:elsevier");
    const Term springer = iri("urn:test:org:springer");
    const Term lanl = iri("urn:test:org:lanl");
    for (const auto& o : {elsevier, springer, lanl, iri("urn:test:provider")}) b.type(o, vocab::kOrganization);

    const std::string_view roots[] = {kSourceJournal, kSinkJournal, kImpactJournal};
    for (auto r : roots) b.type(iri(r), vocab::kJournal);

    // 24 articles: journal i % 3, year 2005..2007
    std::vector<Term> units;
    std::vector<int> journal_of, year_of;
    for (int i = 0; i < 24; ++i) {
        const int j = i % 3;
        const int year = 2005 + (i / 3) % 3;
        const Term unit = Term::iri("urn:test:unit:" + std::to_string(i));
        const Term group = b.edition(roots[j], std::to_string(year));
        std::vector<Term> authors;
        if (i % 4 == 0) authors = {marko, herbert};
        else if (i % 4 == 1) authors = {marko, johan};
        else if (i % 4 == 2) authors = {herbert, johan, other};
        b.publishes(std::to_string(i), unit, vocab::kArticle, date_in(year, i), group, authors,
                    i % 2 ? elsevier : springer);
        units.push_back(unit);
        journal_of.push_back(j);
        year_of.push_back(year);
    }
    // a book: no group, used but never an Article
    const Term book = iri("urn:test:unit:book");
    b.publishes("book", book, vocab::kBook, "2006", std::nullopt, {johan});

    // citations between the two named journals, in both directions and with
    // every mix of years: (0,7) and (3,19) go 2005/2006 -> 2007, (6,1) and
    // (15,4) go 2007 -> 2005/2006, the rest match neither reading
    const std::pair<int, int> named[] = {{0, 7}, {3, 19}, {6, 1}, {15, 4}, {9, 10}, {21, 22}, {7, 0}, {1, 6}, {4, 15}};
    int c = 0;
    for (auto [s, t] : named) b.citation(std::to_string(c++), units[s], units[t]);
    // and into the impact journal from 2007 units
    for (int s = 0; s < 24; ++s) {
        for (int t = 0; t < 24; ++t) {
            const bool impact = year_of[s] == 2007 && journal_of[t] == 2 && year_of[t] < 2007;
            if (c < 16 && s != t && impact && (s + t) % 3 == 0) b.citation(std::to_string(c++), units[s], units[t]);
        }
    }
    b.citation("self", units[2], units[2]);

    const Term users[] = {iri("urn:test:user:1"), iri("urn:test:user:2"), iri("urn:test:user:3")};
    for (const auto& u : users) b.type(u, vocab::kHuman);
    for (int k = 0; k < 10; ++k) {
        const Term& doc = k == 9 ? book : units[(k * 5) % 24];
        b.uses(std::to_string(k), doc, users[k % 3], date_in(k < 7 ? 2007 : 2006, k));
    }
    b.affiliation("1", lanl, marko);
    b.affiliation("2", lanl, herbert);
    b.affiliation("3", lanl, johan);
    return b.take();
}

std::vector<Triple> impact_fixture() {
    Builder b;
    const Term other_journal = iri("urn:issn:0000-0001");
    b.type(iri(kImpactJournal), vocab::kJournal);
    b.type(other_journal, vocab::kJournal);
    const Term author = iri("urn:test:person:a");
    b.type(author, vocab::kHuman);

    std::vector<Term> window, outside, citers, stale_citers, foreign;
    for (int i = 0; i < 10; ++i) {
        const int year = i < 5 ? 2005 : 2006;
        const Term u = Term::iri("urn:test:w:" + std::to_string(i));
        b.publishes("w" + std::to_string(i), u, vocab::kArticle, date_in(year, i),
                    b.edition(kImpactJournal, "v" + std::to_string(year)), {author});
        window.push_back(u);
    }
    for (int i = 0; i < 6; ++i) {
        const int year = i < 3 ? 2004 : 2007;
        const Term u = Term::iri("urn:test:o:" + std::to_string(i));
        b.publishes("o" + std::to_string(i), u, vocab::kArticle, date_in(year, i),
                    b.edition(kImpactJournal, "v" + std::to_string(year)), {author});
        outside.push_back(u);
    }
    for (int i = 0; i < 10; ++i) {
        const Term u = Term::iri("urn:test:c:" + std::to_string(i));
        b.publishes("c" + std::to_string(i), u, vocab::kArticle, date_in(2007, i),
                    b.edition(other_journal.value(), "2007"), {author});
        citers.push_back(u);
    }
    for (int i = 0; i < 2; ++i) {
        const Term u = Term::iri("urn:test:d:" + std::to_string(i));
        b.publishes("d" + std::to_string(i), u, vocab::kArticle, date_in(2006, i),
                    b.edition(other_journal.value(), "2006"), {author});
        stale_citers.push_back(u);
    }
    for (int i = 0; i < 2; ++i) {
        const Term u = Term::iri("urn:test:f:" + std::to_string(i));
        b.publishes("f" + std::to_string(i), u, vocab::kArticle, date_in(2005, i),
                    b.edition(other_journal.value(), "2005"), {author});
        foreign.push_back(u);
    }

    // 25 distinct qualifying (citer, window unit) pairs
    int n = 0;
    for (int c = 0; c < 10 && n < 25; ++c) {
        for (int k = 0; k < 3 && n < 25; ++k) {
            b.citation("q" + std::to_string(n), citers[c], window[(c + 3 * k) % 10]);
            ++n;
        }
    }
    // not counted: cited by 2006 units, out-of-window sinks, foreign sinks
    for (int i = 0; i < 4; ++i) b.citation("s" + std::to_string(i), stale_citers[i % 2], window[i]);
    for (int i = 0; i < 3; ++i) b.citation("x" + std::to_string(i), citers[i], outside[i]);
    for (int i = 0; i < 2; ++i) b.citation("y" + std::to_string(i), citers[i], foreign[i]);

    const Term users[] = {iri("urn:test:user:1"), iri("urn:test:user:2"), iri("urn:test:user:3")};
    for (const auto& u : users) b.type(u, vocab::kHuman);
    for (int i = 0; i < 40; ++i) {
        b.uses("u" + std::to_string(i), window[(i * 7) % 10], users[i % 3], date_in(2007, i));
    }
    for (int i = 0; i < 6; ++i) b.uses("v" + std::to_string(i), window[i], users[0], date_in(2006, i));
    for (int i = 0; i < 5; ++i) b.uses("o" + std::to_string(i), outside[i], users[1], date_in(2007, i));
    for (int i = 0; i < 3; ++i) b.uses("l" + std::to_string(i), window[i], users[2], date_in(2008, i));
    return b.take();
}

std::vector<Triple> random_context_store(std::uint64_t seed, std::size_t contexts) {
    std::mt19937_64 rng(seed);
    auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
    auto chance = [&](int percent) { return static_cast<int>(rng() % 100) < percent; };
    Builder b;

    const std::size_t n_people = contexts / 4 + 5, n_units = contexts / 3 + 5, n_roots = contexts / 60 + 2;
    auto person = [](std::size_t i) { return Term::iri("urn:test:person:" + std::to_string(i)); };
    auto unit = [](std::size_t i) { return Term::iri("urn:test:unit:" + std::to_string(i)); };
    auto org = [](std::size_t i) { return Term::iri("urn:test:org:" + std::to_string(i)); };
    for (std::size_t i = 0; i < n_people; ++i) b.type(person(i), vocab::kHuman);
    for (std::size_t i = 0; i < 6; ++i) b.type(org(i), vocab::kOrganization);
    const std::string_view unit_classes[] = {vocab::kArticle, vocab::kArticle, vocab::kArticle,
                                             vocab::kPreprintArticle, vocab::kBook};
    for (std::size_t i = 0; i < n_units; ++i) {
        if (!chance(5)) b.type(unit(i), unit_classes[pick(5)]);
    }
    std::vector<Term> groups;
    for (std::size_t r = 0; r < n_roots; ++r) {
        const Term root = Term::iri("urn:test:journal:" + std::to_string(r));
        b.type(root, vocab::kJournal);
        groups.push_back(root);
        for (int e = 0; e < 3; ++e) {
            Term ed = b.edition(root.value(), "e" + std::to_string(e));
            groups.push_back(ed);
            if (chance(30)) groups.push_back(b.edition(ed.value(), "s"));
        }
    }

    for (std::size_t i = 0; i < contexts; ++i) {
        const std::string id = std::to_string(i);
        const int kind = static_cast<int>(rng() % 10);
        const int year = 2003 + static_cast<int>(pick(6));
        if (kind < 5) {
            std::vector<Term> authors;
            const std::size_t n = pick(5);
            for (std::size_t k = 0; k < n; ++k) authors.push_back(person(pick(n_people)));
            std::optional<Term> group, publisher;
            if (chance(80)) group = groups[pick(groups.size())];
            if (chance(70)) publisher = org(pick(6));
            Term x = Term::iri("urn:test:publishes:" + id);
            b.type(x, vocab::kPublishes);
            b.add(x, vocab::kHasUnit, unit(pick(n_units)));
            if (chance(10)) b.add(x, vocab::kHasUnit, unit(pick(n_units)));
            b.add(x, vocab::kHasProvider, org(0));
            b.add(x, vocab::kHasTime, dt(date_in(year, static_cast<int>(i))));
            if (group) b.add(x, vocab::kHasGroup, *group);
            if (group && chance(5)) b.add(x, vocab::kHasGroup, groups[pick(groups.size())]);
            if (publisher) b.add(x, vocab::kHasPublisher, *publisher);
            for (const auto& a : authors) b.add(x, vocab::kHasAuthor, a);
        } else if (kind < 8) {
            Term x = Term::iri("urn:test:uses:" + id);
            b.type(x, vocab::kUses);
            b.add(x, vocab::kHasDocument, unit(pick(n_units)));
            if (chance(90)) b.add(x, vocab::kHasUser, person(pick(n_people)));
            if (chance(5)) b.add(x, vocab::kHasUser, person(pick(n_people)));
            b.add(x, vocab::kHasTime, dt(date_in(year, static_cast<int>(i))));
        } else if (kind < 9) {
            b.citation(id, unit(pick(n_units)), unit(pick(n_units)));
        } else {
            b.affiliation(id, org(pick(6)), person(pick(n_people)));
        }
    }
    // inferred triples already present before any rule runs
    for (int k = 0; k < 3; ++k) {
        b.add(unit(pick(n_units)), vocab::kAuthoredBy, person(pick(n_people)));
        b.add(person(pick(n_people)), vocab::kUsed, unit(pick(n_units)));
    }
    auto all = b.take();
    std::set<Triple> distinct(all.begin(), all.end());
    return {distinct.begin(), distinct.end()};
}

std::vector<Triple> random_triples(std::uint64_t seed, std::size_t count) {
    std::mt19937_64 rng(seed);
    auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
    static const std::string pieces[] = {"plain", "with \"quotes\"", "back\\slash", "tab\there", "new\nline",
                                         "cr\rx",  "caf\xc3\xa9",       "\xe2\x82\xac 5", "",             "<angle>",
                                         " spaced ", "snow \xe2\x98\x83", "emoji \xf0\x9f\x93\x9a"};
    auto literal = [&]() {
        switch (pick(5)) {
            case 0: return Term::string_literal(pieces[pick(std::size(pieces))] + std::to_string(pick(1000)));
            case 1: return Term::literal(std::to_string(static_cast<std::int64_t>(rng() % 2000001) - 1000000),
                                         Datatype::Integer);
            case 2: return Term::literal(std::to_string(pick(10000)) + "." + std::to_string(pick(1000)),
                                         Datatype::Decimal);
            case 3: return dt(date_in(1990 + static_cast<int>(pick(30)), static_cast<int>(pick(100))));
            default: return Term::string_literal(std::to_string(rng()));
        }
    };
    const std::size_t n_nodes = count / 4 + 1;
    const std::size_t n_blanks = count / 40 + 1;
    auto node = [&]() {
        if (pick(10) == 0) return Term::blank("b" + std::to_string(pick(n_blanks)));
        std::string local = std::to_string(pick(n_nodes));
        return pick(3) == 0 ? Term::iri("http://example.org/r/%C3%A9" + local)
                            : Term::iri("urn:test:node:" + local);
    };
    std::set<Triple> out;
    for (std::size_t i = 0; i < n_blanks; ++i) {
        out.insert(Triple{Term::blank("b" + std::to_string(i)), Term::iri("urn:test:p:id"),
                          Term::string_literal("blank " + std::to_string(i))});
    }
    while (out.size() < count) {
        Term s = node();
        Term p = Term::iri("urn:test:p:" + std::to_string(pick(25)));
        Term o = pick(2) ? literal() : node();
        out.insert(Triple{std::move(s), std::move(p), std::move(o)});
    }
    return {out.begin(), out.end()};
}

std::vector<Triple> synthetic_triples(std::uint64_t seed, std::size_t count) {
    std::mt19937_64 rng(seed);
    std::vector<Triple> out;
    out.reserve(count);
    std::vector<Term> predicates;
    for (int i = 0; i < 20; ++i) predicates.push_back(Term::iri("urn:bench:p" + std::to_string(i)));
    const Term type = iri(vocab::kRdfType);
    std::vector<Term> classes;
    for (int i = 0; i < 10; ++i) classes.push_back(Term::iri("urn:bench:C" + std::to_string(i)));
    const std::size_t subjects = count / 10 + 1;
    // subject i gets one type triple and nine distinct (p, o) edges
    for (std::size_t i = 0; out.size() < count; ++i) {
        const Term s = Term::iri("urn:bench:s" + std::to_string(i));
        out.push_back(Triple{s, type, classes[i % classes.size()]});
        for (int k = 0; k < 9 && out.size() < count; ++k) {
            const Term& p = predicates[(i + static_cast<std::size_t>(k)) % predicates.size()];
            if (k % 3 == 0) {
                out.push_back(Triple{s, p, Term::literal(std::to_string(rng() % 100000), Datatype::Integer)});
            } else {
                out.push_back(Triple{s, p, Term::iri("urn:bench:s" + std::to_string(rng() % subjects))});
            }
        }
    }
    return out;
}

SidecarCorpus sidecar_corpus(std::uint64_t seed, std::size_t generated) {
    std::mt19937_64 rng(seed);
    SidecarCorpus c;
    c.biblio = "title\tauthors\tcollection\tpublisher\tdate\tstart_page\tend_page\tvolume\tissue\tdoi\tdoc_id\n";
    c.usage = "event_id\ttime\tagent\tsession\taffiliation\tdoc_id\taccess_type\n";
    c.citations = "citing\tcited\n";

    c.biblio += "The Convergence of Digital Libraries ...\tAlder|Birch|Van de Cedar\tJournal of Information "
                "Science\tSage Publications\t2006\t149\t159\t32\t2\t" + std::string(kExampleDoi) + "\t" +
                std::string(kExampleDocId) + "\n";
    c.titles.push_back("The Convergence of Digital Libraries ...");
    c.author_names.insert(c.author_names.end(), {"Alder", "Birch", "Van de Cedar"});
    c.pages.insert(c.pages.end(), {"149", "159"});
    c.usage += std::string(kExampleEventId) + "\t2006-09-27 00:00:03\t4AD2FD457EB59CE08AAAF6EA2A63F\tC3044206\t"
               "California State University, Los Angeles\t" + std::string(kExampleDocId) + "\t\n";

    const char* journals[] = {"Journal of Informetrics", "Scientometrics", "D-Lib Magazine", "JASIST"};
    std::vector<std::string> doc_ids;
    for (std::size_t i = 0; i < generated; ++i) {
        const std::string id = "doc-" + std::to_string(i) + "-" + std::to_string(rng() % 100000);
        doc_ids.push_back(id);
        const std::string title = "Synthetic study number " + std::to_string(i) + " of scholarly usage";
        const std::string a1 = "Author" + std::to_string(rng() % 300) + ", Given";
        const std::string a2 = "Writer" + std::to_string(rng() % 300) + ", Other";
        const std::string sp = "p" + std::to_string(1 + rng() % 900);
        const std::string ep = "p" + std::to_string(1000 + rng() % 900);
        const std::string doi = i % 3 == 0 ? "" : "10.9999/syn." + std::to_string(i);
        const std::string date = std::to_string(2000 + rng() % 8) + (i % 2 ? "-0" + std::to_string(1 + i % 9) : "");
        c.biblio += title + "\t" + a1 + "|" + a2 + "\t" + journals[i % 4] + "\tPublisher " +
                    std::to_string(i % 5) + "\t" + date + "\t" + sp + "\t" + ep + "\tvol-" + std::to_string(i % 40) +
                    "\tiss-" + std::to_string(i % 6) + "\t" + doi + "\t" + id + "\n";
        c.titles.push_back(title);
        c.author_names.push_back(a1);
        c.author_names.push_back(a2);
        c.pages.push_back(sp);
        c.pages.push_back(ep);
    }
    for (std::size_t i = 0; i < generated * 2; ++i) {
        const std::string& doc = doc_ids[rng() % doc_ids.size()];
        c.usage += "ev-" + std::to_string(i) + "\t2007-0" + std::to_string(1 + i % 9) + "-1" +
                   std::to_string(i % 10) + " 12:00:00\tagent" + std::to_string(rng() % 200) + "\tS" +
                   std::to_string(i / 3) + "\tUniversity " + std::to_string(i % 7) + "\t" + doc + "\t" +
                   (i % 2 ? "full-text" : "abstract") + "\n";
    }
    std::set<std::pair<std::size_t, std::size_t>> cites;
    while (cites.size() < generated) cites.emplace(rng() % generated, rng() % generated);
    for (const auto& [a, b] : cites) c.citations += doc_ids[a] + "\t" + doc_ids[b] + "\n";
    return c;
}

}  // namespace mesur::testkit
