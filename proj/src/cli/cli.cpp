#include "mesur/cli/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mesur/cli/lock.hpp"
#include "mesur/error.hpp"
#include "mesur/inference/engine.hpp"
#include "mesur/inference/rules.hpp"
#include "mesur/metrics/metrics.hpp"
#include "mesur/ontology/schema.hpp"
#include "mesur/ontology/vocab.hpp"
#include "mesur/query/evaluator.hpp"
#include "mesur/query/parser.hpp"
#include "mesur/rdf/namespaces.hpp"
#include "mesur/rdf/ntriples.hpp"
#include "mesur/sidecar/mapping.hpp"
#include "mesur/sidecar/sidecar.hpp"

namespace mesur::cli {

using rdf::Term;

void apply_config_file(const std::string& path, Config& config) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot read config file " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError("config file " + path + ": " + e.what());
    }
    if (!j.is_object()) throw FormatError("config file " + path + ": expected a JSON object");
    try {
        for (const auto& [key, value] : j.items()) {
            if (key == "store") config.store_path = value.get<std::string>();
            else if (key == "sidecar") config.sidecar_path = value.get<std::string>();
            else if (key == "provider") config.provider = value.get<std::string>();
            else if (key == "precision") config.precision = value.get<int>();
            else if (key == "verbosity") config.verbosity = value.get<int>();
            else if (key == "namespaces") {
                for (const auto& [prefix, base] : value.items()) config.namespaces.emplace_back(prefix, base.get<std::string>());
            } else {
                throw FormatError("config file " + path + ": unknown key '" + key + "'");
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw FormatError("config file " + path + ": " + e.what());
    }
}

namespace {

enum class Format { Human, Tsv };

struct Env {
    Config config;
    Format format = Format::Human;
    rdf::NamespaceTable namespaces;
    std::istream& in;
    std::ostream& out;
    std::ostream& err;

    void log(const std::string& message) const {
        if (config.verbosity > 0) err << "mesur: " << message << '\n';
    }
};

/// Wall-clock logging of one phase at -v.
class Timer {
public:
    Timer(const Env& env, std::string what) : env_(env), what_(std::move(what)), start_(Clock::now()) {}
    ~Timer() {
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_).count();
        env_.log(what_ + " took " + std::to_string(ms) + " ms");
    }

private:
    using Clock = std::chrono::steady_clock;
    const Env& env_;
    std::string what_;
    Clock::time_point start_;
};

std::string read_all(const std::string& path, std::istream& in) {
    std::ostringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
    } else {
        std::ifstream f(path, std::ios::binary);
        if (!f) throw FormatError("cannot read " + path);
        buf << f.rdbuf();
    }
    return buf.str();
}

store::TripleStore load_store(const Env& env) {
    if (!std::filesystem::exists(env.config.store_path)) return {};
    Timer t(env, "loading " + env.config.store_path);
    return store::TripleStore::load_file(env.config.store_path);
}

void save_store(const Env& env, const store::TripleStore& store) {
    Timer t(env, "saving " + env.config.store_path);
    store.save_file(env.config.store_path);
}

std::string show(const Env& env, const Term& t) {
    if (env.format == Format::Human && t.is_iri()) {
        if (auto c = env.namespaces.compact(t.value())) return *c;
    }
    return t.to_string();
}

/// Accepts <iri>, a prefixed name with a registered prefix, or an absolute IRI.
Term parse_iri_arg(const Env& env, const std::string& text) {
    if (text.size() >= 2 && text.front() == '<' && text.back() == '>') return Term::iri(text.substr(1, text.size() - 2));
    auto colon = text.find(':');
    if (colon != std::string::npos && env.namespaces.contains(std::string_view(text).substr(0, colon))) {
        return env.namespaces.expand(text);
    }
    return Term::iri(text);
}

std::optional<inference::YearRange> parse_window(const std::optional<std::string>& text) {
    if (!text) return std::nullopt;
    return inference::parse_year_range(*text);
}

std::vector<std::pair<Term, Term>> typed_nodes(const store::TripleStore& store) {
    std::vector<std::pair<Term, Term>> out;
    const auto type = store.lookup(Term::iri(std::string(vocab::kRdfType)));
    if (!type) return out;
    store.scan(store::IdPattern{std::nullopt, *type, std::nullopt},
               [&](const store::IdTriple& t) { out.emplace_back(store.term(t.s), store.term(t.o)); });
    return out;
}

// ---- ingestion -------------------------------------------------------------

enum class Table { Biblio, Usage, Citations };

int cmd_ingest(Env& env, Table table, const std::string& path, bool strict) {
    FileLock lock(env.config.lock_path(), FileLock::Mode::Exclusive);
    auto sc = sidecar::Sidecar::load_file(env.config.sidecar_path);
    std::istringstream data(read_all(path, env.in));
    sidecar::IngestReport report;
    const char* name = "";
    switch (table) {
        case Table::Biblio: report = sc.ingest_biblio(data); name = "biblio"; break;
        case Table::Usage: report = sc.ingest_usage(data); name = "usage"; break;
        case Table::Citations: report = sc.ingest_citations(data); name = "citations"; break;
    }
    sc.save_file(env.config.sidecar_path);
    if (env.format == Format::Tsv) {
        env.out << "table\tloaded\trejected\n" << name << '\t' << report.loaded << '\t' << report.rejected << '\n';
        for (const auto& r : report.rejections) env.out << "rejection\t" << r.line << '\t' << r.reason << '\n';
    } else {
        env.out << name << ": loaded " << report.loaded << ", rejected " << report.rejected << '\n';
        for (const auto& r : report.rejections) env.err << "  line " << r.line << ": " << r.reason << '\n';
    }
    return strict && report.rejected > 0 ? kExitDataError : kExitOk;
}

int cmd_import(Env& env, const std::string& path) {
    FileLock lock(env.config.lock_path(), FileLock::Mode::Exclusive);
    auto store = load_store(env);
    std::istringstream data(read_all(path, env.in));
    std::vector<rdf::Triple> triples;
    {
        Timer t(env, "parsing " + path);
        triples = rdf::parse_ntriples(data);
    }
    std::size_t added = 0;
    {
        Timer t(env, "indexing");
        added = store.bulk_load(triples);
    }
    save_store(env, store);
    if (env.format == Format::Tsv) {
        env.out << "read\tadded\ttotal\n" << triples.size() << '\t' << added << '\t' << store.size() << '\n';
    } else {
        env.out << "read " << triples.size() << " triples, " << added << " new, store now holds " << store.size()
                << '\n';
    }
    return kExitOk;
}

int cmd_map(Env& env, const std::optional<std::string>& provider, bool affiliations,
            const std::optional<std::string>& unit_class, const std::optional<std::string>& group_class) {
    FileLock lock(env.config.lock_path(), FileLock::Mode::Exclusive);
    const auto sc = sidecar::Sidecar::load_file(env.config.sidecar_path);
    auto store = load_store(env);
    sidecar::MappingOptions options;
    options.provider = provider ? parse_iri_arg(env, *provider).value() : env.config.provider;
    options.mint_affiliations = affiliations;
    if (unit_class) options.unit_class = parse_iri_arg(env, *unit_class).value();
    if (group_class) options.group_class = parse_iri_arg(env, *group_class).value();
    for (const auto* cls : {&options.unit_class, &options.group_class}) {
        if (!ontology::Schema::mesur().has_class(*cls)) throw InvalidArgument("not a schema class: " + *cls);
    }
    const auto report = sidecar::map_to_graph(sc, store, options);
    save_store(env, store);
    if (env.format == Format::Tsv) {
        env.out << "publishes\tuses\tcitations\taffiliations\ttriples_added\n"
                << report.publishes << '\t' << report.uses << '\t' << report.citations << '\t' << report.affiliations
                << '\t' << report.triples_added << '\n';
    } else {
        env.out << "mapped " << report.publishes << " Publishes, " << report.uses << " Uses, " << report.citations
                << " Citation and " << report.affiliations << " Affiliation contexts (" << report.triples_added
                << " new triples)\n";
    }
    return kExitOk;
}

// ---- inspection ------------------------------------------------------------

int cmd_validate(Env& env, const std::optional<std::string>& node, bool strict) {
    FileLock lock(env.config.lock_path(), FileLock::Mode::Shared);
    const auto store = load_store(env);
    std::vector<Term> nodes;
    if (node) {
        nodes.push_back(parse_iri_arg(env, *node));
    } else {
        std::set<Term> typed;
        for (const auto& [s, cls] : typed_nodes(store)) typed.insert(s);
        nodes.assign(typed.begin(), typed.end());
    }
    std::size_t violations = 0;
    if (env.format == Format::Tsv) env.out << "kind\tnode\tproperty\tmessage\n";
    for (const auto& n : nodes) {
        for (const auto& v : ontology::validate_instance(n, store)) {
            ++violations;
            const std::string prop = v.property.empty() ? "-" : show(env, Term::iri(v.property));
            if (env.format == Format::Tsv) {
                env.out << ontology::violation_kind_name(v.kind) << '\t' << show(env, v.node) << '\t' << prop << '\t'
                        << v.message << '\n';
            } else {
                env.out << ontology::violation_kind_name(v.kind) << ": " << show(env, v.node) << ": " << v.message
                        << '\n';
            }
        }
    }
    if (env.format == Format::Human) {
        env.out << "checked " << nodes.size() << " nodes, " << violations << " violations\n";
    }
    return strict && violations > 0 ? kExitDataError : kExitOk;
}

int cmd_query(Env& env, const std::string& path) {
    const std::string text = read_all(path, env.in);
    const auto script = query::parse_script(text, env.namespaces);
    const bool writes = !script.inserts.empty();
    FileLock lock(env.config.lock_path(), writes ? FileLock::Mode::Exclusive : FileLock::Mode::Shared);
    auto store = load_store(env);
    inference::InferenceEngine engine(store);

    query::ExecuteOptions options;
    options.precision = env.config.precision;
    query::ExecutionReport report;
    {
        Timer t(env, "query");
        report = query::execute_script(script, store, options);
    }
    if (report.inserted() > 0) save_store(env, store);

    for (std::size_t b = 0; b < report.blocks.size(); ++b) {
        const auto& block = report.blocks[b];
        if (env.format == Format::Tsv) {
            env.out << "block";
            for (const auto& c : block.columns) env.out << "\t?" << c;
            env.out << '\n';
            for (const auto& row : block.rows) {
                env.out << b + 1;
                for (const auto& t : row) env.out << '\t' << show(env, t);
                env.out << '\n';
            }
        } else {
            env.out << "block " << b + 1 << ": " << block.rows.size() << " rows, " << block.solutions
                    << " solutions\n";
            for (const auto& row : block.rows) {
                env.out << ' ';
                for (std::size_t i = 0; i < row.size(); ++i) env.out << " ?" << block.columns[i] << '=' << show(env, row[i]);
                env.out << '\n';
            }
        }
    }
    if (env.format == Format::Tsv) {
        env.out << "inserted\t" << report.inserted() << '\n';
    } else if (!script.inserts.empty()) {
        env.out << "inserted " << report.inserted() << " new triples (" << report.produced.size() << " produced)\n";
    }
    return kExitOk;
}

void print_counts(Env& env, const std::string& label, const std::vector<std::pair<std::string, std::size_t>>& counts) {
    if (env.format == Format::Tsv) {
        env.out << "rule\t" << label << '\n';
        for (const auto& [name, n] : counts) env.out << name << '\t' << n << '\n';
    } else {
        for (const auto& [name, n] : counts) env.out << name << ": " << label << ' ' << n << '\n';
    }
}

struct LoadedEngine {
    store::TripleStore store;
    std::optional<inference::InferenceEngine> engine;
};

void open_engine(const Env& env, LoadedEngine& le) {
    le.store = load_store(env);
    le.engine.emplace(le.store, inference::MaterializationLedger::load_file(env.config.ledger_path()));
}

void close_engine(const Env& env, LoadedEngine& le) {
    save_store(env, le.store);
    le.engine->ledger().save_file(env.config.ledger_path());
}

int cmd_infer(Env& env, bool all, const std::vector<std::string>& rules, bool list) {
    if (list) {
        for (const auto& r : inference::rule_registry()) {
            std::string produces;
            for (const auto& p : r.produces) produces += (produces.empty() ? "" : ",") + show(env, Term::iri(p));
            if (env.format == Format::Tsv) env.out << r.name << '\t' << produces << '\t' << r.description << '\n';
            else env.out << r.name << "  (" << produces << ")  " << r.description << '\n';
        }
        return kExitOk;
    }
    if (!all && rules.empty()) throw CLI::ValidationError("infer", "give --all, --rule NAME or --list");
    for (const auto& r : rules) inference::find_rule(r);
    FileLock lock(env.config.lock_path(), FileLock::Mode::Exclusive);
    LoadedEngine le;
    open_engine(env, le);
    std::vector<std::pair<std::string, std::size_t>> counts;
    {
        Timer t(env, "inference");
        if (all) {
            counts = le.engine->run_all();
        } else {
            for (const auto& r : rules) counts.emplace_back(r, le.engine->run_rule(r));
        }
    }
    close_engine(env, le);
    print_counts(env, "added", counts);
    return kExitOk;
}

int cmd_retract(Env& env, bool all, const std::vector<std::string>& rules) {
    if (!all && rules.empty()) throw CLI::ValidationError("retract", "give --all or --rule NAME");
    FileLock lock(env.config.lock_path(), FileLock::Mode::Exclusive);
    LoadedEngine le;
    open_engine(env, le);
    std::vector<std::pair<std::string, std::size_t>> counts;
    if (all) {
        for (const auto& name : le.engine->ledger().rules()) counts.emplace_back(name, le.engine->retract_rule(name));
    } else {
        for (const auto& r : rules) counts.emplace_back(r, le.engine->retract_rule(r));
    }
    close_engine(env, le);
    print_counts(env, "removed", counts);
    return kExitOk;
}

struct DeriveArgs {
    std::string source, sink, source_window, sink_window;
    bool one_hop = false;
    std::string a, b;
    std::optional<std::string> window;
};

int cmd_group_citation(Env& env, const DeriveArgs& args) {
    FileLock lock(env.config.lock_path(), FileLock::Mode::Exclusive);
    LoadedEngine le;
    open_engine(env, le);
    const auto r = le.engine->derive_group_citation(
        parse_iri_arg(env, args.source), parse_iri_arg(env, args.sink), inference::parse_year_range(args.source_window),
        inference::parse_year_range(args.sink_window),
        args.one_hop ? inference::PartOfMode::OneHop : inference::PartOfMode::Transitive);
    close_engine(env, le);
    if (env.format == Format::Tsv) {
        env.out << "node\tweight\n" << r.node.to_string() << '\t' << r.weight << '\n';
    } else {
        env.out << "Citation " << r.node.to_string() << " weight " << r.weight << '\n';
    }
    return kExitOk;
}

int cmd_coauthor(Env& env, const DeriveArgs& args) {
    FileLock lock(env.config.lock_path(), FileLock::Mode::Exclusive);
    LoadedEngine le;
    open_engine(env, le);
    const auto r = le.engine->derive_coauthor(parse_iri_arg(env, args.a), parse_iri_arg(env, args.b),
                                              parse_window(args.window));
    close_engine(env, le);
    if (env.format == Format::Tsv) {
        env.out << "forward\tbackward\tweight\n"
                << r.forward.to_string() << '\t' << r.backward.to_string() << '\t' << r.weight << '\n';
    } else {
        env.out << "Coauthor " << r.forward.to_string() << " and " << r.backward.to_string() << " weight " << r.weight
                << '\n';
    }
    return kExitOk;
}

struct MetricArgs {
    std::string kind;
    std::string object;
    int year = 0;
    std::optional<std::string> window;
    bool one_hop = false;
};

int cmd_metric(Env& env, const MetricArgs& args) {
    FileLock lock(env.config.lock_path(), FileLock::Mode::Exclusive);
    LoadedEngine le;
    open_engine(env, le);
    metrics::MetricRequest req;
    req.kind = args.kind == "if" ? metrics::MetricKind::ImpactFactor : metrics::MetricKind::UsageImpactFactor;
    req.object = parse_iri_arg(env, args.object);
    req.year = args.year;
    req.window = parse_window(args.window);
    req.part_of = args.one_hop ? inference::PartOfMode::OneHop : inference::PartOfMode::Transitive;
    req.precision = env.config.precision;
    const auto r = metrics::compute_metric(req, *le.engine);
    close_engine(env, le);
    if (env.format == Format::Tsv) {
        env.out << "metric\tobject\tyear\tnumerator\tdenominator\tvalue\n"
                << metrics::metric_kind_name(r.kind) << '\t' << r.object.value() << '\t' << r.year << '\t'
                << r.numerator << '\t' << r.denominator << '\t' << r.value << '\n';
    } else {
        env.out << metrics::metric_kind_name(r.kind) << " of " << show(env, r.object) << " for " << r.year
                << " (window " << r.window.to_string() << ")\n"
                << "  value:       " << r.value << '\n'
                << "  numerator:   " << r.numerator << '\n'
                << "  denominator: " << r.denominator << '\n'
                << "  node:        " << r.node.to_string() << '\n';
    }
    return kExitOk;
}

int cmd_export(Env& env, bool schema, const std::optional<std::string>& output) {
    std::ofstream file;
    std::ostream* out = &env.out;
    if (output) {
        file.open(*output, std::ios::binary | std::ios::trunc);
        if (!file) throw FormatError("cannot write " + *output);
        out = &file;
    }
    if (schema) {
        *out << ontology::Schema::mesur().export_listing();
    } else {
        FileLock lock(env.config.lock_path(), FileLock::Mode::Shared);
        const auto store = load_store(env);
        rdf::serialize_ntriples(store.triples(), *out);
    }
    if (!out->flush()) throw FormatError("write failed");
    return kExitOk;
}

int cmd_stats(Env& env) {
    FileLock lock(env.config.lock_path(), FileLock::Mode::Shared);
    const auto store = load_store(env);
    const auto ledger = inference::MaterializationLedger::load_file(env.config.ledger_path());
    const auto sc = sidecar::Sidecar::load_file(env.config.sidecar_path);

    std::map<Term, std::size_t> classes;
    for (const auto& [s, cls] : typed_nodes(store)) ++classes[cls];
    const char* sep = env.format == Format::Tsv ? "\t" : ": ";
    env.out << "triples" << sep << store.size() << '\n';
    env.out << "terms" << sep << store.dictionary().size() << '\n';
    env.out << "inferred" << sep << ledger.total() << '\n';
    for (const auto& [cls, n] : classes) {
        if (env.format == Format::Tsv) env.out << "class\t" << show(env, cls) << '\t' << n << '\n';
        else env.out << "class " << show(env, cls) << ": " << n << '\n';
    }
    for (const auto& rule : ledger.rules()) {
        if (env.format == Format::Tsv) env.out << "ledger\t" << rule << '\t' << ledger.size(rule) << '\n';
        else env.out << "ledger " << rule << ": " << ledger.size(rule) << '\n';
    }
    const std::pair<const char*, std::size_t> tables[] = {
        {"biblio", sc.biblio().size()}, {"usage", sc.usage().size()}, {"citations", sc.citations().size()}};
    for (const auto& [name, n] : tables) {
        if (env.format == Format::Tsv) env.out << "sidecar\t" << name << '\t' << n << '\n';
        else env.out << "sidecar " << name << ": " << n << '\n';
    }
    return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Scholarly semantic-network store: ingest records, map them to MESUR contexts, query, infer and "
                 "compute metrics."};
    app.name("mesur");
    app.require_subcommand(1);
    app.fallthrough();

    std::optional<std::string> config_path, store_path, sidecar_path, provider_flag;
    std::optional<int> precision;
    std::vector<std::string> prefixes;
    std::string format = "human";
    int verbose = 0;
    app.add_option("--config", config_path, "JSON config file");
    app.add_option("--store", store_path, "store snapshot path (env MESUR_STORE)");
    app.add_option("--sidecar", sidecar_path, "sidecar table path (env MESUR_SIDECAR)");
    app.add_option("--provider", provider_flag, "provider IRI credited on mapped Events");
    app.add_option("--precision", precision, "fractional digits of computed decimals")->check(CLI::Range(0, 12));
    app.add_option("--prefix", prefixes, "extra namespace as prefix=base (repeatable)");
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"human", "tsv"}));
    app.add_flag("-v,--verbose", verbose, "log phases and timings to stderr");

    std::string input = "-";
    bool strict = false;
    auto* ingest_biblio = app.add_subcommand("ingest-biblio", "load bibliographic records (TSV) into the sidecar");
    auto* ingest_usage = app.add_subcommand("ingest-usage", "load usage records (TSV) into the sidecar");
    auto* ingest_citations = app.add_subcommand("ingest-citations", "load citing/cited doc_id pairs (TSV)");
    for (auto* sub : {ingest_biblio, ingest_usage, ingest_citations}) {
        sub->footer("TSV report: table, loaded, rejected; then rejection, line, reason per rejected row");
        sub->add_option("file", input, "input file, - for stdin");
        sub->add_flag("--strict", strict, "exit 1 if any record is rejected");
    }

    auto* import = app.add_subcommand("import", "bulk-load N-Triples into the store");
    import->add_option("file", input, "N-Triples file, - for stdin");
    import->footer("TSV report: read, added, total");

    bool affiliations = false;
    std::optional<std::string> unit_class, group_class;
    auto* map = app.add_subcommand("map", "write Publishes/Uses/Citation contexts for all sidecar records");
    map->footer("TSV report: publishes, uses, citations, affiliations, triples_added");
    map->add_flag("--affiliations", affiliations, "mint Organization and Affiliation contexts from usage records");
    map->add_option("--unit-class", unit_class, "class of mapped units (default mesur:Article)");
    map->add_option("--group-class", group_class, "class of mapped groups (default mesur:Journal)");

    std::optional<std::string> node;
    auto* validate = app.add_subcommand("validate", "check typed nodes against the schema");
    validate->footer("TSV report: kind, node, property, message (one row per violation)");
    validate->add_option("--node", node, "validate only this node");
    validate->add_flag("--strict", strict, "exit 1 if any violation is found");

    auto* query = app.add_subcommand("query", "run a query script");
    query->footer("TSV report: per block a header row (block, ?var...) then rows (block number, terms...); last row inserted, count");
    query->add_option("script", input, "script file, - for stdin");

    bool all = false, list = false;
    std::vector<std::string> rules;
    auto* infer = app.add_subcommand("infer", "run inference rules");
    infer->footer("TSV report: rule, added; with --list: name, produced properties, description");
    infer->add_flag("--all", all, "run every registered rule");
    infer->add_option("--rule", rules, "rule to run (repeatable)");
    infer->add_flag("--list", list, "list registered rules");

    auto* retract = app.add_subcommand("retract", "remove the triples inference added");
    retract->footer("TSV report: rule, removed");
    retract->add_flag("--all", all, "retract everything in the ledger");
    retract->add_option("--rule", rules, "rule or derivation to retract (repeatable)");

    DeriveArgs derive_args;
    auto* derive = app.add_subcommand("derive", "write aggregate relationship contexts");
    derive->require_subcommand(1);
    auto* group_citation = derive->add_subcommand("group-citation", "group-to-group Citation from unit citations");
    group_citation->footer("TSV report: node, weight");
    group_citation->add_option("--source", derive_args.source, "source group root")->required();
    group_citation->add_option("--sink", derive_args.sink, "sink group root")->required();
    group_citation->add_option("--source-window", derive_args.source_window, "years, e.g. 2007")->required();
    group_citation->add_option("--sink-window", derive_args.sink_window, "years, e.g. 2005-2006")->required();
    group_citation->add_flag("--one-hop", derive_args.one_hop, "follow a single partOf edge");
    auto* coauthor = derive->add_subcommand("coauthor", "Coauthor contexts for one pair of authors");
    coauthor->footer("TSV report: forward, backward, weight");
    coauthor->add_option("--a", derive_args.a, "first author")->required();
    coauthor->add_option("--b", derive_args.b, "second author")->required();
    coauthor->add_option("--window", derive_args.window, "only Publishes dated in these years");

    MetricArgs metric_args;
    auto* metric = app.add_subcommand("metric", "compute an impact factor (if) or usage impact factor (uif)");
    metric->footer("TSV report: metric, object, year, numerator, denominator, value");
    metric->add_option("kind", metric_args.kind, "if or uif")->required()->check(CLI::IsMember({"if", "uif"}));
    metric->add_option("--object", metric_args.object, "group root")->required();
    metric->add_option("--year", metric_args.year, "target year")->required();
    metric->add_option("--window", metric_args.window, "publication window (default: the two preceding years)");
    metric->add_flag("--one-hop", metric_args.one_hop, "follow a single partOf edge");

    bool schema = false;
    std::optional<std::string> output;
    auto* export_cmd = app.add_subcommand("export", "write the store as N-Triples (or the schema listing)");
    export_cmd->add_flag("--schema", schema, "export the class and property listing instead");
    export_cmd->add_option("--output", output, "output file (default stdout)");

    auto* stats = app.add_subcommand("stats", "triple, class, ledger and sidecar counts");
    stats->footer("TSV report: triples, terms and inferred totals; class, IRI, count; ledger, rule, count; sidecar, table, count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "mesur: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    Env env{Config{}, format == "tsv" ? Format::Tsv : Format::Human, rdf::NamespaceTable::defaults(), in, out, err};
    try {
        if (config_path) apply_config_file(*config_path, env.config);
        if (const char* s = std::getenv("MESUR_STORE"); s && *s) env.config.store_path = s;
        if (const char* s = std::getenv("MESUR_SIDECAR"); s && *s) env.config.sidecar_path = s;
        if (store_path) env.config.store_path = *store_path;
        if (sidecar_path) env.config.sidecar_path = *sidecar_path;
        if (provider_flag) env.config.provider = *provider_flag;
        if (precision) env.config.precision = *precision;
        env.config.verbosity += verbose;
        for (const auto& [p, base] : env.config.namespaces) env.namespaces.add(p, base);
        for (const auto& spec : prefixes) {
            auto eq = spec.find('=');
            if (eq == std::string::npos || eq == 0) throw CLI::ValidationError("--prefix", "expected prefix=base");
            env.namespaces.add(spec.substr(0, eq), spec.substr(eq + 1));
        }
        Term::iri(env.config.provider);

        if (*ingest_biblio) return cmd_ingest(env, Table::Biblio, input, strict);
        if (*ingest_usage) return cmd_ingest(env, Table::Usage, input, strict);
        if (*ingest_citations) return cmd_ingest(env, Table::Citations, input, strict);
        if (*import) return cmd_import(env, input);
        if (*map) return cmd_map(env, provider_flag, affiliations, unit_class, group_class);
        if (*validate) return cmd_validate(env, node, strict);
        if (*query) return cmd_query(env, input);
        if (*infer) return cmd_infer(env, all, rules, list);
        if (*retract) return cmd_retract(env, all, rules);
        if (*group_citation) return cmd_group_citation(env, derive_args);
        if (*coauthor) return cmd_coauthor(env, derive_args);
        if (*metric) return cmd_metric(env, metric_args);
        if (*export_cmd) return cmd_export(env, schema, output);
        if (*stats) return cmd_stats(env);
        err << app.help();
        return kExitUsage;
    } catch (const CLI::Error& e) {
        err << "mesur: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "mesur: " << e.what() << '\n';
        return kExitDataError;
    }
}

}  // namespace mesur::cli
