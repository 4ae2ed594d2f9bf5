#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "mesur/cli/cli.hpp"
#include "mesur/rdf/ntriples.hpp"

namespace fs = std::filesystem;
using namespace mesur;

namespace {

struct Outcome {
    int code = 0;
    std::string out, err;
};

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("mesur-cli-" + std::to_string(::getpid()) + "-" +
                ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::remove_all(dir_);
        fs::create_directories(dir_);
        ::unsetenv("MESUR_STORE");
        ::unsetenv("MESUR_SIDECAR");
    }
    void TearDown() override {
        ::unsetenv("MESUR_STORE");
        ::unsetenv("MESUR_SIDECAR");
        fs::remove_all(dir_);
    }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    std::string write(const std::string& name, const std::string& text) const {
        std::ofstream(path(name), std::ios::binary) << text;
        return path(name);
    }

    // Runs with the store and sidecar inside the temp dir unless the caller overrides them.
    Outcome run(std::vector<std::string> args, const std::string& stdin_text = "", bool default_paths = true) {
        std::vector<std::string> full = {"mesur"};
        if (default_paths) full.insert(full.end(), {"--store", path("s.store"), "--sidecar", path("s.sidecar")});
        full.insert(full.end(), args.begin(), args.end());
        std::vector<const char*> argv;
        for (const auto& a : full) argv.push_back(a.c_str());
        std::istringstream in(stdin_text);
        std::ostringstream out, err;
        Outcome o;
        o.code = cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
        o.out = out.str();
        o.err = err.str();
        return o;
    }

    // Value of a "key\tvalue" line in TSV output.
    static std::string tsv_value(const std::string& text, const std::string& key) {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            if (line.starts_with(key + "\t")) return line.substr(key.size() + 1);
        }
        return "<absent>";
    }

    void load_corpus() {
        const auto corpus = testkit::sidecar_corpus(3, 40);
        ASSERT_EQ(run({"ingest-biblio", write("b.tsv", corpus.biblio)}).code, 0);
        ASSERT_EQ(run({"ingest-usage", write("u.tsv", corpus.usage)}).code, 0);
        ASSERT_EQ(run({"ingest-citations", write("c.tsv", corpus.citations)}).code, 0);
        ASSERT_EQ(run({"map"}).code, 0);
    }

    fs::path dir_;
};

}  // namespace

TEST_F(CliTest, UsageErrorsExitTwo) {
    EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"metric", "xf", "--object", "urn:x", "--year", "2007"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"--precision", "40", "stats"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"retract"}).code, cli::kExitUsage);
    const auto help = run({"--help"});
    EXPECT_EQ(help.code, 0);
    EXPECT_NE(help.out.find("query"), std::string::npos);
}

TEST_F(CliTest, EmptyQueryIsAPositionedError) {
    const auto o = run({"query", "-"}, "");
    EXPECT_EQ(o.code, cli::kExitDataError);
    EXPECT_NE(o.err.find("line 1, column 1"), std::string::npos) << o.err;
    EXPECT_FALSE(fs::exists(path("s.store")));
}

TEST_F(CliTest, InferredCountsReconcile) {
    load_corpus();
    const auto before = run({"--format", "tsv", "stats"});
    ASSERT_EQ(before.code, 0);
    const auto infer = run({"--format", "tsv", "infer", "--all"});
    ASSERT_EQ(infer.code, 0) << infer.err;
    std::istringstream in(infer.out);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "rule\tadded");
    std::size_t sum = 0;
    while (std::getline(in, line)) sum += std::stoul(line.substr(line.find('\t') + 1));
    EXPECT_GT(sum, 0u);
    const auto after = run({"--format", "tsv", "stats"});
    EXPECT_EQ(tsv_value(after.out, "inferred"), std::to_string(sum));
    EXPECT_EQ(std::stoul(tsv_value(after.out, "triples")), std::stoul(tsv_value(before.out, "triples")) + sum);

    ASSERT_EQ(run({"retract", "--all"}).code, 0);
    const auto restored = run({"--format", "tsv", "stats"});
    EXPECT_EQ(tsv_value(restored.out, "triples"), tsv_value(before.out, "triples"));
    EXPECT_EQ(tsv_value(restored.out, "inferred"), "0");
}

TEST_F(CliTest, MetricReport) {
    const auto nt = write("impact.nt", rdf::serialize_ntriples(testkit::impact_fixture()));
    ASSERT_EQ(run({"import", nt}).code, 0);
    const auto o = run({"--format", "tsv", "metric", "if", "--object", std::string(testkit::kImpactJournal), "--year",
                        "2007"});
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_EQ(o.out, "metric\tobject\tyear\tnumerator\tdenominator\tvalue\n"
                     "ImpactFactor\turn:issn:1082-9873\t2007\t25\t10\t2.500000\n");
    // same input, same bytes
    EXPECT_EQ(run({"--format", "tsv", "metric", "if", "--object", std::string(testkit::kImpactJournal), "--year",
                   "2007"})
                  .out,
              o.out);
    const auto u = run({"metric", "uif", "--object", "<urn:issn:1082-9873>", "--year", "2007"});
    ASSERT_EQ(u.code, 0) << u.err;
    EXPECT_NE(u.out.find("value:       4.000000"), std::string::npos) << u.out;

    const auto none = run({"metric", "if", "--object", "urn:issn:1082-9873", "--year", "2012"});
    EXPECT_EQ(none.code, cli::kExitDataError);
    EXPECT_NE(none.err.find("ImpactFactor"), std::string::npos) << none.err;
}

TEST_F(CliTest, QueryInsertsArePersisted) {
    load_corpus();
    const auto script = write("q.txt", "SELECT ?x ?a WHERE ( ?x rdf:type mesur:Publishes ) ( ?x mesur:hasUnit ?a ) "
                                       "INSERT < ?a rdf:type mesur:Unit > .");
    const auto first = run({"query", script});
    ASSERT_EQ(first.code, 0) << first.err;
    const auto stats = run({"--format", "tsv", "stats"});
    EXPECT_NE(stats.out.find("class\t<http://www.mesur.org/schemas/2007-01/mesur#Unit>\t"), std::string::npos) << stats.out;
}

TEST_F(CliTest, ConfigFileAndOverrides) {
    const auto cfg = write("config.json", "{\"store\": \"" + path("from-config.store") + "\", \"sidecar\": \"" +
                                              path("from-config.sidecar") + "\", \"precision\": 3}");
    const auto nt = write("impact.nt", rdf::serialize_ntriples(testkit::impact_fixture()));
    ASSERT_EQ(run({"--config", cfg, "import", nt}, "", false).code, 0);
    EXPECT_TRUE(fs::exists(path("from-config.store")));
    const auto o = run({"--config", cfg, "--format", "tsv", "metric", "uif", "--object", "urn:issn:1082-9873",
                        "--year", "2007"},
                       "", false);
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_TRUE(o.out.ends_with("\t4.000\n")) << o.out;
    const auto p = run({"--config", cfg, "--precision", "1", "--format", "tsv", "metric", "uif", "--object",
                        "urn:issn:1082-9873", "--year", "2007"},
                       "", false);
    EXPECT_TRUE(p.out.ends_with("\t4.0\n")) << p.out;

    // the environment beats the config file, the flag beats both
    ::setenv("MESUR_STORE", path("from-env.store").c_str(), 1);
    ASSERT_EQ(run({"--config", cfg, "import", nt}, "", false).code, 0);
    EXPECT_TRUE(fs::exists(path("from-env.store")));
    ASSERT_EQ(run({"--config", cfg, "--store", path("from-flag.store"), "import", nt}, "", false).code, 0);
    EXPECT_TRUE(fs::exists(path("from-flag.store")));

    const auto bad = write("bad.json", "{\"stroe\": \"x\"}");
    EXPECT_EQ(run({"--config", bad, "stats"}, "", false).code, cli::kExitDataError);
}

TEST_F(CliTest, ExportRoundTrip) {
    const auto triples = testkit::random_triples(4, 300);
    const auto nt = write("in.nt", rdf::serialize_ntriples(triples));
    ASSERT_EQ(run({"import", nt}).code, 0);
    const auto o = run({"export"});
    ASSERT_EQ(o.code, 0);
    EXPECT_EQ(rdf::parse_ntriples(o.out).size(), triples.size());
    ASSERT_EQ(run({"export", "--output", path("out.nt")}).code, 0);
    std::ifstream in(path("out.nt"));
    EXPECT_EQ(rdf::parse_ntriples(in).size(), triples.size());
    EXPECT_NE(run({"export", "--schema"}).out.find("class\t"), std::string::npos);
}

TEST_F(CliTest, StrictIngestAndValidate) {
    const auto bad = write("b.tsv", "title\tdate\tdoc_id\nfine\t2006\td1\nbroken\t2006\td1\n");
    const auto o = run({"ingest-biblio", "--strict", bad});
    EXPECT_EQ(o.code, cli::kExitDataError);
    EXPECT_NE(o.err.find("line 3"), std::string::npos) << o.err;
    load_corpus();
    EXPECT_EQ(run({"validate", "--strict"}).code, 0);
    EXPECT_EQ(run({"validate", "--node", "urn:nowhere:at:all"}).code, cli::kExitDataError);
}
