#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "harness/config.hpp"
#include "harness/record.hpp"
#include "harness/report.hpp"
#include "harness/suites.hpp"

using namespace newform::harness;

namespace {

std::string tmp_file(const std::string& name, const std::string& body) {
    auto p = std::filesystem::temp_directory_path() / ("newform_harness_" + name);
    std::ofstream(p) << body;
    return p.string();
}

std::string error_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const ConfigError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST(Config, ValidationNamesField) {
    RunConfig c;
    c.p = 9;
    EXPECT_NE(error_of([&] { c.validate(); }).find("'p'"), std::string::npos);
    c = RunConfig{};
    c.p = 2;
    EXPECT_NE(error_of([&] { c.validate(); }).find("'p'"), std::string::npos);
    c = RunConfig{};
    c.n = 1;
    c.r = 2;
    EXPECT_NE(error_of([&] { c.validate(); }).find("'r'"), std::string::npos);
    c = RunConfig{};
    c.samples = 0;
    EXPECT_NE(error_of([&] { c.validate(); }).find("'samples'"), std::string::npos);
    c = RunConfig{};
    c.format = "xml";
    EXPECT_NE(error_of([&] { c.validate(); }).find("'format'"), std::string::npos);
    EXPECT_NO_THROW(RunConfig{}.validate());
}

TEST(Config, ParsingErrorsNameField) {
    RunConfig c;
    EXPECT_NE(error_of([&] { apply(c, {{"depth", "x"}}, "test"); }).find("'depth'"), std::string::npos);
    EXPECT_NE(error_of([&] { apply(c, {{"bogus", "1"}}, "test"); }).find("'bogus'"), std::string::npos);
}

TEST(Config, FileEnvFlagPrecedence) {
    std::string path = tmp_file("cfg.txt", "# comment\np = 5\nsamples = 10  # trailing\ndepth = 4\n");
    RunConfig c;
    apply(c, read_config_file(path), "file");
    EXPECT_EQ(c.p, 5);
    EXPECT_EQ(c.samples, 10);
    setenv("NEWFORM_SAMPLES", "20", 1);
    setenv("NEWFORM_MPREC", "3", 1);
    apply(c, read_env(), "env");
    unsetenv("NEWFORM_SAMPLES");
    unsetenv("NEWFORM_MPREC");
    EXPECT_EQ(c.samples, 20);
    EXPECT_EQ(c.Mprec, 3);
    apply(c, {{"samples", "30"}}, "flags");
    EXPECT_EQ(c.samples, 30);
    EXPECT_EQ(c.depth, 4);
    EXPECT_THROW(read_config_file(tmp_file("bad.txt", "p 5\n")), ConfigError);
    EXPECT_THROW(read_config_file("/nonexistent/newform.cfg"), ConfigError);
}

TEST(Records, JsonRoundTrip) {
    Record r = make_record("s", "s.check", "anchor-id", {{"n", 1}}, 0.5, 1e-3, "detail");
    EXPECT_FALSE(r.pass);
    r.provenance["seed"] = "7";
    Record back = from_json(to_json(r));
    EXPECT_EQ(to_json(back).dump(), to_json(r).dump());
    Record inf = make_record("s", "c", "a", {}, INFINITY, 0);
    EXPECT_FALSE(inf.pass);
    EXPECT_EQ(to_json(inf)["residual"], "inf");
    EXPECT_TRUE(std::isinf(from_json(to_json(inf)).residual));
    Record nan = make_record("s", "c", "a", {}, NAN, 1);
    EXPECT_FALSE(nan.pass);
    EXPECT_EQ(to_csv(std::vector<Record>{r}).substr(0, csv_header().size()), csv_header());
}

TEST(Records, EveryRecordCarriesAnAnchor) {
    RunConfig c;
    c.samples = 5;
    for (const auto& name : {"dims", "trace", "gk"})
        for (const auto& r : run_suite(name, c)) {
            EXPECT_FALSE(r.anchor.empty()) << r.check;
            EXPECT_EQ(r.suite, name);
            EXPECT_EQ(r.provenance.at("seed"), "1");
        }
}

TEST(Suites, UnknownSuiteIsAConfigError) { EXPECT_THROW(run_suite("nope", RunConfig{}), ConfigError); }

TEST(Suites, ExceptionsBecomeFailingRecords) {
    RunConfig c;
    c.m = 0;  // the decomposition needs m >= 1
    c.samples = 3;
    auto recs = run_suite("decomp", c);
    ASSERT_FALSE(recs.empty());
    for (const auto& r : recs) {
        EXPECT_FALSE(r.pass);
        EXPECT_NE(r.detail.find("exception"), std::string::npos);
    }
}

TEST(Suites, ComputeRejectsUnsupportedRank) {
    RunConfig c;
    c.n = 3;
    EXPECT_THROW(compute_xi(c, "1/2", false), ConfigError);
}

TEST(Suites, DeterministicAcrossWorkerCounts) {
    RunConfig a;
    a.samples = 20;
    a.jobs = 1;
    RunConfig b = a;
    b.jobs = 4;
    for (const auto& name : {"cosets", "decomp", "trace"})
        EXPECT_EQ(to_jsonl(run_suite(name, a)), to_jsonl(run_suite(name, b))) << name;
    RunConfig s = a;
    s.seed = 2;
    EXPECT_NE(to_jsonl(run_suite("cosets", a)), to_jsonl(run_suite("cosets", s)));
}

TEST(Report, EmptyInput) {
    Digest d = summarize({tmp_file("empty.jsonl", "")});
    EXPECT_EQ(d.total, 0);
    EXPECT_EQ(digest_text(d), "");
    EXPECT_EQ(summarize({}).total, 0);
}

TEST(Report, CountsMatchRecordTotals) {
    std::vector<Record> recs;
    for (int i = 0; i < 7; ++i) recs.push_back(make_record("a", "a.x", "k", {{"i", i}}, i, 4));
    for (int i = 0; i < 3; ++i) recs.push_back(make_record("b", "b.y", "k", {{"i", i}}, 0, 0));
    std::string p = tmp_file("mixed.jsonl", to_jsonl(recs));
    std::ofstream(p + ".timing") << timing_line("a", 1.5);
    Digest d = summarize({p});
    EXPECT_EQ(d.total, 10);
    EXPECT_EQ(d.failed, 2);  // residuals 5 and 6 exceed 4
    EXPECT_EQ(d.suites.at("a").passed, 5);
    EXPECT_EQ(d.suites.at("b").passed, 3);
    EXPECT_DOUBLE_EQ(d.suites.at("a").seconds, 1.5);
    EXPECT_DOUBLE_EQ(d.suites.at("a").worst_ratio, 1.5);
    EXPECT_NE(digest_text(d).find("FAIL "), std::string::npos);
    EXPECT_THROW(summarize({"/nonexistent/report.jsonl"}), std::runtime_error);
}
