#include <gtest/gtest.h>

#include <cstdio>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "congrlab/scan.hpp"
#include "fixtures.hpp"

using namespace congrlab;
using nlohmann::json;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args, const cli::Environment& env = {},
                  const Catalog& catalog = default_catalog()) {
    std::ostringstream out, err;
    const int code = cli::run(args, env, out, err, catalog);
    return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) {
    return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

} // namespace

TEST(ParseConfig, VerifyExample) {
    const auto inv = cli::parse_config({"verify", "--case", "thm1", "--p", "5", "--alpha", "2"}, {});
    EXPECT_EQ(inv.command, cli::Command::Verify);
    EXPECT_EQ(inv.config.cases, std::vector<std::string>{"thm1"});
    EXPECT_EQ(inv.config.prime_min, 5u);
    EXPECT_EQ(inv.config.prime_max, 5u);
    ASSERT_EQ(inv.config.alphas.size(), 1u);
    EXPECT_EQ(inv.config.alphas[0], PIntegerRational(2));
}

TEST(ParseConfig, ScanExample) {
    const auto inv = cli::parse_config({"scan", "--primes", "11..499", "--format", "json", "-o", "out.json"}, {});
    EXPECT_EQ(inv.command, cli::Command::Scan);
    EXPECT_EQ(inv.config.prime_min, 11u);
    EXPECT_EQ(inv.config.prime_max, 499u);
    EXPECT_EQ(inv.config.format, OutputFormat::Json);
    EXPECT_EQ(inv.config.output_path, "out.json");
    EXPECT_TRUE(inv.config.cases.empty());
    EXPECT_EQ(inv.config.alphas, standard_alpha_sweep());
}

TEST(ParseConfig, Defaults) {
    const auto inv = cli::parse_config({"scan"}, {});
    EXPECT_EQ(inv.config.prime_min, 3u);
    EXPECT_EQ(inv.config.prime_max, 499u);
    EXPECT_EQ(inv.config.format, OutputFormat::Text);
    EXPECT_TRUE(inv.config.output_path.empty());
    EXPECT_GE(inv.config.workers, 1u);

    const auto lem = cli::parse_config({"lemmas"}, {});
    EXPECT_EQ(lem.command, cli::Command::Lemmas);
    EXPECT_EQ(lem.config.mode, ScanMode::Lemmas);
    EXPECT_EQ(lem.config.prime_max, 199u);
}

TEST(ParseConfig, Workers) {
    EXPECT_EQ(cli::parse_config({"scan"}, {{"CONGRLAB_WORKERS", "3"}}).config.workers, 3u);
    EXPECT_EQ(cli::parse_config({"scan", "--workers", "2"}, {{"CONGRLAB_WORKERS", "3"}}).config.workers, 2u);
    EXPECT_THROW(cli::parse_config({"scan"}, {{"CONGRLAB_WORKERS", "zero"}}), cli::UsageError);
    EXPECT_THROW(cli::parse_config({"scan", "--workers", "0"}, {}), cli::UsageError);
}

TEST(ParseConfig, UsageErrors) {
    EXPECT_THROW(cli::parse_config({"scan", "--primes", "1..10"}, {}), cli::UsageError);
    EXPECT_THROW(cli::parse_config({"scan", "--primes", "50..10"}, {}), cli::UsageError);
    EXPECT_THROW(cli::parse_config({"scan", "--primes", "a..b"}, {}), cli::UsageError);
    EXPECT_THROW(cli::parse_config({"scan", "--format", "xml"}, {}), cli::UsageError);
    EXPECT_THROW(cli::parse_config({"scan", "--case", "nope"}, {}), cli::UsageError);
    EXPECT_THROW(cli::parse_config({"scan", "--alpha", "1/0"}, {}), cli::UsageError);
    EXPECT_THROW(cli::parse_config({"verify", "--case", "thm1"}, {}), cli::UsageError);
    EXPECT_THROW(cli::parse_config({"verify", "--case", "thm1", "--p", "9"}, {}), cli::UsageError);
    EXPECT_THROW(cli::parse_config({"lemmas", "--suite", "thm1"}, {}), cli::UsageError);
    EXPECT_THROW(cli::parse_config({"frobnicate"}, {}), cli::UsageError);
}

TEST(ParseConfig, OneDiagnosticPerBadFlag) {
    const auto r = run_cli({"scan", "--primes", "1..10", "--format", "xml", "--case", "nope"});
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(count_lines(r.err), 3u) << r.err;
    EXPECT_TRUE(r.out.empty());
}

TEST(ParsePrimeRange, Forms) {
    EXPECT_EQ(cli::parse_prime_range("3..499"), (std::pair<std::uint64_t, std::uint64_t>{3, 499}));
    EXPECT_EQ(cli::parse_prime_range("7"), (std::pair<std::uint64_t, std::uint64_t>{7, 7}));
    EXPECT_THROW(cli::parse_prime_range("3..-1"), cli::UsageError);
}

TEST(RunScan, Examples) {
    ScanConfig cfg;
    cfg.prime_min = 3;
    cfg.prime_max = 13;
    cfg.cases = {"wolstenholme_rel70"};
    const ScanReport r = run_scan(cfg);
    ASSERT_EQ(r.records.size(), 5u); // 3, 5, 7, 11, 13
    EXPECT_EQ(r.records[0].p, 3u);
    EXPECT_EQ(r.records[0].status, Status::Skip);
    EXPECT_EQ(r.records[0].reason, "p >= 5");
    for (std::size_t i = 1; i < r.records.size(); ++i) EXPECT_TRUE(r.records[i].passed());

    ScanConfig t7;
    t7.prime_min = t7.prime_max = 7;
    t7.cases = {"thm1"};
    t7.alphas = {PIntegerRational(2)};
    const ScanReport r7 = run_scan(t7);
    ASSERT_EQ(r7.records.size(), 1u);
    EXPECT_TRUE(r7.records[0].passed());
    EXPECT_EQ(r7.records[0].exponent, 6u);

    ScanConfig t5 = t7;
    t5.prime_min = t5.prime_max = 5;
    const ScanReport r5 = run_scan(t5);
    ASSERT_EQ(r5.records.size(), 1u);
    EXPECT_TRUE(r5.records[0].passed());
    EXPECT_EQ(r5.records[0].lhs->value(), 126);
    EXPECT_EQ(r5.records[0].rhs->value(), 126);
}

TEST(RunScan, NonPIntegerAlphaIsSkipped) {
    const auto r = run_cli({"scan", "--alpha", "1/7", "--primes", "7..7", "--case", "thm1", "--format", "csv"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("thm1,7,1/7,,,,skip,"), std::string::npos) << r.out;

    ScanConfig cfg;
    cfg.prime_min = cfg.prime_max = 7;
    cfg.alphas = {PIntegerRational(1, 7)};
    cfg.cases = {"thm1"};
    const ScanReport rep = run_scan(cfg);
    ASSERT_EQ(rep.records.size(), 1u);
    EXPECT_EQ(rep.records[0].reason, "NotPInteger");
}

TEST(RunScan, SummaryMatchesTallies) {
    ScanConfig cfg;
    cfg.prime_max = 41;
    const ScanReport r = run_scan(cfg);
    Summary s;
    for (const auto& v : r.records) {
        if (v.status == Status::Pass) ++s.pass;
        if (v.status == Status::Fail) ++s.fail;
        if (v.status == Status::Skip) ++s.skip;
    }
    EXPECT_EQ(r.summary, s);
    EXPECT_EQ(r.summary.pass + r.summary.fail + r.summary.skip, r.records.size());
    std::size_t fail_anomalies = 0;
    for (const auto& a : r.anomalies) fail_anomalies += a.kind == "fail";
    EXPECT_EQ(fail_anomalies, r.summary.fail);
}

TEST(RunScan, DeterministicAcrossWorkerCounts) {
    for (const ScanMode mode : {ScanMode::Congruences, ScanMode::Lemmas}) {
        ScanConfig cfg;
        cfg.mode = mode;
        cfg.prime_max = 97;
        cfg.tightness = true;
        if (mode == ScanMode::Lemmas) cfg.alphas.clear();
        std::string reference;
        for (unsigned w : {1u, 4u, 8u}) {
            cfg.workers = w;
            const std::string bytes = emit_report(run_scan(cfg), OutputFormat::Json) +
                                      emit_report(run_scan(cfg), OutputFormat::Csv);
            if (reference.empty()) reference = bytes;
            EXPECT_EQ(bytes, reference) << "workers=" << w;
        }
    }
}

TEST(EmitReport, EmptyReportIsValidJson) {
    ScanReport r;
    finalize_report(r);
    const std::string text = emit_report(r, OutputFormat::Json);
    const json j = json::parse(text);
    EXPECT_TRUE(j["records"].empty());
    EXPECT_TRUE(j["anomalies"].empty());
    EXPECT_EQ(j["summary"]["pass"], 0);
    EXPECT_EQ(j["summary"]["fail"], 0);
    EXPECT_EQ(j["summary"]["skip"], 0);
    EXPECT_EQ(text.back(), '\n');
    EXPECT_EQ(text.find('\r'), std::string::npos);
}

TEST(EmitReport, CsvLine) {
    ScanConfig cfg;
    cfg.prime_min = cfg.prime_max = 5;
    cfg.cases = {"wolstenholme_rel70"};
    const std::string csv = emit_report(run_scan(cfg), OutputFormat::Csv);
    EXPECT_EQ(csv, "case,p,alpha,m,lhs,rhs,status,valuation\nwolstenholme_rel70,5,,3,1,1,pass,>=3\n");
}

TEST(EmitReport, StrengthenedCaseIsAnAnomaly) {
    const PrimePowerModulus m(std::uint64_t{5}, 4);
    ScanReport r;
    r.records.push_back(compare_sides("hypothetical", 5, "", 0, 3, Residue(m, 1L), Residue(m, 1L)));
    r.records.push_back(compare_sides("hypothetical", 7, "", 0, 3, Residue(m, 1L), Residue(m, 126L)));
    finalize_report(r);
    ASSERT_EQ(r.anomalies.size(), 1u);
    EXPECT_EQ(r.anomalies[0].kind, "strengthened");
    EXPECT_EQ(r.anomalies[0].valuation, ">=4");

    const json j = json::parse(emit_report(r, OutputFormat::Json));
    ASSERT_EQ(j["anomalies"].size(), 1u);
    EXPECT_EQ(j["anomalies"][0]["case"], "hypothetical");
    EXPECT_EQ(j["anomalies"][0]["kind"], "strengthened");
    EXPECT_EQ(j["anomalies"][0]["valuation"], ">=4");

    const std::string text = emit_report(r, OutputFormat::Text);
    EXPECT_NE(text.find("strengthened"), std::string::npos);
}

TEST(EmitReport, JsonRoundTrip) {
    ScanConfig cfg;
    cfg.prime_max = 31;
    cfg.tightness = true;
    const ScanReport r = run_scan(cfg);
    const ParsedReport back = parse_json_report(emit_report(r, OutputFormat::Json));
    ASSERT_EQ(back.records.size(), r.records.size());
    for (std::size_t i = 0; i < r.records.size(); ++i) EXPECT_EQ(back.records[i], to_row(r.records[i])) << i;
    EXPECT_EQ(back.summary, r.summary);
    EXPECT_EQ(back.anomalies, r.anomalies);

    // Residues are strings, never numbers.
    const json j = json::parse(emit_report(r, OutputFormat::Json));
    for (const auto& rec : j["records"]) {
        EXPECT_TRUE(rec["lhs"].is_null() || rec["lhs"].is_string());
    }
}

TEST(ExitCodes, PassingRunIsZero) {
    const auto r = run_cli({"verify", "--case", "thm1", "--p", "5", "--alpha", "2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("126"), std::string::npos);
}

TEST(ExitCodes, ForcedFailureIsOne) {
    const Catalog cat = fixtures::catalog_with_false_case();
    const auto r = run_cli({"scan", "--primes", "5..13", "--case", "always_false", "--format", "json"}, {}, cat);
    EXPECT_EQ(r.code, 1);
    const json j = json::parse(r.out);
    EXPECT_EQ(j["summary"]["fail"], 4);
    EXPECT_EQ(j["anomalies"].size(), 4u);
}

TEST(ExitCodes, UsageErrorIsTwo) {
    EXPECT_EQ(run_cli({"scan", "--primes", "0..5"}).code, 2);
    EXPECT_EQ(run_cli({"verify", "--p", "5"}).code, 2);
    EXPECT_EQ(run_cli({"bogus"}).code, 2);
}

TEST(ExitCodes, UnwritableOutputIsTwo) {
    const auto r = run_cli({"verify", "--case", "babbage", "--p", "3", "-o", "/nonexistent-dir/sub/out.json"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("cannot open"), std::string::npos);
}

TEST(ExitCodes, WritesOutputFile) {
    const auto path = std::filesystem::temp_directory_path() / "congrlab_test_out.csv";
    std::filesystem::remove(path);
    const auto r = run_cli({"verify", "--case", "wolstenholme_rel70", "--p", "5", "--format", "csv", "-o", path.string()});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    EXPECT_EQ(ss.str(), "case,p,alpha,m,lhs,rhs,status,valuation\nwolstenholme_rel70,5,,3,1,1,pass,>=3\n");
    std::filesystem::remove(path);
}

TEST(ExitCodes, HelpIsZero) {
    const auto r = run_cli({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("verify"), std::string::npos);
    EXPECT_EQ(run_cli({}).code, 0);
}
