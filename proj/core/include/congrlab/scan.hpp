#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "congrlab/catalog.hpp"
#include "congrlab/rational.hpp"
#include "congrlab/verdict.hpp"

namespace congrlab {

enum class OutputFormat { Text, Json, Csv };

std::string to_string(OutputFormat f);

enum class ScanMode { Congruences, Lemmas };

struct ScanConfig {
    ScanMode mode = ScanMode::Congruences;
    std::uint64_t prime_min = 3;
    std::uint64_t prime_max = 499;
    std::vector<PIntegerRational> alphas = standard_alpha_sweep();
    // Empty means every case (or every lemma suite).
    std::vector<std::string> cases;
    OutputFormat format = OutputFormat::Text;
    // Empty means standard output.
    std::string output_path;
    unsigned workers = 1;
    bool tightness = false;
};

// Lemma suite names accepted by the `lemmas` command.
const std::vector<std::string>& lemma_suites();

struct Anomaly {
    std::string case_id;
    std::uint64_t p = 0;
    std::string param;
    // "fail" or "strengthened"
    std::string kind;
    std::string valuation;

    friend bool operator==(const Anomaly&, const Anomaly&) = default;
};

struct Summary {
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t skip = 0;

    friend bool operator==(const Summary&, const Summary&) = default;
};

struct ScanReport {
    ScanConfig config;
    std::vector<Verdict> records;
    Summary summary;
    std::vector<Anomaly> anomalies;

    bool has_failures() const { return summary.fail != 0; }
};

// Runs every selected case (or lemma suite) for every odd prime in range
// on `config.workers` threads, one prime per work unit. Records come back
// sorted by (case id, p, order), independent of the worker count.
ScanReport run_scan(const ScanConfig& config, const Catalog& catalog = default_catalog());

// Per-prime verdicts of the lemma suites.
std::vector<Verdict> lemma_verdicts(std::uint64_t p, const std::vector<std::string>& suites);

// Sorts records and fills summary and anomalies.
void finalize_report(ScanReport& report);

std::string emit_report(const ScanReport& report, OutputFormat format);

// A record as read back from a JSON report.
struct RecordRow {
    std::string case_id;
    std::uint64_t p = 0;
    std::string param;
    std::string exponent;
    std::string lhs;
    std::string rhs;
    std::string status;
    std::string reason;
    std::string valuation;

    friend bool operator==(const RecordRow&, const RecordRow&) = default;
};

RecordRow to_row(const Verdict& v);

struct ParsedReport {
    std::vector<RecordRow> records;
    Summary summary;
    std::vector<Anomaly> anomalies;
};

ParsedReport parse_json_report(const std::string& text);

} // namespace congrlab
