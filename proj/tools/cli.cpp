#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "congrlab/errors.hpp"
#include "congrlab/primes.hpp"

namespace congrlab::cli {

namespace {

std::vector<std::string> split_list(const std::vector<std::string>& raw) {
    std::vector<std::string> out;
    for (const auto& item : raw) {
        std::stringstream ss(item);
        std::string part;
        while (std::getline(ss, part, ',')) {
            if (!part.empty()) out.push_back(part);
        }
    }
    return out;
}

std::uint64_t parse_u64(const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
        throw UsageError("expected a nonnegative integer, got '" + s + "'");
    }
    try {
        return std::stoull(s);
    } catch (const std::exception&) {
        throw UsageError("integer out of range: '" + s + "'");
    }
}

unsigned default_workers(const Environment& env, std::vector<std::string>& problems) {
    if (const auto it = env.find("CONGRLAB_WORKERS"); it != env.end() && !it->second.empty()) {
        try {
            const std::uint64_t w = parse_u64(it->second);
            if (w == 0) throw UsageError("");
            return static_cast<unsigned>(w);
        } catch (const UsageError&) {
            problems.push_back("CONGRLAB_WORKERS: expected a positive integer, got '" + it->second + "'");
        }
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

OutputFormat parse_format(const std::string& s) {
    if (s == "text") return OutputFormat::Text;
    if (s == "json") return OutputFormat::Json;
    if (s == "csv") return OutputFormat::Csv;
    throw UsageError("--format: expected text, json or csv, got '" + s + "'");
}

} // namespace

std::pair<std::uint64_t, std::uint64_t> parse_prime_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const std::uint64_t p = parse_u64(text);
        return {p, p};
    }
    return {parse_u64(text.substr(0, dots)), parse_u64(text.substr(dots + 2))};
}

Invocation parse_config(const std::vector<std::string>& args, const Environment& env, const Catalog& catalog) {
    CLI::App app{"Exact verification of Wolstenholme-type binomial congruences modulo prime powers", "congrlab"};
    app.require_subcommand(0, 1);
    app.set_help_all_flag("--help-all");

    std::string primes;
    std::string format = "text";
    std::string output;
    std::vector<std::string> alpha_raw;
    std::vector<std::string> case_raw;
    std::string single_p;
    std::string workers_raw;
    bool tightness = false;

    CLI::App* verify = app.add_subcommand("verify", "Check one case at one prime");
    verify->add_option("--case", case_raw, "Catalog id")->required();
    verify->add_option("--p", single_p, "Odd prime")->required();
    verify->add_option("--alpha", alpha_raw, "p-integer alpha(s), e.g. 2 or 1/2; comma separated or repeated");
    verify->add_option("--format", format, "text | json | csv");
    verify->add_option("-o,--output", output, "Output file (default: stdout)");
    verify->add_flag("--tightness", tightness, "Compare one power beyond the stated modulus");

    CLI::App* scan = app.add_subcommand("scan", "Sweep catalog cases over a prime range and alpha set");
    scan->add_option("--primes", primes, "Prime range a..b (default 3..499)");
    scan->add_option("--alpha", alpha_raw, "alpha values (default: standard sweep)");
    scan->add_option("--case", case_raw, "Catalog ids (default: all)");
    scan->add_option("--format", format, "text | json | csv");
    scan->add_option("-o,--output", output, "Output file (default: stdout)");
    scan->add_option("--workers", workers_raw, "Worker threads (default: CONGRLAB_WORKERS or hardware)");
    scan->add_flag("--tightness", tightness, "Compare one power beyond the stated modulus");

    CLI::App* lemmas = app.add_subcommand("lemmas", "Run the harmonic, power-sum and Bernoulli lemma suites");
    lemmas->add_option("--primes", primes, "Prime range a..b (default 3..199)");
    lemmas->add_option("--suite,--case", case_raw, "Suites: H, reflection, lemma3, lemma4, newton, lemma2");
    lemmas->add_option("--format", format, "text | json | csv");
    lemmas->add_option("-o,--output", output, "Output file (default: stdout)");
    lemmas->add_option("--workers", workers_raw, "Worker threads");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        return {Command::Help, {}, app.help()};
    } catch (const CLI::CallForAllHelp&) {
        return {Command::Help, {}, app.help("", CLI::AppFormatMode::All)};
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    Invocation inv;
    std::vector<std::string> problems;
    ScanConfig& cfg = inv.config;
    cfg.workers = default_workers(env, problems);

    if (verify->parsed()) {
        inv.command = Command::Verify;
    } else if (scan->parsed()) {
        inv.command = Command::Scan;
    } else if (lemmas->parsed()) {
        inv.command = Command::Lemmas;
        cfg.mode = ScanMode::Lemmas;
        cfg.prime_max = 199;
        cfg.alphas.clear();
    } else {
        return {Command::Help, {}, app.help()};
    }

    try {
        cfg.format = parse_format(format);
    } catch (const UsageError& e) {
        problems.emplace_back(e.what());
    }
    cfg.output_path = output;
    cfg.tightness = tightness;

    if (!workers_raw.empty()) {
        try {
            const std::uint64_t w = parse_u64(workers_raw);
            if (w == 0) throw UsageError("");
            cfg.workers = static_cast<unsigned>(w);
        } catch (const UsageError&) {
            problems.push_back("--workers: expected a positive integer, got '" + workers_raw + "'");
        }
    }

    if (inv.command == Command::Verify) {
        try {
            const std::uint64_t p = parse_u64(single_p);
            if (p < 3 || !is_prime(p)) problems.push_back("--p: " + single_p + " is not an odd prime");
            cfg.prime_min = cfg.prime_max = p;
        } catch (const UsageError& e) {
            problems.push_back(std::string("--p: ") + e.what());
        }
    } else if (!primes.empty()) {
        try {
            const auto [lo, hi] = parse_prime_range(primes);
            cfg.prime_min = lo;
            cfg.prime_max = hi;
        } catch (const UsageError& e) {
            problems.push_back(std::string("--primes: ") + e.what());
        }
    }
    if (cfg.prime_min < 3) problems.push_back("--primes: lower bound must be at least 3");
    if (cfg.prime_max < cfg.prime_min) problems.push_back("--primes: upper bound below lower bound");

    cfg.cases = split_list(case_raw);
    for (const auto& id : cfg.cases) {
        const bool known = inv.command == Command::Lemmas
                               ? std::find(lemma_suites().begin(), lemma_suites().end(), id) != lemma_suites().end()
                               : find_case(catalog, id) != nullptr;
        if (!known) problems.push_back("--case: unknown id '" + id + "'");
    }
    if (inv.command == Command::Verify && cfg.cases.size() != 1) {
        problems.push_back("--case: verify takes exactly one case id");
    }

    if (inv.command != Command::Lemmas && !alpha_raw.empty()) {
        cfg.alphas.clear();
        for (const auto& a : split_list(alpha_raw)) {
            try {
                cfg.alphas.push_back(PIntegerRational::parse(a));
            } catch (const congrlab::Error&) {
                problems.push_back("--alpha: cannot parse '" + a + "' as a rational");
            }
        }
    }

    if (!problems.empty()) {
        std::string msg;
        for (const auto& p : problems) msg += (msg.empty() ? "" : "\n") + p;
        throw UsageError(msg);
    }
    return inv;
}

int run(const std::vector<std::string>& args, const Environment& env, std::ostream& out, std::ostream& err,
        const Catalog& catalog) {
    Invocation inv;
    try {
        inv = parse_config(args, env, catalog);
    } catch (const UsageError& e) {
        std::istringstream lines(e.what());
        std::string line;
        while (std::getline(lines, line)) err << "congrlab: " << line << '\n';
        return 2;
    }
    if (inv.command == Command::Help) {
        out << inv.help_text;
        return 0;
    }

    try {
        const ScanReport report = run_scan(inv.config, catalog);
        const std::string bytes = emit_report(report, inv.config.format);
        if (inv.config.output_path.empty()) {
            out << bytes;
        } else {
            std::ofstream f(inv.config.output_path, std::ios::binary | std::ios::trunc);
            if (!f) throw IoError("cannot open '" + inv.config.output_path + "' for writing");
            f << bytes;
            f.flush();
            if (!f) throw IoError("failed writing '" + inv.config.output_path + "'");
        }
        return report.has_failures() ? 1 : 0;
    } catch (const IoError& e) {
        err << "congrlab: " << e.what() << '\n';
        return 2;
    } catch (const congrlab::Error& e) {
        err << "congrlab: " << e.what() << '\n';
        return 2;
    }
}

} // namespace congrlab::cli
