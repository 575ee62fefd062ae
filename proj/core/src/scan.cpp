#include "congrlab/scan.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "congrlab/bernoulli.hpp"
#include "congrlab/binomial.hpp"
#include "congrlab/errors.hpp"
#include "congrlab/harmonic.hpp"
#include "congrlab/primes.hpp"

namespace congrlab {

using json = nlohmann::ordered_json;

std::string to_string(OutputFormat f) {
    switch (f) {
    case OutputFormat::Text: return "text";
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
    }
    return "text";
}

const std::vector<std::string>& lemma_suites() {
    static const std::vector<std::string> suites{"H", "reflection", "lemma3", "lemma4", "newton", "lemma2"};
    return suites;
}

std::vector<Verdict> lemma_verdicts(std::uint64_t p, const std::vector<std::string>& suites) {
    std::vector<Verdict> out;
    auto append = [&out](std::vector<Verdict> vs) {
        out.insert(out.end(), std::make_move_iterator(vs.begin()), std::make_move_iterator(vs.end()));
    };
    for (const auto& s : suites) {
        if (s == "H") {
            append(check_H_congruences(p));
        } else if (s == "reflection") {
            append(check_reflection_exact(p));
        } else if (s == "lemma3") {
            append(check_power_sum_lemma3(p));
        } else if (s == "lemma4") {
            append(check_lemma4(p));
        } else if (s == "newton") {
            out.push_back(check_newton_identity(p));
        } else if (s == "lemma2") {
            out.push_back(central_binomial_paths_check(p, 7));
            Verdict id = central_binomial_transfer_check(static_cast<unsigned long>((p - 1) / 2));
            id.p = p;
            out.push_back(std::move(id));
        } else {
            throw Error("unknown lemma suite '" + s + "'");
        }
    }
    return out;
}

namespace {

std::vector<Verdict> congruence_verdicts(std::uint64_t p, const ScanConfig& cfg,
                                         const std::vector<const CongruenceCase*>& cases) {
    std::vector<Verdict> out;
    PrimeContext ctx(p);
    for (const CongruenceCase* c : cases) {
        if (!c->uses_alpha) {
            out.push_back(verify_case(*c, ctx, nullptr, cfg.tightness));
            continue;
        }
        for (std::size_t i = 0; i < cfg.alphas.size(); ++i) {
            out.push_back(verify_case(*c, ctx, &cfg.alphas[i], cfg.tightness, static_cast<long>(i)));
        }
    }
    return out;
}

bool needs_bernoulli(const ScanConfig& cfg, const std::vector<const CongruenceCase*>& cases) {
    if (cfg.mode == ScanMode::Lemmas) {
        return std::find(cfg.cases.begin(), cfg.cases.end(), "lemma4") != cfg.cases.end() || cfg.cases.empty();
    }
    return std::any_of(cases.begin(), cases.end(), [](const CongruenceCase* c) {
        return c->id == "carlitz" || c->id == "coro_rel2" || c->id == "glaisher_rel3";
    });
}

} // namespace

ScanReport run_scan(const ScanConfig& config, const Catalog& catalog) {
    ScanReport report;
    report.config = config;

    std::vector<const CongruenceCase*> cases;
    std::vector<std::string> suites;
    if (config.mode == ScanMode::Congruences) {
        if (config.cases.empty()) {
            for (const auto& c : catalog) cases.push_back(&c);
        } else {
            for (const auto& id : config.cases) {
                const CongruenceCase* c = find_case(catalog, id);
                if (c == nullptr) throw Error("unknown case '" + id + "'");
                cases.push_back(c);
            }
        }
    } else {
        suites = config.cases.empty() ? lemma_suites() : config.cases;
    }

    const std::vector<std::uint64_t> primes = odd_primes_in(config.prime_min, config.prime_max);
    if (needs_bernoulli(config, cases) && !primes.empty() && primes.back() >= 5) {
        warm_bernoulli(static_cast<unsigned>(primes.back() - 3));
    }

    std::vector<std::vector<Verdict>> per_prime(primes.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= primes.size()) return;
            try {
                per_prime[i] = config.mode == ScanMode::Congruences ? congruence_verdicts(primes[i], config, cases)
                                                                    : lemma_verdicts(primes[i], suites);
            } catch (...) {
                const std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(primes.size());
                return;
            }
        }
    };

    const unsigned n = std::max(1U, std::min<unsigned>(config.workers, static_cast<unsigned>(primes.size())));
    if (n == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n);
        for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    for (auto& vs : per_prime) {
        report.records.insert(report.records.end(), std::make_move_iterator(vs.begin()),
                              std::make_move_iterator(vs.end()));
    }
    finalize_report(report);
    return report;
}

void finalize_report(ScanReport& report) {
    std::stable_sort(report.records.begin(), report.records.end(), [](const Verdict& a, const Verdict& b) {
        if (a.case_id != b.case_id) return a.case_id < b.case_id;
        if (a.p != b.p) return a.p < b.p;
        return a.order < b.order;
    });
    report.summary = {};
    report.anomalies.clear();
    for (const auto& v : report.records) {
        switch (v.status) {
        case Status::Pass: ++report.summary.pass; break;
        case Status::Fail: ++report.summary.fail; break;
        case Status::Skip: ++report.summary.skip; break;
        }
        const std::string val = v.valuation ? v.valuation->to_string() : std::string{};
        if (v.failed()) report.anomalies.push_back({v.case_id, v.p, v.param, "fail", val});
        else if (v.strengthened) report.anomalies.push_back({v.case_id, v.p, v.param, "strengthened", val});
    }
}

RecordRow to_row(const Verdict& v) {
    RecordRow r;
    r.case_id = v.case_id;
    r.p = v.p;
    r.param = v.param;
    if (v.status != Status::Skip || v.lhs) {
        r.exponent = v.exponent != 0 ? std::to_string(v.exponent) : std::string{};
    }
    r.lhs = v.lhs ? v.lhs->to_string() : std::string{};
    r.rhs = v.rhs ? v.rhs->to_string() : std::string{};
    r.status = to_string(v.status);
    r.reason = v.reason;
    r.valuation = v.valuation ? v.valuation->to_string() : std::string{};
    return r;
}

namespace {

json nullable(const std::string& s) { return s.empty() ? json(nullptr) : json(s); }

std::string emit_json(const ScanReport& report) {
    const ScanConfig& cfg = report.config;
    json config;
    config["command"] = cfg.mode == ScanMode::Congruences ? "scan" : "lemmas";
    config["prime_min"] = cfg.prime_min;
    config["prime_max"] = cfg.prime_max;
    if (cfg.mode == ScanMode::Congruences) {
        json alphas = json::array();
        for (const auto& a : cfg.alphas) alphas.push_back(a.to_string());
        config["alphas"] = alphas;
    }
    config["cases"] = cfg.cases.empty() ? json::array({"all"}) : json(cfg.cases);
    config["tightness"] = cfg.tightness;

    json records = json::array();
    for (const auto& v : report.records) {
        const RecordRow r = to_row(v);
        json rec;
        rec["case"] = r.case_id;
        rec["p"] = r.p;
        rec["alpha"] = r.param;
        rec["m"] = r.exponent.empty() ? json(nullptr) : json(std::stoul(r.exponent));
        rec["lhs"] = nullable(r.lhs);
        rec["rhs"] = nullable(r.rhs);
        rec["status"] = r.status;
        rec["reason"] = r.reason;
        rec["valuation"] = nullable(r.valuation);
        records.push_back(std::move(rec));
    }

    json anomalies = json::array();
    for (const auto& a : report.anomalies) {
        anomalies.push_back({{"case", a.case_id}, {"p", a.p}, {"alpha", a.param}, {"kind", a.kind},
                             {"valuation", a.valuation}});
    }

    json doc;
    doc["config"] = std::move(config);
    doc["records"] = std::move(records);
    doc["summary"] = {{"pass", report.summary.pass}, {"fail", report.summary.fail}, {"skip", report.summary.skip}};
    doc["anomalies"] = std::move(anomalies);
    return doc.dump(2) + "\n";
}

std::string emit_csv(const ScanReport& report) {
    std::ostringstream os;
    os << "case,p,alpha,m,lhs,rhs,status,valuation\n";
    for (const auto& v : report.records) {
        const RecordRow r = to_row(v);
        os << r.case_id << ',' << r.p << ',' << r.param << ',' << r.exponent << ',' << r.lhs << ',' << r.rhs << ','
           << r.status << ',' << r.valuation << '\n';
    }
    return os.str();
}

std::string emit_text(const ScanReport& report) {
    const std::vector<std::string> header{"case", "p", "alpha", "m", "lhs", "rhs", "status", "valuation", "note"};
    std::vector<std::vector<std::string>> rows;
    rows.reserve(report.records.size());
    for (const auto& v : report.records) {
        const RecordRow r = to_row(v);
        rows.push_back({r.case_id, std::to_string(r.p), r.param, r.exponent, r.lhs, r.rhs, r.status, r.valuation,
                        r.reason});
    }
    std::vector<std::size_t> width(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }

    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& cells) {
        std::string out;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            std::string cell = cells[i];
            if (i + 1 < cells.size()) cell.resize(width[i], ' ');
            out += cell;
            if (i + 1 < cells.size()) out += "  ";
        }
        while (!out.empty() && out.back() == ' ') out.pop_back();
        os << out << '\n';
    };
    line(header);
    for (const auto& row : rows) line(row);
    os << '\n'
       << "summary: " << report.summary.pass << " pass, " << report.summary.fail << " fail, " << report.summary.skip
       << " skip\n";
    if (report.anomalies.empty()) {
        os << "anomalies: none\n";
    } else {
        os << "anomalies:\n";
        for (const auto& a : report.anomalies) {
            os << "  " << a.kind << ' ' << a.case_id << " p=" << a.p;
            if (!a.param.empty()) os << " alpha=" << a.param;
            os << " valuation=" << a.valuation << '\n';
        }
    }
    return os.str();
}

std::string string_or_empty(const json& j) { return j.is_null() ? std::string{} : j.get<std::string>(); }

} // namespace

std::string emit_report(const ScanReport& report, OutputFormat format) {
    switch (format) {
    case OutputFormat::Json: return emit_json(report);
    case OutputFormat::Csv: return emit_csv(report);
    case OutputFormat::Text: return emit_text(report);
    }
    return emit_text(report);
}

ParsedReport parse_json_report(const std::string& text) {
    ParsedReport out;
    try {
        const json doc = json::parse(text);
        for (const auto& rec : doc.at("records")) {
            RecordRow r;
            r.case_id = rec.at("case").get<std::string>();
            r.p = rec.at("p").get<std::uint64_t>();
            r.param = rec.at("alpha").get<std::string>();
            r.exponent = rec.at("m").is_null() ? std::string{} : std::to_string(rec.at("m").get<unsigned>());
            r.lhs = string_or_empty(rec.at("lhs"));
            r.rhs = string_or_empty(rec.at("rhs"));
            r.status = rec.at("status").get<std::string>();
            r.reason = rec.at("reason").get<std::string>();
            r.valuation = string_or_empty(rec.at("valuation"));
            out.records.push_back(std::move(r));
        }
        const auto& s = doc.at("summary");
        out.summary = {s.at("pass").get<std::size_t>(), s.at("fail").get<std::size_t>(),
                       s.at("skip").get<std::size_t>()};
        for (const auto& a : doc.at("anomalies")) {
            out.anomalies.push_back({a.at("case").get<std::string>(), a.at("p").get<std::uint64_t>(),
                                     a.at("alpha").get<std::string>(), a.at("kind").get<std::string>(),
                                     a.at("valuation").get<std::string>()});
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed report: ") + e.what());
    }
    return out;
}

} // namespace congrlab
