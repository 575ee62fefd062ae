#pragma once

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "congrlab/catalog.hpp"
#include "congrlab/scan.hpp"

namespace congrlab::cli {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Environment = std::map<std::string, std::string>;

enum class Command { Verify, Scan, Lemmas, Help };

struct Invocation {
    Command command = Command::Help;
    ScanConfig config;
    std::string help_text;
};

// args excludes the program name. Throws UsageError.
Invocation parse_config(const std::vector<std::string>& args, const Environment& env,
                        const Catalog& catalog = default_catalog());

// Exit status: 0 when nothing failed, 1 when any verdict failed, 2 on a
// usage or I/O error.
int run(const std::vector<std::string>& args, const Environment& env, std::ostream& out, std::ostream& err,
        const Catalog& catalog = default_catalog());

// Parses "a..b" or "a".
std::pair<std::uint64_t, std::uint64_t> parse_prime_range(const std::string& text);

} // namespace congrlab::cli
