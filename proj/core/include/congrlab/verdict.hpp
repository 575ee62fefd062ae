#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "congrlab/residue.hpp"

namespace congrlab {

enum class Status { Pass, Fail, Skip };

std::string to_string(Status s);
Status status_from_string(const std::string& s);

// Outcome of one congruence or lemma instance at one prime.
//
// `lhs`/`rhs` are reported in Z/p^exponent. The valuation may have been
// measured at a higher exponent when a tightness probe was requested; in
// that case `strengthened` records equality one power beyond `exponent`.
struct Verdict {
    std::string case_id;
    std::uint64_t p = 0;
    // Alpha as "a/b", or an index label such as "m=3"; empty when unused.
    std::string param;
    // Secondary sort key inside (case_id, p).
    long order = 0;
    unsigned exponent = 0;
    std::optional<Residue> lhs;
    std::optional<Residue> rhs;
    Status status = Status::Skip;
    // Skip reason, or the applicability branch taken.
    std::string reason;
    std::optional<Valuation> valuation;
    bool strengthened = false;

    bool passed() const { return status == Status::Pass; }
    bool failed() const { return status == Status::Fail; }
};

// Compares two sides given in the same ring Z/p^E with E >= exponent.
// Pass iff they agree mod p^exponent; the valuation is measured mod p^E.
Verdict compare_sides(std::string case_id, std::uint64_t p, std::string param, long order, unsigned exponent,
                      const Residue& lhs, const Residue& rhs, std::string reason = {});

Verdict skipped(std::string case_id, std::uint64_t p, std::string param, long order, std::string reason);

} // namespace congrlab
