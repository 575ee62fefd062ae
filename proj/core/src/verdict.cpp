#include "congrlab/verdict.hpp"

#include "congrlab/errors.hpp"

namespace congrlab {

std::string to_string(Status s) {
    switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skip: return "skip";
    }
    return "skip";
}

Status status_from_string(const std::string& s) {
    if (s == "pass") return Status::Pass;
    if (s == "fail") return Status::Fail;
    if (s == "skip") return Status::Skip;
    throw ParseError("unknown status '" + s + "'");
}

Verdict compare_sides(std::string case_id, std::uint64_t p, std::string param, long order, unsigned exponent,
                      const Residue& lhs, const Residue& rhs, std::string reason) {
    if (!(lhs.modulus() == rhs.modulus())) throw ModulusMismatch("verdict sides live in different rings");
    const unsigned probe = lhs.modulus().exponent();
    if (probe < exponent) throw InvalidModulus("sides computed below the stated exponent");

    Verdict v;
    v.case_id = std::move(case_id);
    v.p = p;
    v.param = std::move(param);
    v.order = order;
    v.exponent = exponent;
    v.reason = std::move(reason);
    v.lhs = lhs.reduce(exponent);
    v.rhs = rhs.reduce(exponent);
    v.status = *v.lhs == *v.rhs ? Status::Pass : Status::Fail;
    v.valuation = valuation_of_difference(lhs, rhs);
    v.strengthened = probe > exponent && v.valuation->at_least;
    return v;
}

Verdict skipped(std::string case_id, std::uint64_t p, std::string param, long order, std::string reason) {
    Verdict v;
    v.case_id = std::move(case_id);
    v.p = p;
    v.param = std::move(param);
    v.order = order;
    v.status = Status::Skip;
    v.reason = std::move(reason);
    return v;
}

} // namespace congrlab
