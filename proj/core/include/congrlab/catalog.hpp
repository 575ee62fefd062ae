#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "congrlab/harmonic.hpp"
#include "congrlab/rational.hpp"
#include "congrlab/residue.hpp"
#include "congrlab/verdict.hpp"

namespace congrlab {

// Highest exponent any catalog case needs, plus one for the tightness probe.
inline constexpr unsigned kContextExponent = 8;

// Per-prime quantities shared by every case and alpha at that prime. All
// members are computed on first use in Z/p^8. Not thread-safe: each worker
// owns its contexts.
class PrimeContext {
public:
    explicit PrimeContext(std::uint64_t p, unsigned exponent = kContextExponent);

    std::uint64_t p() const { return p_; }
    const PrimePowerModulus& modulus() const { return modulus_; }

    Residue constant(long num, long den = 1) const { return residue_of(num, den, modulus_); }
    // p^k as a residue.
    Residue p_power(unsigned k) const { return Residue(modulus_, modulus_.power(k)); }

    const HarmonicTable& harmonic();
    // S_1, S_2, S_3.
    const Residue& power_sum(unsigned e);
    // C(2p-1, p-1).
    const Residue& wolstenholme();
    // (-1)^{(p-1)/2} C(p-1, (p-1)/2), reduced from the exact integer.
    const Residue& central();
    // 4^{p-1}
    const Residue& four_pow();
    // B_{p-3}; requires p >= 5.
    const Residue& bernoulli_p3();
    // C(alpha p - 1, p - 1), memoized per alpha.
    const Residue& binom(const PIntegerRational& alpha);

    // The two evaluation paths of C(2p-1, p-1) (product in the ring and
    // exact integer) agree.
    bool wolstenholme_paths_agree();
    // Direct central binomial equals 4^{p-1} C(p/2 - 1, p - 1).
    bool central_paths_agree();

private:
    std::uint64_t p_;
    PrimePowerModulus modulus_;
    std::optional<HarmonicTable> harmonic_;
    std::optional<PowerSumTable> sums_;
    std::optional<Residue> wolstenholme_;
    std::optional<bool> wolstenholme_agree_;
    std::optional<Residue> central_;
    std::optional<bool> central_agree_;
    std::optional<Residue> four_pow_;
    std::optional<Residue> bernoulli_;
    std::map<std::string, Residue> binom_;
};

struct Sides {
    Residue lhs;
    Residue rhs;
    // False when two independent evaluations of a side disagreed.
    bool consistent = true;
};

// One named congruence. `evaluate` returns both sides in the context's ring.
struct CongruenceCase {
    std::string id;
    std::string statement;
    bool uses_alpha = false;
    std::uint64_t min_prime = 3;
    std::function<unsigned(std::uint64_t)> exponent;
    // Further applicability; returns a skip reason when not applicable.
    std::function<std::optional<std::string>(std::uint64_t, const PIntegerRational*)> restriction;
    std::function<Sides(PrimeContext&, const PIntegerRational*)> evaluate;

    // Skip reason for (p, alpha), or nullopt when the case applies.
    std::optional<std::string> skip_reason(std::uint64_t p, const PIntegerRational* alpha) const;
};

using Catalog = std::vector<CongruenceCase>;

// Every congruence the toolkit knows, in a fixed order.
const Catalog& default_catalog();
const CongruenceCase* find_case(const Catalog& catalog, const std::string& id);

// Evaluates one case. With `tightness`, both sides are compared one power
// beyond the stated exponent so that strengthened instances are visible.
// Inapplicable or non-p-integer alpha yields a skipped verdict.
Verdict verify_case(const CongruenceCase& c, PrimeContext& ctx, const PIntegerRational* alpha,
                    bool tightness = false, long order = 0);
Verdict verify_case(const CongruenceCase& c, std::uint64_t p, const std::optional<PIntegerRational>& alpha,
                    bool tightness = false);

// Standard alpha sweep: integers -3..6 and +-1/2, 1/3, 2/3, 3/2, 5/2, 1/4, 7/3.
std::vector<PIntegerRational> standard_alpha_sweep();

} // namespace congrlab
