#include "congrlab/bernoulli.hpp"

#include <mutex>
#include <string>

#include "congrlab/errors.hpp"
#include "congrlab/harmonic.hpp"

namespace congrlab {

BernoulliCache::BernoulliCache() {
    b_.emplace_back(1L);
    b_.emplace_back(-1L, 2L);
}

void BernoulliCache::ensure(unsigned n) {
    mpz_class binom;
    while (b_.size() <= n) {
        const auto idx = static_cast<unsigned long>(b_.size());
        if (idx % 2 == 1) {
            b_.emplace_back(0L);
            continue;
        }
        // (idx+1) B_idx = -sum_{k<idx} C(idx+1, k) B_k; odd k > 1 vanish.
        mpq_class sum = 0;
        for (unsigned long k = 0; k < idx; ++k) {
            if (k > 1 && k % 2 == 1) continue;
            mpz_bin_uiui(binom.get_mpz_t(), idx + 1, k);
            sum += mpq_class(binom) * b_[k].raw();
        }
        sum /= mpq_class(static_cast<long>(idx + 1));
        b_.emplace_back(mpq_class(-sum));
    }
}

const ExactRational& BernoulliCache::at(unsigned n) const {
    if (n >= b_.size()) throw Error("Bernoulli number B_" + std::to_string(n) + " not computed");
    return b_[n];
}

namespace {

std::mutex& shared_mutex() {
    static std::mutex m;
    return m;
}

BernoulliCache& shared_cache() {
    static BernoulliCache cache;
    return cache;
}

} // namespace

ExactRational bernoulli_exact(unsigned n) {
    const std::lock_guard lock(shared_mutex());
    shared_cache().ensure(n);
    return shared_cache().at(n);
}

void warm_bernoulli(unsigned n) {
    const std::lock_guard lock(shared_mutex());
    shared_cache().ensure(n);
}

Residue bernoulli_mod(std::uint64_t p, unsigned n, unsigned j) {
    const PrimePowerModulus modulus(p, j);
    const ExactRational b = bernoulli_exact(n);
    try {
        return residue_of_rational(b, modulus);
    } catch (const NotPInteger&) {
        throw NonPIntegerBernoulli("B_" + std::to_string(n) + " = " + b.to_string() + " is not a " +
                                   std::to_string(p) + "-integer");
    }
}

std::vector<Verdict> check_lemma4(std::uint64_t p) {
    std::vector<Verdict> out;
    if (p < 5) {
        out.push_back(skipped("lem4_S1", p, "", 0, "p >= 5"));
        out.push_back(skipped("lem4_S2", p, "", 0, "p >= 5"));
        return out;
    }
    const PrimePowerModulus modulus(p, 3);
    const PowerSumTable s(modulus, 2);
    const Residue b = residue_of_rational(bernoulli_exact(static_cast<unsigned>(p - 3)), modulus);
    const Residue pr(modulus, modulus.p());

    const Residue rhs1 = -residue_of(1, 3, modulus) * pr * pr * b;
    out.push_back(compare_sides("lem4_S1", p, "", 0, 3, s[1], rhs1));

    const Residue rhs2 = residue_of(2, 3, modulus) * pr * b;
    out.push_back(compare_sides("lem4_S2", p, "", 0, 2, s[2].reduce(2), rhs2.reduce(2)));
    return out;
}

} // namespace congrlab
