#include "congrlab/binomial.hpp"

#include <string>

#include "congrlab/errors.hpp"

namespace congrlab {

namespace {

std::uint64_t prime_of(const PrimePowerModulus& modulus) {
    if (!modulus.p().fits_ulong_p()) throw InvalidModulus("prime too large for a product binomial");
    return modulus.p().get_ui();
}

} // namespace

Residue binom_alpha_mod(const PIntegerRational& alpha, const PrimePowerModulus& modulus) {
    const std::uint64_t p = prime_of(modulus);
    const Residue ap = residue_of_rational(alpha, modulus) * Residue(modulus, modulus.p());
    const mpz_class& n = modulus.value();

    // Accumulate numerator and denominator separately; one inversion.
    mpz_class num = 1;
    mpz_class den = 1;
    mpz_class t;
    for (std::uint64_t k = 1; k < p; ++k) {
        t = ap.value() - static_cast<unsigned long>(k);
        num *= t;
        mpz_fdiv_r(num.get_mpz_t(), num.get_mpz_t(), n.get_mpz_t());
        den *= static_cast<unsigned long>(k);
        mpz_fdiv_r(den.get_mpz_t(), den.get_mpz_t(), n.get_mpz_t());
    }
    return Residue(modulus, num) * Residue(modulus, den).inv();
}

Residue binom_alpha_mod_expansion(const PIntegerRational& alpha, const HarmonicTable& table) {
    const PrimePowerModulus& modulus = table.modulus();
    const std::uint64_t p = table.prime();
    const Residue x = -residue_of_rational(alpha, modulus) * Residue(modulus, modulus.p());
    Residue sum = Residue::zero(modulus);
    Residue xk = Residue::one(modulus);
    for (std::uint64_t k = 0; k < p; ++k) {
        sum += xk * table[k];
        xk *= x;
        if (xk.is_zero()) break;
    }
    return sum;
}

ExactRational binom_exact_oracle(const PIntegerRational& alpha, std::uint64_t p) {
    const ExactRational& a = alpha.value();
    if (a.is_integer() && a.sign() > 0 && a.num().fits_ulong_p()) {
        mpz_class b;
        const unsigned long top = a.num().get_ui() * static_cast<unsigned long>(p) - 1;
        mpz_bin_uiui(b.get_mpz_t(), top, static_cast<unsigned long>(p - 1));
        return ExactRational(b);
    }
    const mpq_class ap = a.raw() * mpq_class(static_cast<unsigned long>(p));
    mpq_class acc = 1;
    for (std::uint64_t k = 1; k < p; ++k) {
        acc *= ap - mpq_class(static_cast<unsigned long>(k));
        acc /= mpq_class(static_cast<unsigned long>(k));
    }
    return ExactRational(acc);
}

Residue central_binomial_direct(const PrimePowerModulus& modulus) {
    const std::uint64_t p = prime_of(modulus);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(p - 1), static_cast<unsigned long>((p - 1) / 2));
    if (((p - 1) / 2) % 2 == 1) b = -b;
    return Residue(modulus, b);
}

Residue central_binomial_transfer(const PrimePowerModulus& modulus) {
    const std::uint64_t p = prime_of(modulus);
    const Residue four_pow = Residue(modulus, 4L).pow(static_cast<unsigned long>(p - 1));
    return four_pow * binom_alpha_mod(PIntegerRational(1, 2), modulus);
}

bool central_binomial_identity_holds(unsigned long n) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), 2 * n, n);
    if (n % 2 == 1) c = -c;
    const ExactRational lhs(c);
    mpz_class sixteen_n;
    mpz_ui_pow_ui(sixteen_n.get_mpz_t(), 16, n);
    const ExactRational top = ExactRational(static_cast<long>(n)) - ExactRational(1, 2);
    const ExactRational rhs = ExactRational(sixteen_n) * rational_binomial(top, 2 * n);
    return lhs == rhs;
}

Verdict central_binomial_transfer_check(unsigned long n) {
    Verdict v;
    v.case_id = "lemma2_identity";
    v.param = "n=" + std::to_string(n);
    v.order = static_cast<long>(n);
    v.status = central_binomial_identity_holds(n) ? Status::Pass : Status::Fail;
    v.reason = "exact rational equality";
    return v;
}

Verdict central_binomial_paths_check(std::uint64_t p, unsigned exponent) {
    const PrimePowerModulus modulus(p, exponent);
    return compare_sides("lemma2_transfer", p, "", 0, exponent, central_binomial_direct(modulus),
                         central_binomial_transfer(modulus));
}

} // namespace congrlab
