#include "congrlab/theorem.hpp"

#include "congrlab/binomial.hpp"
#include "congrlab/errors.hpp"

namespace congrlab {

unsigned theorem_exponent(std::uint64_t p) { return p == 7 ? 6 : 7; }

ExactRational theorem_coefficient_h1(const ExactRational& a) {
    const ExactRational one(1);
    return -(a * (a - one) * (a * a - a - one));
}

ExactRational theorem_coefficient_h2(const ExactRational& a) {
    const ExactRational am1 = a - ExactRational(1);
    return a * a * am1 * am1;
}

Residue theorem1_rhs(const PIntegerRational& alpha, const HarmonicTable& table) {
    const PrimePowerModulus& modulus = table.modulus();
    const Residue pr(modulus, modulus.p());
    const Residue c1 = residue_of_rational(theorem_coefficient_h1(alpha.value()), modulus);
    const Residue c2 = residue_of_rational(theorem_coefficient_h2(alpha.value()), modulus);
    return Residue::one(modulus) + c1 * pr * table[1] + c2 * pr * pr * table[2];
}

Residue theorem1_rhs(const PIntegerRational& alpha, const PrimePowerModulus& modulus) {
    // Reject non-p-integers before paying for the table.
    (void)residue_of_rational(alpha, modulus);
    return theorem1_rhs(alpha, HarmonicTable(modulus));
}

ExactRational theorem1_rhs_exact(const PIntegerRational& alpha, std::uint64_t p) {
    const std::vector<ExactRational> h = exact_harmonic_numbers(p);
    const ExactRational pp(static_cast<long>(p));
    return ExactRational(1) + theorem_coefficient_h1(alpha.value()) * pp * h[1] +
           theorem_coefficient_h2(alpha.value()) * pp * pp * h[2];
}

ProofCoefficients proof_coefficients(const ExactRational& alpha) {
    ProofCoefficients c;
    const ExactRational a2 = alpha * alpha;
    const ExactRational a3 = a2 * alpha;
    const ExactRational a4 = a3 * alpha;
    c.lambda = a4 - ExactRational(2) * a3;
    c.mu = a4 - a3;
    c.a[0] = ExactRational(1);
    c.a[1] = -alpha - c.lambda;
    c.a[2] = a2 + c.lambda;
    c.a[3] = -a3 - c.lambda + c.mu;
    c.a[4] = a4 + c.lambda - ExactRational(2) * c.mu;
    return c;
}

P7Residual p7_residual(const PIntegerRational& alpha) {
    if (!alpha.is_p_integer(mpz_class(7))) {
        throw NotPInteger(alpha.to_string() + " is not a 7-integer");
    }
    P7Residual r;
    r.difference = binom_exact_oracle(alpha, 7) - theorem1_rhs_exact(alpha, 7);
    const ExactRational& a = alpha.value();
    const ExactRational am1 = a - ExactRational(1);
    mpz_class seven6;
    mpz_ui_pow_ui(seven6.get_mpz_t(), 7, 6);
    r.predicted = a.pow(3) * am1.pow(3) * ExactRational(seven6) / ExactRational(720);
    r.matches = r.difference == r.predicted;
    r.valuation = padic_valuation(r.difference, mpz_class(7));
    r.vanishes_mod_7_6 = !r.valuation || *r.valuation >= 6;
    r.sharp = r.valuation && *r.valuation == 6;
    return r;
}

} // namespace congrlab
