#pragma once

#include <cstdint>
#include <optional>

#include "congrlab/harmonic.hpp"
#include "congrlab/rational.hpp"
#include "congrlab/residue.hpp"

namespace congrlab {

// Exponent of the main congruence: 7, or 6 at p = 7.
unsigned theorem_exponent(std::uint64_t p);

// 1 - a(a-1)(a^2-a-1) p H_1 + a^2 (a-1)^2 p^2 H_2 in the table's ring.
Residue theorem1_rhs(const PIntegerRational& alpha, const HarmonicTable& table);
Residue theorem1_rhs(const PIntegerRational& alpha, const PrimePowerModulus& modulus);

// The same right-hand side as an exact rational, from exact H_1 and H_2.
ExactRational theorem1_rhs_exact(const PIntegerRational& alpha, std::uint64_t p);

// Coefficients of the truncated expansion after eliminating the H_3 and
// H_4 terms with the alpha = 1 relation (weight lambda) and the
// p^3 H_3 - 2 p^4 H_4 relation (weight mu).
struct ProofCoefficients {
    ExactRational lambda;
    ExactRational mu;
    // A[k] multiplies H_k p^k, k = 0..4.
    ExactRational a[5];
};

ProofCoefficients proof_coefficients(const ExactRational& alpha);

// The two closed forms the eliminated coefficients must reduce to.
ExactRational theorem_coefficient_h1(const ExactRational& alpha); // -a(a-1)(a^2-a-1)
ExactRational theorem_coefficient_h2(const ExactRational& alpha); // a^2 (a-1)^2

// Exact discrepancy of the main congruence at p = 7.
struct P7Residual {
    ExactRational difference;        // C(7a-1, 6) - rhs
    ExactRational predicted;         // a^3 (a-1)^3 7^6 / 720
    bool matches = false;            // difference == predicted
    std::optional<long> valuation;   // 7-adic valuation; nullopt when zero
    bool vanishes_mod_7_6 = false;
    bool sharp = false;              // valuation is exactly 6
};

// Throws NotPInteger when 7 divides alpha's denominator.
P7Residual p7_residual(const PIntegerRational& alpha);

} // namespace congrlab
