#pragma once

#include <cstdint>

#include "congrlab/harmonic.hpp"
#include "congrlab/rational.hpp"
#include "congrlab/residue.hpp"
#include "congrlab/verdict.hpp"

namespace congrlab {

// C(alpha p - 1, p - 1) = prod_{k=1}^{p-1} (alpha p - k) / k in Z/p^m.
// Throws NotPInteger when p divides alpha's denominator.
Residue binom_alpha_mod(const PIntegerRational& alpha, const PrimePowerModulus& modulus);

// Same value through the expansion sum_{k=0}^{p-1} (-alpha)^k H_k p^k.
Residue binom_alpha_mod_expansion(const PIntegerRational& alpha, const HarmonicTable& table);

// Exact rational C(alpha p - 1, p - 1). Integer alpha >= 1 goes through
// GMP's integer binomial; everything else through the rational product.
ExactRational binom_exact_oracle(const PIntegerRational& alpha, std::uint64_t p);

// (-1)^{(p-1)/2} C(p-1, (p-1)/2) reduced from the exact integer.
Residue central_binomial_direct(const PrimePowerModulus& modulus);

// The same quantity as 4^{p-1} C(p/2 - 1, p - 1).
Residue central_binomial_transfer(const PrimePowerModulus& modulus);

// Exact identity (-1)^n C(2n, n) = 16^n C(n - 1/2, 2n).
bool central_binomial_identity_holds(unsigned long n);

// Verdicts for the exact identity at n, and for the agreement of the two
// central-binomial paths at prime p (exponent m).
Verdict central_binomial_transfer_check(unsigned long n);
Verdict central_binomial_paths_check(std::uint64_t p, unsigned exponent);

} // namespace congrlab
