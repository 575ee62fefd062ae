#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "congrlab/rational.hpp"
#include "congrlab/residue.hpp"
#include "congrlab/verdict.hpp"

namespace congrlab {

// Residues of the generalized harmonic numbers H_0..H_{p-1} in Z/p^m, where
// H_k is the k-th elementary symmetric function of 1/1, ..., 1/(p-1).
// H_0 = 1 and H_k = 0 for k >= p.
class HarmonicTable {
public:
    explicit HarmonicTable(const PrimePowerModulus& modulus);

    const PrimePowerModulus& modulus() const { return modulus_; }
    std::uint64_t prime() const { return static_cast<std::uint64_t>(modulus_.p().get_ui()); }

    // H_k; zero for k >= p.
    Residue operator[](std::uint64_t k) const;

    // Coefficients of prod_{k=1}^{p-1} (1 - x/k), i.e. (-1)^k H_k.
    std::vector<Residue> polynomial() const;

private:
    PrimePowerModulus modulus_;
    std::vector<Residue> h_;
};

inline HarmonicTable harmonic_table(const PrimePowerModulus& modulus) { return HarmonicTable(modulus); }

// S_e = sum_{k=1}^{p-1} k^{-e} in Z/p^m for e = 1..max_exponent. Computed
// from inverse powers directly, independent of HarmonicTable.
class PowerSumTable {
public:
    PowerSumTable(const PrimePowerModulus& modulus, unsigned max_exponent);

    const PrimePowerModulus& modulus() const { return modulus_; }
    unsigned max_exponent() const { return static_cast<unsigned>(s_.size()); }
    const Residue& operator[](unsigned e) const;

private:
    PrimePowerModulus modulus_;
    std::map<unsigned, Residue> s_;
};

Residue power_sum(const PrimePowerModulus& modulus, unsigned exponent);

// Exact H_0..H_{p-1} as rationals (O(p^2) rational DP).
std::vector<ExactRational> exact_harmonic_numbers(std::uint64_t p);
ExactRational exact_power_sum(std::uint64_t p, unsigned exponent);

// Reflection identity
//   H_{2m-1} - m p H_{2m} = 1/2 p^2 sum_{k=2m+1}^{p-1} (-1)^k C(k, 2m-1) p^{k-2m-1} H_k
// at working exponent p + 2 for every m with 2m - 1 <= p, plus the
// coefficient-wise identity P(x) = P(p - x) for P(x) = sum (-1)^k H_k x^k.
std::vector<Verdict> check_reflection_exact(std::uint64_t p);

// H_m = 0 mod p (m <= p-2), H_m = 0 mod p^2 (odd m != p-2),
// H_{2m-1} - m p H_{2m} = 0 mod p^4 (2m+1 != p-2) and mod p^3 always,
// H_{p-4} - (p-3)/2 p H_{p-3} = -p^3/4 mod p^4, H_{p-2} = p/2 mod p^2,
// H_{p-1} = -1 mod p.
std::vector<Verdict> check_H_congruences(std::uint64_t p);

// H_{p-4} - (p-3)/2 * p * H_{p-3} in the table's ring. Throws DomainTooSmall
// when p - 4 < 1.
Residue remark_difference(const HarmonicTable& table);

// Congruences for the power sums S_m over 1 <= m <= 2p - 1, plus both
// readings of the m = 1 sixth-power instance (p >= 11, and p - 1 not
// dividing 6).
std::vector<Verdict> check_power_sum_lemma3(std::uint64_t p);

// H_2 = (S_1^2 - S_2) / 2 mod p^7.
Verdict check_newton_identity(std::uint64_t p);

} // namespace congrlab
