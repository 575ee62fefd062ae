#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace congrlab {

// Deterministic Miller-Rabin (bases 2, 3, 5, 7) below 3'215'031'751;
// GMP's probabilistic test with 30 rounds above that.
bool is_prime(const mpz_class& n);
bool is_prime(std::uint64_t n);

// Odd primes in [lo, hi], ascending. Sieve of Eratosthenes.
std::vector<std::uint64_t> odd_primes_in(std::uint64_t lo, std::uint64_t hi);

} // namespace congrlab
