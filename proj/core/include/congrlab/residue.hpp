#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "congrlab/rational.hpp"

namespace congrlab {

// The ring Z/p^m for an odd prime p and m >= 1. Immutable; copies share
// the cached powers of p.
class PrimePowerModulus {
public:
    PrimePowerModulus(const mpz_class& p, unsigned exponent);
    PrimePowerModulus(std::uint64_t p, unsigned exponent);

    const mpz_class& p() const { return data_->p; }
    unsigned exponent() const { return data_->exponent; }
    // p^m
    const mpz_class& value() const { return data_->powers.back(); }
    // p^j for 0 <= j <= m
    const mpz_class& power(unsigned j) const;

    // Same prime, different exponent. Skips the primality test.
    PrimePowerModulus with_exponent(unsigned exponent) const;

    std::string to_string() const;

    friend bool operator==(const PrimePowerModulus& a, const PrimePowerModulus& b) {
        return a.data_ == b.data_ || (a.data_->exponent == b.data_->exponent && a.data_->p == b.data_->p);
    }

private:
    struct Data {
        mpz_class p;
        unsigned exponent = 0;
        std::vector<mpz_class> powers;
    };
    struct Trusted {};
    PrimePowerModulus(Trusted, const mpz_class& p, unsigned exponent);

    std::shared_ptr<const Data> data_;
};

// Element of Z/p^m in canonical form 0 <= value < p^m.
class Residue {
public:
    Residue(const PrimePowerModulus& modulus, const mpz_class& v);
    Residue(const PrimePowerModulus& modulus, long v);

    static Residue zero(const PrimePowerModulus& modulus) { return Residue(modulus, 0L); }
    static Residue one(const PrimePowerModulus& modulus) { return Residue(modulus, 1L); }

    const mpz_class& value() const { return value_; }
    const PrimePowerModulus& modulus() const { return modulus_; }

    bool is_zero() const { return value_ == 0; }
    bool is_unit() const;

    Residue inv() const;
    Residue pow(const mpz_class& e) const;
    Residue pow(unsigned long e) const;

    // Image under Z/p^m -> Z/p^j, j <= m.
    Residue reduce(unsigned j) const;

    std::string to_string() const { return value_.get_str(); }

    Residue& operator+=(const Residue& o);
    Residue& operator-=(const Residue& o);
    Residue& operator*=(const Residue& o);

    friend Residue operator+(Residue a, const Residue& b) { return a += b; }
    friend Residue operator-(Residue a, const Residue& b) { return a -= b; }
    friend Residue operator*(Residue a, const Residue& b) { return a *= b; }
    Residue operator-() const;

    // Throws ModulusMismatch when the rings differ.
    friend bool operator==(const Residue& a, const Residue& b);

private:
    struct Canonical {};
    Residue(Canonical, const PrimePowerModulus& modulus, mpz_class v)
        : modulus_(modulus), value_(std::move(v)) {}

    void require_same(const Residue& o) const;

    PrimePowerModulus modulus_;
    mpz_class value_;
};

inline Residue add(const Residue& a, const Residue& b) { return a + b; }
inline Residue sub(const Residue& a, const Residue& b) { return a - b; }
inline Residue mul(const Residue& a, const Residue& b) { return a * b; }
inline Residue neg(const Residue& a) { return -a; }
inline Residue inv(const Residue& a) { return a.inv(); }

// Largest j <= m with p^j | (a - b). `at_least` is set when a == b, in which
// case `value` equals m and the true valuation is only known to be >= m.
struct Valuation {
    unsigned value = 0;
    bool at_least = false;

    // "3" or ">=3"
    std::string to_string() const;
    friend bool operator==(const Valuation&, const Valuation&) = default;
};

Valuation valuation_of_difference(const Residue& a, const Residue& b);

// Image of num/den in Z/p^m. Throws NotPInteger when p | den.
Residue residue_of_rational(const ExactRational& q, const PrimePowerModulus& modulus);
Residue residue_of_rational(const PIntegerRational& q, const PrimePowerModulus& modulus);

// Convenience for small integer constants.
Residue residue_of(long num, long den, const PrimePowerModulus& modulus);

} // namespace congrlab
