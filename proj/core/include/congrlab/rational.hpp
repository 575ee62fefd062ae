#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace congrlab {

// Exact rational number, always kept in lowest terms with a positive
// denominator. Backed by GMP's mpq.
class ExactRational {
public:
    ExactRational() = default;
    ExactRational(long v) : q_(v) {}
    explicit ExactRational(const mpz_class& v) : q_(v) {}
    ExactRational(const mpz_class& num, const mpz_class& den);
    ExactRational(long num, long den);
    explicit ExactRational(mpq_class q);

    // Accepts "a", "-a", "a/b" with optional surrounding whitespace.
    static ExactRational parse(std::string_view text);

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    ExactRational pow(unsigned e) const;

    // "a" for integers, "a/b" otherwise.
    std::string to_string() const;

    ExactRational& operator+=(const ExactRational& o);
    ExactRational& operator-=(const ExactRational& o);
    ExactRational& operator*=(const ExactRational& o);
    ExactRational& operator/=(const ExactRational& o);

    friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
    friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
    friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
    friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }
    ExactRational operator-() const;

    friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b);

private:
    mpq_class q_;
};

// Named forms of the field operations, for call sites that read better
// without operators.
inline ExactRational q_add(const ExactRational& a, const ExactRational& b) { return a + b; }
inline ExactRational q_mul(const ExactRational& a, const ExactRational& b) { return a * b; }
inline ExactRational q_div(const ExactRational& a, const ExactRational& b) { return a / b; }
inline ExactRational q_neg(const ExactRational& a) { return -a; }

// A rational that is meant to be reduced into Z/p^m for several primes p.
// Coprimality of the denominator with p is only checked at reduction time.
class PIntegerRational {
public:
    PIntegerRational() = default;
    PIntegerRational(long v) : value_(v) {}
    PIntegerRational(long num, long den) : value_(num, den) {}
    explicit PIntegerRational(ExactRational v) : value_(std::move(v)) {}

    static PIntegerRational parse(std::string_view text) {
        return PIntegerRational(ExactRational::parse(text));
    }

    const ExactRational& value() const { return value_; }
    const mpz_class& num() const { return value_.num(); }
    const mpz_class& den() const { return value_.den(); }

    // True when p does not divide the denominator.
    bool is_p_integer(const mpz_class& p) const;

    std::string to_string() const { return value_.to_string(); }

    friend bool operator==(const PIntegerRational&, const PIntegerRational&) = default;

private:
    ExactRational value_;
};

// p-adic valuation of a nonzero rational; nullopt for zero.
std::optional<long> padic_valuation(const ExactRational& q, const mpz_class& p);

// Exact binomial coefficient C(top, k) for rational top and integer k >= 0.
ExactRational rational_binomial(const ExactRational& top, unsigned long k);

} // namespace congrlab
