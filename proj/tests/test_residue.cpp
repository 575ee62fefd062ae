#include <gtest/gtest.h>

#include <random>

#include "congrlab/errors.hpp"
#include "congrlab/primes.hpp"
#include "congrlab/rational.hpp"
#include "congrlab/residue.hpp"
#include "oracles.hpp"

using namespace congrlab;

TEST(ExactRational, Arithmetic) {
    EXPECT_EQ(q_add(ExactRational(1, 2), ExactRational(1, 3)), ExactRational(5, 6));
    ExactRational h5 = 0, h7 = 0;
    for (long k = 1; k <= 4; ++k) h5 += ExactRational(1, k);
    for (long k = 1; k <= 6; ++k) h7 += ExactRational(1, k);
    EXPECT_EQ(h5, ExactRational(25, 12));
    EXPECT_EQ(h7, ExactRational(49, 20));
    EXPECT_EQ(q_mul(ExactRational(2, 3), ExactRational(3, 4)), ExactRational(1, 2));
    EXPECT_EQ(q_div(ExactRational(1, 2), ExactRational(1, 4)), ExactRational(2));
    EXPECT_EQ(q_neg(ExactRational(3, 5)), ExactRational(-3, 5));
}

TEST(ExactRational, CanonicalForm) {
    const ExactRational q(6, -4);
    EXPECT_EQ(q.num(), -3);
    EXPECT_EQ(q.den(), 2);
    EXPECT_EQ(q.to_string(), "-3/2");
    EXPECT_EQ(ExactRational(8, 4).to_string(), "2");
    EXPECT_EQ(ExactRational::parse(" 10/-4 "), ExactRational(-5, 2));
    EXPECT_EQ(ExactRational::parse("-7"), ExactRational(-7));
}

TEST(ExactRational, Errors) {
    EXPECT_THROW(ExactRational(1, 0), DivisionByZero);
    EXPECT_THROW(q_div(ExactRational(1), ExactRational(0)), DivisionByZero);
    EXPECT_THROW(ExactRational::parse("1/0"), DivisionByZero);
    EXPECT_THROW(ExactRational::parse("abc"), ParseError);
    EXPECT_THROW(ExactRational::parse(""), ParseError);
}

TEST(ExactRational, ValuationAndBinomial) {
    EXPECT_EQ(padic_valuation(ExactRational(250), mpz_class(5)), 3);
    EXPECT_EQ(padic_valuation(ExactRational(1, 90), mpz_class(3)), -2);
    EXPECT_FALSE(padic_valuation(ExactRational(0), mpz_class(5)).has_value());
    EXPECT_EQ(rational_binomial(ExactRational(3, 2), 4), ExactRational(3, 128));
    EXPECT_EQ(rational_binomial(ExactRational(9), 4), ExactRational(126));
}

TEST(Primes, AgreesWithTrialDivision) {
    for (std::uint64_t n = 0; n < 100000; ++n) {
        ASSERT_EQ(is_prime(n), oracle::trial_division_prime(n)) << n;
    }
    // Carmichael numbers and strong pseudoprimes to small bases.
    for (std::uint64_t n : {561ULL, 1105ULL, 1729ULL, 2047ULL, 3215031751ULL, 25326001ULL}) {
        EXPECT_FALSE(is_prime(n)) << n;
    }
    EXPECT_TRUE(is_prime(std::uint64_t{2305843009213693951ULL})); // 2^61 - 1
    const auto odd = odd_primes_in(1, 30);
    EXPECT_EQ(odd, (std::vector<std::uint64_t>{3, 5, 7, 11, 13, 17, 19, 23, 29}));
}

TEST(PrimePowerModulus, Validation) {
    EXPECT_THROW(PrimePowerModulus(std::uint64_t{9}, 2), InvalidModulus);
    EXPECT_THROW(PrimePowerModulus(std::uint64_t{2}, 2), InvalidModulus);
    EXPECT_THROW(PrimePowerModulus(std::uint64_t{5}, 0), InvalidModulus);
    const PrimePowerModulus m(std::uint64_t{5}, 3);
    EXPECT_EQ(m.value(), 125);
    EXPECT_EQ(m.power(2), 25);
    EXPECT_EQ(m.with_exponent(7).value(), 78125);
}

TEST(Residue, Examples) {
    const PrimePowerModulus m53(std::uint64_t{5}, 3);
    EXPECT_EQ(residue_of_rational(ExactRational(1), m53).value(), 1);
    EXPECT_EQ(residue_of_rational(PIntegerRational(1, 2), PrimePowerModulus(std::uint64_t{7}, 1)).value(), 4);
    EXPECT_EQ(residue_of_rational(PIntegerRational(25, 12), PrimePowerModulus(std::uint64_t{5}, 2)).value(), 0);

    EXPECT_EQ(inv(Residue(m53, 4L)).value(), 94);
    EXPECT_EQ(Residue(m53, 4L).pow(4UL).value(), 6);
    const Residue a(m53, 77L);
    EXPECT_EQ(mul(a, inv(a)), Residue::one(m53));
    EXPECT_EQ(Residue(m53, -1L).value(), 124);
    EXPECT_EQ(neg(Residue(m53, 3L)).value(), 122);
    EXPECT_EQ(sub(Residue(m53, 3L), Residue(m53, 5L)).value(), 123);
}

TEST(Residue, Errors) {
    const PrimePowerModulus m53(std::uint64_t{5}, 3);
    const PrimePowerModulus m72(std::uint64_t{7}, 2);
    EXPECT_THROW(inv(Residue(m53, 10L)), NonUnit);
    EXPECT_THROW(inv(Residue::zero(m53)), NonUnit);
    EXPECT_THROW(add(Residue(m53, 1L), Residue(m72, 1L)), ModulusMismatch);
    EXPECT_THROW(mul(Residue(m53, 1L), Residue(m53.with_exponent(2), 1L)), ModulusMismatch);
    EXPECT_THROW((void)(Residue(m53, 1L) == Residue(m72, 1L)), ModulusMismatch);
    EXPECT_THROW(valuation_of_difference(Residue(m53, 1L), Residue(m72, 1L)), ModulusMismatch);
    EXPECT_THROW(residue_of_rational(PIntegerRational(1, 7), PrimePowerModulus(std::uint64_t{7}, 3)), NotPInteger);
}

TEST(Residue, Valuation) {
    const PrimePowerModulus m57(std::uint64_t{5}, 7);
    const Valuation same = valuation_of_difference(Residue(m57, 9L), Residue(m57, 9L));
    EXPECT_TRUE(same.at_least);
    EXPECT_EQ(same.to_string(), ">=7");
    EXPECT_EQ(valuation_of_difference(Residue(m57, 126L), Residue(m57, 1L)).to_string(), "3");
    EXPECT_EQ(valuation_of_difference(Residue(m57, 256L), Residue(m57, 6L)).to_string(), "3");
    EXPECT_EQ(valuation_of_difference(Residue(m57, 2L), Residue(m57, 1L)).to_string(), "0");
}

namespace {

const std::vector<PrimePowerModulus>& property_moduli() {
    static const std::vector<PrimePowerModulus> m = {
        PrimePowerModulus(std::uint64_t{3}, 1), PrimePowerModulus(std::uint64_t{5}, 3),
        PrimePowerModulus(std::uint64_t{7}, 7), PrimePowerModulus(std::uint64_t{499}, 7),
        PrimePowerModulus(std::uint64_t{10007}, 4)};
    return m;
}

mpz_class random_below(std::mt19937_64& rng, const mpz_class& n) {
    // Concatenate 64-bit words, then reduce; the slight bias is irrelevant here.
    mpz_class r = 0;
    for (int i = 0; i < 4; ++i) {
        r <<= 64;
        r += mpz_class(std::to_string(rng()));
    }
    return r % n;
}

} // namespace

TEST(ResidueProperty, InverseOfUnits) {
    std::mt19937_64 rng(20240501);
    for (const auto& m : property_moduli()) {
        for (int t = 0; t < 10000; ++t) {
            mpz_class v = random_below(rng, m.value());
            if (mpz_divisible_p(v.get_mpz_t(), m.p().get_mpz_t())) v += 1;
            const Residue a(m, v);
            ASSERT_TRUE(a.is_unit());
            const Residue ai = inv(a);
            ASSERT_EQ(mul(a, ai), Residue::one(m));
            ASSERT_EQ(inv(ai), a);
            ASSERT_GE(ai.value(), 0);
            ASSERT_LT(ai.value(), m.value());
        }
    }
}

TEST(ResidueProperty, InverseMatchesExtendedEuclid) {
    std::mt19937_64 rng(7);
    for (std::int64_t p : {3, 5, 7, 11, 13, 31, 97}) {
        const PrimePowerModulus m(static_cast<std::uint64_t>(p), 3);
        const std::int64_t n = p * p * p;
        for (int t = 0; t < 2000; ++t) {
            const std::int64_t v = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n));
            if (v % p == 0) continue;
            ASSERT_EQ(inv(Residue(m, v)).value(), oracle::inverse_mod(v, n)) << v << " mod " << n;
        }
    }
}

TEST(ResidueProperty, ReductionIsHomomorphism) {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> num(-100000, 100000), den(1, 5000);
    for (const auto& m : property_moduli()) {
        const unsigned long p = m.p().get_ui();
        for (int t = 0; t < 10000; ++t) {
            long d1 = den(rng), d2 = den(rng);
            if (d1 % static_cast<long>(p) == 0) ++d1;
            if (d2 % static_cast<long>(p) == 0) ++d2;
            const ExactRational q1(num(rng), d1), q2(num(rng), d2);
            const Residue r1 = residue_of_rational(q1, m), r2 = residue_of_rational(q2, m);
            ASSERT_EQ(residue_of_rational(q1 + q2, m), r1 + r2);
            ASSERT_EQ(residue_of_rational(q1 * q2, m), r1 * r2);
            ASSERT_EQ(residue_of_rational(q1 - q2, m), r1 - r2);
            ASSERT_EQ(residue_of_rational(-q1, m), -r1);
            // Independent reduction path.
            ASSERT_EQ(r1.value(), oracle::reduce(q1.raw(), m.value()));
        }
    }
}

TEST(ResidueProperty, CanonicalForm) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> any(-1000000000L, 1000000000L);
    for (const auto& m : property_moduli()) {
        for (int t = 0; t < 10000; ++t) {
            const Residue a(m, any(rng)), b(m, any(rng));
            for (const Residue& r : {a, b, a + b, a - b, a * b, -a, a.pow(5UL)}) {
                ASSERT_GE(r.value(), 0);
                ASSERT_LT(r.value(), m.value());
            }
        }
    }
}

TEST(ResidueProperty, ReductionCompatibility) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 999);
    for (const auto& m : property_moduli()) {
        const long p = static_cast<long>(m.p().get_ui());
        for (int t = 0; t < 10000; ++t) {
            long d = den(rng);
            if (d % p == 0) ++d;
            const ExactRational q(num(rng), d);
            const Residue full = residue_of_rational(q, m);
            for (unsigned j = 1; j < m.exponent(); ++j) {
                ASSERT_EQ(full.reduce(j), residue_of_rational(q, m.with_exponent(j)));
            }
        }
    }
}
