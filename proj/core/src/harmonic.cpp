#include "congrlab/harmonic.hpp"

#include <string>

#include "congrlab/errors.hpp"

namespace congrlab {

namespace {

std::uint64_t prime_of(const PrimePowerModulus& modulus) {
    if (!modulus.p().fits_ulong_p()) throw InvalidModulus("prime too large for a harmonic table");
    return modulus.p().get_ui();
}

// 1/k mod p^m for k = 1..p-1; index 0 unused.
std::vector<mpz_class> inverses(const PrimePowerModulus& modulus, std::uint64_t p) {
    std::vector<mpz_class> inv(p);
    for (std::uint64_t k = 1; k < p; ++k) {
        const mpz_class kk(static_cast<unsigned long>(k));
        mpz_invert(inv[k].get_mpz_t(), kk.get_mpz_t(), modulus.value().get_mpz_t());
    }
    return inv;
}

std::string label(const char* name, long v) { return std::string(name) + "=" + std::to_string(v); }

// Both sides reduced to Z/p^j before comparison, so the valuation is capped
// at the stated exponent.
Verdict at(unsigned j, std::string id, std::uint64_t p, std::string param, long order, const Residue& lhs,
           const Residue& rhs, std::string reason = {}) {
    return compare_sides(std::move(id), p, std::move(param), order, j, lhs.reduce(j), rhs.reduce(j),
                         std::move(reason));
}

bool divides(std::uint64_t d, std::uint64_t n) { return n % d == 0; }

} // namespace

HarmonicTable::HarmonicTable(const PrimePowerModulus& modulus) : modulus_(modulus) {
    const std::uint64_t p = prime_of(modulus);
    const mpz_class& n = modulus.value();
    const std::vector<mpz_class> inv = inverses(modulus, p);

    // c <- c * (1 - x/k), one factor at a time.
    std::vector<mpz_class> c(p);
    c[0] = 1;
    mpz_class t;
    for (std::uint64_t k = 1; k < p; ++k) {
        for (std::uint64_t j = k; j >= 1; --j) {
            mpz_mul(t.get_mpz_t(), inv[k].get_mpz_t(), c[j - 1].get_mpz_t());
            mpz_sub(c[j].get_mpz_t(), c[j].get_mpz_t(), t.get_mpz_t());
            mpz_fdiv_r(c[j].get_mpz_t(), c[j].get_mpz_t(), n.get_mpz_t());
        }
    }

    h_.reserve(p);
    for (std::uint64_t k = 0; k < p; ++k) {
        const Residue coeff(modulus, c[k]);
        h_.push_back(k % 2 == 0 ? coeff : -coeff);
    }
}

Residue HarmonicTable::operator[](std::uint64_t k) const {
    if (k >= h_.size()) return Residue::zero(modulus_);
    return h_[k];
}

std::vector<Residue> HarmonicTable::polynomial() const {
    std::vector<Residue> out;
    out.reserve(h_.size());
    for (std::size_t k = 0; k < h_.size(); ++k) out.push_back(k % 2 == 0 ? h_[k] : -h_[k]);
    return out;
}

PowerSumTable::PowerSumTable(const PrimePowerModulus& modulus, unsigned max_exponent) : modulus_(modulus) {
    const std::uint64_t p = prime_of(modulus);
    const mpz_class& n = modulus.value();
    const std::vector<mpz_class> inv = inverses(modulus, p);
    std::vector<mpz_class> cur(inv);
    for (unsigned e = 1; e <= max_exponent; ++e) {
        mpz_class sum = 0;
        for (std::uint64_t k = 1; k < p; ++k) sum += cur[k];
        s_.emplace(e, Residue(modulus, sum));
        for (std::uint64_t k = 1; k < p; ++k) {
            cur[k] *= inv[k];
            mpz_fdiv_r(cur[k].get_mpz_t(), cur[k].get_mpz_t(), n.get_mpz_t());
        }
    }
}

const Residue& PowerSumTable::operator[](unsigned e) const {
    const auto it = s_.find(e);
    if (it == s_.end()) throw Error("power sum exponent " + std::to_string(e) + " not tabulated");
    return it->second;
}

Residue power_sum(const PrimePowerModulus& modulus, unsigned exponent) {
    const std::uint64_t p = prime_of(modulus);
    Residue sum = Residue::zero(modulus);
    for (std::uint64_t k = 1; k < p; ++k) {
        sum += Residue(modulus, mpz_class(static_cast<unsigned long>(k))).inv().pow(static_cast<unsigned long>(exponent));
    }
    return sum;
}

std::vector<ExactRational> exact_harmonic_numbers(std::uint64_t p) {
    std::vector<mpq_class> c(p);
    c[0] = 1;
    for (std::uint64_t k = 1; k < p; ++k) {
        const mpq_class ik(1, static_cast<unsigned long>(k));
        for (std::uint64_t j = k; j >= 1; --j) c[j] += ik * c[j - 1];
    }
    std::vector<ExactRational> out;
    out.reserve(p);
    for (auto& q : c) out.emplace_back(q);
    return out;
}

ExactRational exact_power_sum(std::uint64_t p, unsigned exponent) {
    mpq_class sum = 0;
    for (std::uint64_t k = 1; k < p; ++k) {
        mpz_class d;
        mpz_ui_pow_ui(d.get_mpz_t(), static_cast<unsigned long>(k), exponent);
        sum += mpq_class(mpz_class(1), d);
    }
    return ExactRational(sum);
}

std::vector<Verdict> check_reflection_exact(std::uint64_t p) {
    const unsigned work = static_cast<unsigned>(p) + 2;
    const PrimePowerModulus modulus(p, work);
    const HarmonicTable h(modulus);
    const Residue pr(modulus, modulus.p());
    const Residue half = residue_of(1, 2, modulus);
    std::vector<Verdict> out;

    for (std::uint64_t m = 1; 2 * m - 1 <= p; ++m) {
        const Residue lhs = h[2 * m - 1] - Residue(modulus, static_cast<long>(m)) * pr * h[2 * m];
        Residue sum = Residue::zero(modulus);
        mpz_class binom;
        for (std::uint64_t k = 2 * m + 1; k + 1 <= p; ++k) {
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(2 * m - 1));
            Residue term = Residue(modulus, binom) * Residue(modulus, modulus.power(static_cast<unsigned>(k - 2 * m - 1))) * h[k];
            if (k % 2 == 0) sum += term;
            else sum -= term;
        }
        const Residue rhs = half * Residue(modulus, modulus.power(2)) * sum;
        out.push_back(compare_sides("reflection", p, label("m", static_cast<long>(m)), static_cast<long>(m), work,
                                    lhs, rhs));
    }

    // Coefficient of x^j in P(p - x) is (-1)^j sum_{k>=j} a_k C(k, j) p^{k-j}.
    const std::vector<Residue> a = h.polynomial();
    for (std::uint64_t j = 0; j < p; ++j) {
        Residue coeff = Residue::zero(modulus);
        mpz_class binom;
        for (std::uint64_t k = j; k < p; ++k) {
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(j));
            const auto shift = k - j;
            if (shift >= work) continue;
            coeff += a[k] * Residue(modulus, binom) * Residue(modulus, modulus.power(static_cast<unsigned>(shift)));
        }
        if (j % 2 == 1) coeff = -coeff;
        out.push_back(compare_sides("reflection_poly", p, label("j", static_cast<long>(j)), static_cast<long>(j),
                                    work, a[j], coeff));
    }
    return out;
}

Residue remark_difference(const HarmonicTable& table) {
    const std::uint64_t p = table.prime();
    if (p < 5) throw DomainTooSmall("H_{p-4} does not exist for p = " + std::to_string(p));
    const PrimePowerModulus& modulus = table.modulus();
    const Residue half_index = residue_of(static_cast<long>(p - 3), 2, modulus);
    return table[p - 4] - half_index * Residue(modulus, modulus.p()) * table[p - 3];
}

std::vector<Verdict> check_H_congruences(std::uint64_t p) {
    const PrimePowerModulus modulus(p, 4);
    const HarmonicTable h(modulus);
    const Residue zero = Residue::zero(modulus);
    const Residue pr(modulus, modulus.p());
    std::vector<Verdict> out;

    for (std::uint64_t m = 1; m + 2 <= p; ++m) {
        out.push_back(at(1, "H_mod_p", p, label("m", static_cast<long>(m)), static_cast<long>(m), h[m], zero));
    }

    for (std::uint64_t m = 1; m + 1 <= p; m += 2) {
        if (m == p - 2) {
            out.push_back(skipped("H_mod_p2_odd", p, label("m", static_cast<long>(m)), static_cast<long>(m), "m = p-2"));
            continue;
        }
        out.push_back(at(2, "H_mod_p2_odd", p, label("m", static_cast<long>(m)), static_cast<long>(m), h[m], zero));
    }

    for (std::uint64_t m = 1; 2 * m + 1 <= p; ++m) {
        const Residue diff = h[2 * m - 1] - Residue(modulus, static_cast<long>(m)) * pr * h[2 * m];
        const std::string param = label("m", static_cast<long>(m));
        out.push_back(at(3, "H_pair_mod_p3", p, param, static_cast<long>(m), diff, zero));
        if (2 * m + 1 == p - 2) {
            out.push_back(skipped("H_pair_mod_p4", p, param, static_cast<long>(m), "2m+1 = p-2"));
        } else {
            out.push_back(at(4, "H_pair_mod_p4", p, param, static_cast<long>(m), diff, zero));
        }
    }

    if (p >= 5) {
        const Residue rhs = -residue_of(1, 4, modulus) * Residue(modulus, modulus.power(3));
        out.push_back(at(4, "H_remark", p, "", 0, remark_difference(h), rhs));
    } else {
        out.push_back(skipped("H_remark", p, "", 0, "index p-4 < 1"));
    }

    out.push_back(at(2, "H_p_minus_2", p, "", 0, h[p - 2], residue_of(1, 2, modulus) * pr));
    out.push_back(at(1, "H_p_minus_1", p, "", 0, h[p - 1], -Residue::one(modulus)));
    return out;
}

std::vector<Verdict> check_power_sum_lemma3(std::uint64_t p) {
    const PrimePowerModulus modulus(p, 6);
    const auto top = static_cast<unsigned>(2 * p + 1);
    const PowerSumTable s(modulus, top);
    const Residue zero = Residue::zero(modulus);
    const Residue pr(modulus, modulus.p());
    const Residue p2(modulus, modulus.power(2));
    const Residue p3(modulus, modulus.power(3));
    const Residue half = residue_of(1, 2, modulus);
    const std::uint64_t q = p - 1;
    std::vector<Verdict> out;

    for (unsigned m = 1; m + 2 <= top; ++m) {
        const std::string param = label("m", m);
        const Residue mm(modulus, static_cast<long>(m));

        if (divides(q, m)) {
            out.push_back(at(1, "lem3_item1", p, param, m, s[m], -Residue::one(modulus), "p-1 | m"));
        } else {
            out.push_back(at(1, "lem3_item1", p, param, m, s[m], zero, "p-1 does not divide m"));
        }
        if (m % 2 == 0) continue;

        if (divides(q, m + 1)) {
            out.push_back(at(2, "lem3_item2", p, param, m, s[m], half * mm * pr, "p-1 | m+1"));
        } else {
            out.push_back(at(2, "lem3_item2", p, param, m, s[m], zero, "p-1 does not divide m+1"));
        }

        const Residue pair = Residue(modulus, 2L) * s[m] + mm * pr * s[m + 1];
        out.push_back(at(3, "lem3_item3_p3", p, param, m, pair, zero));
        if (divides(q, m + 3)) {
            const long k = static_cast<long>(m) * (m + 1) * (m + 2);
            out.push_back(at(4, "lem3_item3_p4", p, param, m, pair, -residue_of(k, 12, modulus) * p3, "p-1 | m+3"));
        } else {
            out.push_back(at(4, "lem3_item3_p4", p, param, m, pair, zero, "p-1 does not divide m+3"));
        }

        if (divides(q, m + 5)) {
            out.push_back(skipped("lem3_item4", p, param, m, "p-1 | m+5"));
        } else {
            const Residue triple = s[m] + half * mm * pr * s[m + 1] +
                                   residue_of(static_cast<long>(m) * (m + 1), 12, modulus) * p2 * s[m + 2];
            out.push_back(at(6, "lem3_item4", p, param, m, triple, zero, "p-1 does not divide m+5"));
        }
    }

    const Residue sixth = s[1] + half * pr * s[2];
    if (p >= 11) {
        out.push_back(at(6, "lem3_sixth_p11", p, "", 0, sixth + residue_of(1, 6, modulus) * p2 * s[3], zero));
    } else {
        out.push_back(skipped("lem3_sixth_p11", p, "", 0, "p >= 11"));
    }
    if (p >= 5 && !divides(q, 6)) {
        out.push_back(at(6, "lem3_sixth", p, "", 0, sixth + residue_of(1, 6, modulus) * p2 * s[3], zero,
                         "p-1 does not divide 6"));
    } else {
        out.push_back(skipped("lem3_sixth", p, "", 0, p < 5 ? "p >= 5" : "p-1 | 6"));
    }
    return out;
}

Verdict check_newton_identity(std::uint64_t p) {
    const PrimePowerModulus modulus(p, 7);
    const HarmonicTable h(modulus);
    const PowerSumTable s(modulus, 2);
    const Residue rhs = residue_of(1, 2, modulus) * (s[1] * s[1] - s[2]);
    return compare_sides("newton_H2", p, "", 0, 7, h[2], rhs);
}

} // namespace congrlab
