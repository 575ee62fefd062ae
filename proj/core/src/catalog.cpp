#include "congrlab/catalog.hpp"

#include "congrlab/bernoulli.hpp"
#include "congrlab/binomial.hpp"
#include "congrlab/errors.hpp"
#include "congrlab/theorem.hpp"

namespace congrlab {

PrimeContext::PrimeContext(std::uint64_t p, unsigned exponent) : p_(p), modulus_(p, exponent) {}

const HarmonicTable& PrimeContext::harmonic() {
    if (!harmonic_) harmonic_.emplace(modulus_);
    return *harmonic_;
}

const Residue& PrimeContext::power_sum(unsigned e) {
    if (!sums_) sums_.emplace(modulus_, 3);
    return (*sums_)[e];
}

const Residue& PrimeContext::wolstenholme() {
    if (!wolstenholme_) {
        wolstenholme_ = binom_alpha_mod(PIntegerRational(2), modulus_);
        mpz_class exact;
        mpz_bin_uiui(exact.get_mpz_t(), static_cast<unsigned long>(2 * p_ - 1), static_cast<unsigned long>(p_ - 1));
        wolstenholme_agree_ = *wolstenholme_ == Residue(modulus_, exact);
    }
    return *wolstenholme_;
}

bool PrimeContext::wolstenholme_paths_agree() {
    wolstenholme();
    return *wolstenholme_agree_;
}

const Residue& PrimeContext::central() {
    if (!central_) {
        central_ = central_binomial_direct(modulus_);
        central_agree_ = *central_ == central_binomial_transfer(modulus_);
    }
    return *central_;
}

bool PrimeContext::central_paths_agree() {
    central();
    return *central_agree_;
}

const Residue& PrimeContext::four_pow() {
    if (!four_pow_) four_pow_ = Residue(modulus_, 4L).pow(static_cast<unsigned long>(p_ - 1));
    return *four_pow_;
}

const Residue& PrimeContext::bernoulli_p3() {
    if (!bernoulli_) {
        if (p_ < 5) throw DomainTooSmall("B_{p-3} needs p >= 5");
        bernoulli_ = residue_of_rational(bernoulli_exact(static_cast<unsigned>(p_ - 3)), modulus_);
    }
    return *bernoulli_;
}

const Residue& PrimeContext::binom(const PIntegerRational& alpha) {
    const std::string key = alpha.to_string();
    auto it = binom_.find(key);
    if (it == binom_.end()) it = binom_.emplace(key, binom_alpha_mod(alpha, modulus_)).first;
    return it->second;
}

std::optional<std::string> CongruenceCase::skip_reason(std::uint64_t p, const PIntegerRational* alpha) const {
    if (p < min_prime) return "p >= " + std::to_string(min_prime);
    if (uses_alpha) {
        if (alpha == nullptr) return "alpha required";
        if (!alpha->is_p_integer(mpz_class(static_cast<unsigned long>(p)))) return "NotPInteger";
    }
    if (restriction) return restriction(p, alpha);
    return std::nullopt;
}

namespace {

unsigned fixed(unsigned m, std::uint64_t) { return m; }

std::function<unsigned(std::uint64_t)> exp_of(unsigned m) {
    return [m](std::uint64_t p) { return fixed(m, p); };
}

Residue alpha_res(PrimeContext& ctx, const PIntegerRational* a) { return residue_of_rational(*a, ctx.modulus()); }

// a(a-1) and a^2 (a-1)^2 as residues.
Residue alpha_pair(PrimeContext& ctx, const PIntegerRational* a) {
    const Residue r = alpha_res(ctx, a);
    return r * (r - ctx.constant(1));
}

std::optional<std::string> positive_integer_alpha(std::uint64_t, const PIntegerRational* a) {
    if (!a->value().is_integer() || a->value().sign() <= 0) return "alpha must be an integer n >= 1";
    return std::nullopt;
}

Sides on_w(PrimeContext& ctx, Residue rhs) {
    const Residue& w = ctx.wolstenholme();
    return {w, std::move(rhs), ctx.wolstenholme_paths_agree()};
}

Sides on_central(PrimeContext& ctx, Residue rhs) {
    const Residue& c = ctx.central();
    return {c, std::move(rhs), ctx.central_paths_agree()};
}

Catalog build_catalog() {
    Catalog cat;
    auto add = [&cat](std::string id, std::string statement, bool uses_alpha, std::uint64_t min_prime,
                      std::function<unsigned(std::uint64_t)> exponent,
                      std::function<Sides(PrimeContext&, const PIntegerRational*)> eval,
                      std::function<std::optional<std::string>(std::uint64_t, const PIntegerRational*)> restriction = {}) {
        CongruenceCase c;
        c.id = std::move(id);
        c.statement = std::move(statement);
        c.uses_alpha = uses_alpha;
        c.min_prime = min_prime;
        c.exponent = std::move(exponent);
        c.evaluate = std::move(eval);
        c.restriction = std::move(restriction);
        cat.push_back(std::move(c));
    };

    // Historical congruences for C(2p-1, p-1) and the central binomial.
    add("babbage", "C(2p-1,p-1) = 1 mod p^2", false, 3, exp_of(2),
        [](PrimeContext& ctx, const PIntegerRational*) { return on_w(ctx, ctx.constant(1)); });
    add("wolstenholme_rel70", "C(2p-1,p-1) = 1 mod p^3", false, 5, exp_of(3),
        [](PrimeContext& ctx, const PIntegerRational*) { return on_w(ctx, ctx.constant(1)); });
    add("wolstenholme_harmonic", "S1 = 0 mod p^2", false, 5, exp_of(2),
        [](PrimeContext& ctx, const PIntegerRational*) {
            return Sides{ctx.power_sum(1), ctx.constant(0)};
        });
    add("rel73_H2", "H2 = 0 mod p", false, 5, exp_of(1),
        [](PrimeContext& ctx, const PIntegerRational*) {
            return Sides{ctx.harmonic()[2], ctx.constant(0)};
        });
    add("morley", "(-1)^((p-1)/2) C(p-1,(p-1)/2) = 4^(p-1) mod p^3", false, 5, exp_of(3),
        [](PrimeContext& ctx, const PIntegerRational*) { return on_central(ctx, ctx.four_pow()); });
    add("glaisher1900_p4", "C(2p-1,p-1) = 1 + 2p S1 mod p^4", false, 3, exp_of(4),
        [](PrimeContext& ctx, const PIntegerRational*) {
            return on_w(ctx, ctx.constant(1) + ctx.constant(2) * ctx.p_power(1) * ctx.power_sum(1));
        });
    add("carlitz", "(-1)^((p-1)/2) C(p-1,(p-1)/2) = 4^(p-1) + p^3/12 B(p-3) mod p^4", false, 5, exp_of(4),
        [](PrimeContext& ctx, const PIntegerRational*) {
            return on_central(ctx, ctx.four_pow() + ctx.constant(1, 12) * ctx.p_power(3) * ctx.bernoulli_p3());
        });
    add("mcintosh", "C(2p-1,p-1) = 1 - p^2 S2 mod p^5", false, 7, exp_of(5),
        [](PrimeContext& ctx, const PIntegerRational*) {
            return on_w(ctx, ctx.constant(1) - ctx.p_power(2) * ctx.power_sum(2));
        });
    add("zhao", "C(2p-1,p-1) = 1 + 2p S1 mod p^5", false, 7, exp_of(5),
        [](PrimeContext& ctx, const PIntegerRational*) {
            return on_w(ctx, ctx.constant(1) + ctx.constant(2) * ctx.p_power(1) * ctx.power_sum(1));
        });

    auto tauraso92 = [](PrimeContext& ctx, const PIntegerRational*) {
        return on_w(ctx, ctx.constant(1) + ctx.constant(2) * ctx.p_power(1) * ctx.power_sum(1) +
                             ctx.constant(2, 3) * ctx.p_power(3) * ctx.power_sum(3));
    };
    auto tauraso93 = [](PrimeContext& ctx, const PIntegerRational*) {
        return on_w(ctx, ctx.constant(1) - ctx.constant(2) * ctx.p_power(1) * ctx.power_sum(1) -
                             ctx.constant(2) * ctx.p_power(2) * ctx.power_sum(2));
    };
    add("tauraso92", "C(2p-1,p-1) = 1 + 2p S1 + 2/3 p^3 S3 mod p^6", false, 7, exp_of(6), tauraso92);
    add("tauraso92_p11", "C(2p-1,p-1) = 1 + 2p S1 + 2/3 p^3 S3 mod p^6 (p >= 11)", false, 11, exp_of(6), tauraso92);
    add("tauraso93", "C(2p-1,p-1) = 1 - 2p S1 - 2p^2 S2 mod p^6", false, 7, exp_of(6), tauraso93);
    add("tauraso93_p11", "C(2p-1,p-1) = 1 - 2p S1 - 2p^2 S2 mod p^6 (p >= 11)", false, 11, exp_of(6), tauraso93);

    auto mestrovic = [](PrimeContext& ctx, const PIntegerRational*) {
        const HarmonicTable& h = ctx.harmonic();
        return on_w(ctx, ctx.constant(1) - ctx.constant(2) * ctx.p_power(1) * h[1] +
                             ctx.constant(4) * ctx.p_power(2) * h[2]);
    };
    add("mestrovic80", "C(2p-1,p-1) = 1 - 2p H1 + 4p^2 H2 mod p^7", false, 11, exp_of(7), mestrovic);

    // Consequences of the main congruence.
    add("rel30", "C(2p-1,p-1) = 1 - 2p H1 + 4p^2 H2 mod p^m", false, 3, theorem_exponent, mestrovic);
    add("rel31", "central = 4^(p-1) (1 - 5/16 p H1 + 1/16 p^2 H2) mod p^m", false, 3, theorem_exponent,
        [](PrimeContext& ctx, const PIntegerRational*) {
            const HarmonicTable& h = ctx.harmonic();
            return on_central(ctx, ctx.four_pow() * (ctx.constant(1) - ctx.constant(5, 16) * ctx.p_power(1) * h[1] +
                                                     ctx.constant(1, 16) * ctx.p_power(2) * h[2]));
        });
    add("rel36", "C(2p-1,p-1) = 1 - 2p S1 - 2p^2 S2 mod p^6", false, 3, exp_of(6), tauraso93);
    add("rel37", "central = 4^(p-1) (1 - 5/16 p S1 - 1/32 p^2 S2) mod p^6", false, 3, exp_of(6),
        [](PrimeContext& ctx, const PIntegerRational*) {
            return on_central(ctx, ctx.four_pow() * (ctx.constant(1) -
                                                     ctx.constant(5, 16) * ctx.p_power(1) * ctx.power_sum(1) -
                                                     ctx.constant(1, 32) * ctx.p_power(2) * ctx.power_sum(2)));
        });
    add("rel34", "2p S1 + p^2 S2 = 0 mod p^5", false, 7, exp_of(5),
        [](PrimeContext& ctx, const PIntegerRational*) {
            return Sides{ctx.constant(2) * ctx.p_power(1) * ctx.power_sum(1) + ctx.p_power(2) * ctx.power_sum(2),
                         ctx.constant(0)};
        });
    add("coro_rel6b", "central = 4^(p-1) (1 - 1/4 p S1) mod p^5", false, 7, exp_of(5),
        [](PrimeContext& ctx, const PIntegerRational*) {
            return on_central(ctx, ctx.four_pow() * (ctx.constant(1) - ctx.constant(1, 4) * ctx.p_power(1) * ctx.power_sum(1)));
        });
    add("coro_rel6", "central = 4^(p-1) (1 + 1/8 p^2 S2) mod p^5", false, 7, exp_of(5),
        [](PrimeContext& ctx, const PIntegerRational*) {
            return on_central(ctx, ctx.four_pow() * (ctx.constant(1) + ctx.constant(1, 8) * ctx.p_power(2) * ctx.power_sum(2)));
        });
    add("power_sum_sixth", "S1 + 1/2 p S2 + 1/6 p^2 S3 = 0 mod p^6", false, 11, exp_of(6),
        [](PrimeContext& ctx, const PIntegerRational*) {
            return Sides{ctx.power_sum(1) + ctx.constant(1, 2) * ctx.p_power(1) * ctx.power_sum(2) +
                             ctx.constant(1, 6) * ctx.p_power(2) * ctx.power_sum(3),
                         ctx.constant(0)};
        });
    add("coro_63_alpha_half", "central = 4^(p-1) (1 - 1/4 p S1 + 1/96 p^3 S3) mod p^6", false, 11, exp_of(6),
        [](PrimeContext& ctx, const PIntegerRational*) {
            return on_central(ctx, ctx.four_pow() * (ctx.constant(1) -
                                                     ctx.constant(1, 4) * ctx.p_power(1) * ctx.power_sum(1) +
                                                     ctx.constant(1, 96) * ctx.p_power(3) * ctx.power_sum(3)));
        });

    // Cases parameterized by a p-integer alpha; lhs is C(alpha p - 1, p - 1).
    add("thm1", "C(ap-1,p-1) = 1 - a(a-1)(a^2-a-1) p H1 + a^2(a-1)^2 p^2 H2 mod p^m", true, 3, theorem_exponent,
        [](PrimeContext& ctx, const PIntegerRational* a) {
            return Sides{ctx.binom(*a), theorem1_rhs(*a, ctx.harmonic())};
        });
    add("rel26", "C(ap-1,p-1) = 1 mod p^3", true, 5, exp_of(3),
        [](PrimeContext& ctx, const PIntegerRational* a) { return Sides{ctx.binom(*a), ctx.constant(1)}; });
    add("rel38", "C(ap-1,p-1) = 1 - a(a-1)(a^2-a-1) p S1 - 1/2 a^2(a-1)^2 p^2 S2 mod p^6", true, 3, exp_of(6),
        [](PrimeContext& ctx, const PIntegerRational* a) {
            const Residue c1 = residue_of_rational(theorem_coefficient_h1(a->value()), ctx.modulus());
            const Residue c2 = residue_of_rational(theorem_coefficient_h2(a->value()), ctx.modulus());
            return Sides{ctx.binom(*a), ctx.constant(1) + c1 * ctx.p_power(1) * ctx.power_sum(1) -
                                            ctx.constant(1, 2) * c2 * ctx.p_power(2) * ctx.power_sum(2)};
        });
    add("coro_rel2", "C(ap-1,p-1) = 1 - 1/3 a(a-1) p^3 B(p-3) mod p^4", true, 5, exp_of(4),
        [](PrimeContext& ctx, const PIntegerRational* a) {
            return Sides{ctx.binom(*a), ctx.constant(1) - ctx.constant(1, 3) * alpha_pair(ctx, a) *
                                                             ctx.p_power(3) * ctx.bernoulli_p3()};
        });
    add("coro_rel5b", "C(ap-1,p-1) = 1 + a(a-1) p S1 mod p^5", true, 7, exp_of(5),
        [](PrimeContext& ctx, const PIntegerRational* a) {
            return Sides{ctx.binom(*a), ctx.constant(1) + alpha_pair(ctx, a) * ctx.p_power(1) * ctx.power_sum(1)};
        });
    add("coro_rel5", "C(ap-1,p-1) = 1 - 1/2 a(a-1) p^2 S2 mod p^5", true, 7, exp_of(5),
        [](PrimeContext& ctx, const PIntegerRational* a) {
            return Sides{ctx.binom(*a), ctx.constant(1) - ctx.constant(1, 2) * alpha_pair(ctx, a) * ctx.p_power(2) *
                                                             ctx.power_sum(2)};
        });
    add("coro_63_alpha", "C(ap-1,p-1) = 1 + a(a-1) p S1 + 1/6 a^2(a-1)^2 p^3 S3 mod p^6", true, 11, exp_of(6),
        [](PrimeContext& ctx, const PIntegerRational* a) {
            const Residue pair = alpha_pair(ctx, a);
            return Sides{ctx.binom(*a), ctx.constant(1) + pair * ctx.p_power(1) * ctx.power_sum(1) +
                                            ctx.constant(1, 6) * pair * pair * ctx.p_power(3) * ctx.power_sum(3)};
        });
    add("glaisher_rel74", "C(np-1,p-1) = 1 mod p^3, integer n >= 1", true, 5, exp_of(3),
        [](PrimeContext& ctx, const PIntegerRational* a) { return Sides{ctx.binom(*a), ctx.constant(1)}; },
        positive_integer_alpha);
    add("glaisher_rel3", "C(np-1,p-1) = 1 - 1/3 n(n-1) p^3 B(p-3) mod p^4, integer n >= 1", true, 5, exp_of(4),
        [](PrimeContext& ctx, const PIntegerRational* a) {
            return Sides{ctx.binom(*a), ctx.constant(1) - ctx.constant(1, 3) * alpha_pair(ctx, a) *
                                                             ctx.p_power(3) * ctx.bernoulli_p3()};
        },
        positive_integer_alpha);
    return cat;
}

} // namespace

const Catalog& default_catalog() {
    static const Catalog cat = build_catalog();
    return cat;
}

const CongruenceCase* find_case(const Catalog& catalog, const std::string& id) {
    for (const auto& c : catalog) {
        if (c.id == id) return &c;
    }
    return nullptr;
}

Verdict verify_case(const CongruenceCase& c, PrimeContext& ctx, const PIntegerRational* alpha, bool tightness,
                    long order) {
    const std::string param = c.uses_alpha && alpha != nullptr ? alpha->to_string() : std::string{};
    if (auto reason = c.skip_reason(ctx.p(), alpha)) return skipped(c.id, ctx.p(), param, order, *reason);

    const unsigned m = c.exponent(ctx.p());
    const unsigned probe = tightness ? m + 1 : m;
    if (probe > ctx.modulus().exponent()) throw InvalidModulus("context exponent too small for case " + c.id);

    const Sides sides = c.evaluate(ctx, c.uses_alpha ? alpha : nullptr);
    Verdict v = compare_sides(c.id, ctx.p(), param, order, m, sides.lhs.reduce(probe), sides.rhs.reduce(probe));
    if (!sides.consistent) {
        v.status = Status::Fail;
        v.reason = "independent evaluations of the left side disagree";
    }
    return v;
}

Verdict verify_case(const CongruenceCase& c, std::uint64_t p, const std::optional<PIntegerRational>& alpha,
                    bool tightness) {
    PrimeContext ctx(p);
    return verify_case(c, ctx, alpha ? &*alpha : nullptr, tightness);
}

std::vector<PIntegerRational> standard_alpha_sweep() {
    std::vector<PIntegerRational> out;
    for (long n = -3; n <= 6; ++n) out.emplace_back(n);
    out.emplace_back(1, 2);
    out.emplace_back(-1, 2);
    out.emplace_back(1, 3);
    out.emplace_back(2, 3);
    out.emplace_back(3, 2);
    out.emplace_back(5, 2);
    out.emplace_back(1, 4);
    out.emplace_back(7, 3);
    return out;
}

} // namespace congrlab
