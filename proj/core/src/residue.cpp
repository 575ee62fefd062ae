#include "congrlab/residue.hpp"

#include "congrlab/errors.hpp"
#include "congrlab/primes.hpp"

namespace congrlab {

PrimePowerModulus::PrimePowerModulus(const mpz_class& p, unsigned exponent)
    : PrimePowerModulus(Trusted{}, p, exponent) {
    if (p < 3 || !is_prime(p)) throw InvalidModulus("modulus base " + p.get_str() + " is not an odd prime");
}

PrimePowerModulus::PrimePowerModulus(std::uint64_t p, unsigned exponent)
    : PrimePowerModulus(mpz_class(static_cast<unsigned long>(p)), exponent) {}

PrimePowerModulus::PrimePowerModulus(Trusted, const mpz_class& p, unsigned exponent) {
    if (exponent < 1) throw InvalidModulus("modulus exponent must be at least 1");
    auto d = std::make_shared<Data>();
    d->p = p;
    d->exponent = exponent;
    d->powers.reserve(exponent + 1);
    d->powers.emplace_back(1);
    for (unsigned j = 1; j <= exponent; ++j) d->powers.push_back(d->powers.back() * p);
    data_ = std::move(d);
}

const mpz_class& PrimePowerModulus::power(unsigned j) const {
    if (j > data_->exponent) throw InvalidModulus("power exceeds modulus exponent");
    return data_->powers[j];
}

PrimePowerModulus PrimePowerModulus::with_exponent(unsigned exponent) const {
    if (exponent == data_->exponent) return *this;
    return PrimePowerModulus(Trusted{}, data_->p, exponent);
}

std::string PrimePowerModulus::to_string() const {
    return data_->p.get_str() + "^" + std::to_string(data_->exponent);
}

namespace {

mpz_class canonical(const mpz_class& v, const mpz_class& n) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    return r;
}

} // namespace

Residue::Residue(const PrimePowerModulus& modulus, const mpz_class& v)
    : modulus_(modulus), value_(canonical(v, modulus.value())) {}

Residue::Residue(const PrimePowerModulus& modulus, long v) : Residue(modulus, mpz_class(v)) {}

void Residue::require_same(const Residue& o) const {
    if (!(modulus_ == o.modulus_)) {
        throw ModulusMismatch("residues in Z/" + modulus_.to_string() + " and Z/" + o.modulus_.to_string());
    }
}

bool Residue::is_unit() const {
    return mpz_divisible_p(value_.get_mpz_t(), modulus_.p().get_mpz_t()) == 0;
}

Residue Residue::inv() const {
    // mpz_invert runs extended Euclid against the full modulus p^m.
    mpz_class r;
    if (!is_unit() || mpz_invert(r.get_mpz_t(), value_.get_mpz_t(), modulus_.value().get_mpz_t()) == 0) {
        throw NonUnit(value_.get_str() + " is not invertible mod " + modulus_.to_string());
    }
    return Residue(Canonical{}, modulus_, std::move(r));
}

Residue Residue::pow(const mpz_class& e) const {
    if (e < 0) throw Error("negative exponent; use inv() first");
    mpz_class r;
    mpz_powm(r.get_mpz_t(), value_.get_mpz_t(), e.get_mpz_t(), modulus_.value().get_mpz_t());
    return Residue(Canonical{}, modulus_, std::move(r));
}

Residue Residue::pow(unsigned long e) const {
    mpz_class r;
    mpz_powm_ui(r.get_mpz_t(), value_.get_mpz_t(), e, modulus_.value().get_mpz_t());
    return Residue(Canonical{}, modulus_, std::move(r));
}

Residue Residue::reduce(unsigned j) const {
    if (j > modulus_.exponent()) throw InvalidModulus("cannot lift a residue to a larger exponent");
    const PrimePowerModulus target = modulus_.with_exponent(j);
    return Residue(target, value_);
}

Residue& Residue::operator+=(const Residue& o) {
    require_same(o);
    value_ += o.value_;
    if (value_ >= modulus_.value()) value_ -= modulus_.value();
    return *this;
}

Residue& Residue::operator-=(const Residue& o) {
    require_same(o);
    value_ -= o.value_;
    if (value_ < 0) value_ += modulus_.value();
    return *this;
}

Residue& Residue::operator*=(const Residue& o) {
    require_same(o);
    value_ *= o.value_;
    mpz_fdiv_r(value_.get_mpz_t(), value_.get_mpz_t(), modulus_.value().get_mpz_t());
    return *this;
}

Residue Residue::operator-() const {
    if (value_ == 0) return *this;
    return Residue(Canonical{}, modulus_, modulus_.value() - value_);
}

bool operator==(const Residue& a, const Residue& b) {
    a.require_same(b);
    return a.value_ == b.value_;
}

std::string Valuation::to_string() const {
    return (at_least ? ">=" : "") + std::to_string(value);
}

Valuation valuation_of_difference(const Residue& a, const Residue& b) {
    if (!(a.modulus() == b.modulus())) {
        throw ModulusMismatch("valuation of residues in different rings");
    }
    const unsigned m = a.modulus().exponent();
    if (a.value() == b.value()) return {m, true};
    mpz_class d = a.value() - b.value();
    const auto v = static_cast<unsigned>(mpz_remove(d.get_mpz_t(), d.get_mpz_t(), a.modulus().p().get_mpz_t()));
    return {v, false};
}

Residue residue_of_rational(const ExactRational& q, const PrimePowerModulus& modulus) {
    if (mpz_divisible_p(q.den().get_mpz_t(), modulus.p().get_mpz_t()) != 0) {
        throw NotPInteger(q.to_string() + " is not a " + modulus.p().get_str() + "-integer");
    }
    const Residue num(modulus, q.num());
    if (q.den() == 1) return num;
    return num * Residue(modulus, q.den()).inv();
}

Residue residue_of_rational(const PIntegerRational& q, const PrimePowerModulus& modulus) {
    return residue_of_rational(q.value(), modulus);
}

Residue residue_of(long num, long den, const PrimePowerModulus& modulus) {
    return residue_of_rational(ExactRational(num, den), modulus);
}

} // namespace congrlab
