#include "congrlab/rational.hpp"

#include <cctype>

#include "congrlab/errors.hpp"

namespace congrlab {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
    std::string_view digits = s;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty()) throw ParseError("malformed rational '" + std::string(whole) + "'");
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw ParseError("malformed rational '" + std::string(whole) + "'");
        }
    }
    std::string buf(s.front() == '+' ? s.substr(1) : s);
    return mpz_class(buf, 10);
}

} // namespace

ExactRational::ExactRational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

ExactRational::ExactRational(long num, long den) : ExactRational(mpz_class(num), mpz_class(den)) {}

ExactRational::ExactRational(mpq_class q) : q_(std::move(q)) {
    if (q_.get_den() == 0) throw DivisionByZero("rational with zero denominator");
    q_.canonicalize();
}

ExactRational ExactRational::parse(std::string_view text) {
    const std::string_view s = trim(text);
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return ExactRational(parse_integer(s, text));
    const mpz_class num = parse_integer(trim(s.substr(0, slash)), text);
    const mpz_class den = parse_integer(trim(s.substr(slash + 1)), text);
    return ExactRational(num, den);
}

ExactRational ExactRational::pow(unsigned e) const {
    ExactRational r;
    mpz_pow_ui(r.q_.get_num_mpz_t(), q_.get_num_mpz_t(), e);
    mpz_pow_ui(r.q_.get_den_mpz_t(), q_.get_den_mpz_t(), e);
    return r;
}

std::string ExactRational::to_string() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_str();
}

ExactRational& ExactRational::operator+=(const ExactRational& o) {
    q_ += o.q_;
    return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& o) {
    q_ -= o.q_;
    return *this;
}

ExactRational& ExactRational::operator*=(const ExactRational& o) {
    q_ *= o.q_;
    return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& o) {
    if (o.is_zero()) throw DivisionByZero("division by zero rational");
    q_ /= o.q_;
    return *this;
}

ExactRational ExactRational::operator-() const {
    return ExactRational(mpq_class(-q_));
}

std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    const int c = cmp(a.q_, b.q_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

bool PIntegerRational::is_p_integer(const mpz_class& p) const {
    return mpz_divisible_p(den().get_mpz_t(), p.get_mpz_t()) == 0;
}

std::optional<long> padic_valuation(const ExactRational& q, const mpz_class& p) {
    if (q.is_zero()) return std::nullopt;
    mpz_class t;
    const long vn = static_cast<long>(mpz_remove(t.get_mpz_t(), q.num().get_mpz_t(), p.get_mpz_t()));
    const long vd = static_cast<long>(mpz_remove(t.get_mpz_t(), q.den().get_mpz_t(), p.get_mpz_t()));
    return vn - vd;
}

ExactRational rational_binomial(const ExactRational& top, unsigned long k) {
    mpq_class acc(1);
    for (unsigned long i = 0; i < k; ++i) {
        acc *= top.raw() - mpq_class(static_cast<long>(i));
        acc /= mpq_class(static_cast<long>(i + 1));
    }
    return ExactRational(acc);
}

} // namespace congrlab
