#include "altsum/rational.hpp"

#include <stdexcept>

#include "altsum/errors.hpp"

namespace altsum {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

} // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    value_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num_text = body.substr(0, slash);
    const std::string_view den_text =
        slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num_text) || !all_digits(den_text))
        throw InputError("bad rational literal '" + std::string(text) + "'");

    mpz_class num(std::string(num_text), 10);
    mpz_class den(std::string(den_text), 10);
    if (den == 0) throw InputError("zero denominator in rational literal '" + std::string(text) + "'");
    if (negative) num = -num;
    return Rational(num, den);
}

std::string Rational::to_string() const {
    std::string out = value_.get_num().get_str(10);
    if (value_.get_den() != 1) {
        out += '/';
        out += value_.get_den().get_str(10);
    }
    return out;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw std::domain_error("reciprocal of zero");
    mpq_class inv;
    mpq_inv(inv.get_mpq_t(), value_.get_mpq_t());
    return Rational(std::move(inv));
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("division by zero");
    value_ /= rhs.value_;
    return *this;
}

} // namespace altsum
