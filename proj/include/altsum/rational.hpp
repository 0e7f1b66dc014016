#ifndef ALTSUM_RATIONAL_HPP
#define ALTSUM_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace altsum {

/// Exact rational number in canonical form (positive denominator, reduced).
///
/// Text format: optional sign, decimal digits, optionally "/" and a positive
/// decimal denominator, e.g. "-3/7" or "4". to_string() always emits the
/// canonical spelling, so parse(to_string(x)) == x and the printed form of a
/// value is unique.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}            // NOLINT(google-explicit-constructor)
    Rational(int value) : value_(value) {}             // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpz_class& integer) : value_(integer) {}
    explicit Rational(mpq_class value);

    /// Throws InputError on anything outside the text format above.
    static Rational parse(std::string_view text);

    std::string to_string() const;

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// Throws std::domain_error for zero.
    Rational reciprocal() const;

    const mpq_class& raw() const { return value_; }

    Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
    Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
    Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    friend Rational operator-(const Rational& x) { return Rational(mpq_class(-x.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

private:
    mpq_class value_;
};

} // namespace altsum

#endif // ALTSUM_RATIONAL_HPP
