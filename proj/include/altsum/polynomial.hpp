#ifndef ALTSUM_POLYNOMIAL_HPP
#define ALTSUM_POLYNOMIAL_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "altsum/rational.hpp"

namespace altsum {

/// Element of V_m, the polynomials in t of degree < m, stored densely:
/// coeffs()[d] is the coefficient of t^d and coeffs().size() == m.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

    static Polynomial zero(std::size_t ambient) { return Polynomial(std::vector<Rational>(ambient)); }
    static Polynomial constant(const Rational& c, std::size_t ambient);
    /// t^degree embedded in V_ambient.
    static Polynomial monomial(std::size_t degree, std::size_t ambient);
    /// c0 + c1 t in V_2.
    static Polynomial linear(const Rational& c0, const Rational& c1);

    std::size_t ambient() const { return coeffs_.size(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& operator[](std::size_t d) const { return coeffs_[d]; }

    /// Highest index with a nonzero coefficient; nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const;
    bool is_zero() const { return !degree().has_value(); }

    /// Same polynomial in V_ambient; throws DegreeOverflow if it does not fit.
    Polynomial embedded(std::size_t ambient) const;

    Polynomial scaled(const Rational& factor) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    std::vector<Rational> coeffs_;
};

/// Exact product a*b embedded in V_ambient. Throws DegreeOverflow when
/// deg(a) + deg(b) >= ambient.
Polynomial poly_mul(const Polynomial& a, const Polynomial& b, std::size_t ambient);

/// Determinant of the n x n matrix whose column i holds the coefficients of
/// ps[i] (row d is the t^d coefficient). Every polynomial must live in V_n.
Rational poly_det(std::span<const Polynomial> ps);

} // namespace altsum

#endif // ALTSUM_POLYNOMIAL_HPP
