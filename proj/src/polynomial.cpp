#include "altsum/polynomial.hpp"

#include <algorithm>
#include <string>

#include "altsum/determinant.hpp"
#include "altsum/errors.hpp"
#include "altsum/matrix.hpp"

namespace altsum {

Polynomial Polynomial::constant(const Rational& c, std::size_t ambient) {
    if (ambient == 0) throw DegreeOverflow("constant polynomial in V_0");
    Polynomial p = zero(ambient);
    p.coeffs_[0] = c;
    return p;
}

Polynomial Polynomial::monomial(std::size_t degree, std::size_t ambient) {
    if (degree >= ambient)
        throw DegreeOverflow("t^" + std::to_string(degree) + " does not fit in V_" + std::to_string(ambient));
    Polynomial p = zero(ambient);
    p.coeffs_[degree] = 1;
    return p;
}

Polynomial Polynomial::linear(const Rational& c0, const Rational& c1) {
    return Polynomial({c0, c1});
}

std::optional<std::size_t> Polynomial::degree() const {
    for (std::size_t d = coeffs_.size(); d-- > 0;)
        if (!coeffs_[d].is_zero()) return d;
    return std::nullopt;
}

Polynomial Polynomial::embedded(std::size_t ambient) const {
    const auto deg = degree();
    if (deg && *deg >= ambient)
        throw DegreeOverflow("degree " + std::to_string(*deg) + " does not fit in V_" + std::to_string(ambient));
    Polynomial out = zero(ambient);
    for (std::size_t d = 0; d < std::min(ambient, coeffs_.size()); ++d) out.coeffs_[d] = coeffs_[d];
    return out;
}

Polynomial Polynomial::scaled(const Rational& factor) const {
    Polynomial out = *this;
    for (auto& c : out.coeffs_) c *= factor;
    return out;
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b, std::size_t ambient) {
    const auto da = a.degree();
    const auto db = b.degree();
    Polynomial out = Polynomial::zero(ambient);
    if (!da || !db) return out;
    if (*da + *db >= ambient)
        throw DegreeOverflow("product of degree " + std::to_string(*da + *db) + " does not fit in V_" +
                             std::to_string(ambient));

    std::vector<Rational> coeffs(ambient);
    for (std::size_t i = 0; i <= *da; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j <= *db; ++j) coeffs[i + j] += a[i] * b[j];
    }
    return Polynomial(std::move(coeffs));
}

Rational poly_det(std::span<const Polynomial> ps) {
    const std::size_t n = ps.size();
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (ps[i].ambient() != n)
            throw DimensionError("poly_det: polynomial " + std::to_string(i) + " lives in V_" +
                                 std::to_string(ps[i].ambient()) + ", expected V_" + std::to_string(n));
        for (std::size_t d = 0; d < n; ++d) m(d, i) = ps[i][d];
    }
    return det(m);
}

} // namespace altsum
