#include "altsum/determinant.hpp"

#include <string>
#include <utility>
#include <vector>

#include "altsum/errors.hpp"

namespace altsum {

mpz_class integer_det(std::vector<mpz_class> a, std::size_t n) {
    if (a.size() != n * n) throw DimensionError("integer_det: entry count is not n*n");
    if (n == 0) return 1;

    auto at = [&](std::size_t r, std::size_t c) -> mpz_class& { return a[r * n + c]; };
    int sign = 1;
    mpz_class prev_pivot = 1;
    mpz_class t;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && at(swap_row, k) == 0) ++swap_row;
            if (swap_row == n) return 0;
            for (std::size_t c = k; c < n; ++c) std::swap(at(k, c), at(swap_row, c));
            sign = -sign;
        }
        const mpz_class& pivot = at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // a_ij <- (a_ij * a_kk - a_ik * a_kj) / prev_pivot, exact.
                mpz_mul(t.get_mpz_t(), at(i, j).get_mpz_t(), pivot.get_mpz_t());
                mpz_submul(t.get_mpz_t(), at(i, k).get_mpz_t(), at(k, j).get_mpz_t());
                mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev_pivot.get_mpz_t());
            }
        }
        prev_pivot = pivot;
    }
    mpz_class result = at(n - 1, n - 1);
    if (sign < 0) result = -result;
    return result;
}

Rational det(const Matrix& m) {
    if (!m.is_square())
        throw DimensionError("det of a " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
    const std::size_t n = m.rows();

    std::vector<mpz_class> scaled(n * n);
    mpz_class scale_product = 1;
    for (std::size_t c = 0; c < n; ++c) {
        mpz_class lcm = 1;
        for (std::size_t r = 0; r < n; ++r) {
            const mpz_class den = m(r, c).denominator();
            if (den != 1) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        }
        for (std::size_t r = 0; r < n; ++r) {
            const mpq_class& q = m(r, c).raw();
            if (lcm == 1) {
                scaled[r * n + c] = q.get_num();
            } else {
                mpz_class factor;
                mpz_divexact(factor.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
                scaled[r * n + c] = q.get_num() * factor;
            }
        }
        if (lcm != 1) scale_product *= lcm;
    }
    return Rational(integer_det(std::move(scaled), n), scale_product);
}

} // namespace altsum
