#ifndef ALTSUM_DETERMINANT_HPP
#define ALTSUM_DETERMINANT_HPP

#include <vector>

#include "altsum/matrix.hpp"
#include "altsum/rational.hpp"

namespace altsum {

/// Exact determinant of a square matrix; throws DimensionError otherwise.
///
/// Each column is scaled by the LCM of its denominators so the elimination
/// runs on integers; Bareiss' fraction-free update keeps every intermediate
/// entry a minor of that integer matrix, and the column scales are divided
/// back out at the end. The 0 x 0 determinant is 1.
Rational det(const Matrix& m);

/// Same as det() but for a matrix already known to have integer entries.
mpz_class integer_det(std::vector<mpz_class> entries, std::size_t n);

} // namespace altsum

#endif // ALTSUM_DETERMINANT_HPP
