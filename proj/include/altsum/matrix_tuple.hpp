#ifndef ALTSUM_MATRIX_TUPLE_HPP
#define ALTSUM_MATRIX_TUPLE_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "altsum/matrix.hpp"
#include "altsum/rational.hpp"

namespace altsum {

/// Sizes (n_1, ..., n_k) of a tuple of square matrices. Every size is at
/// least 1; the empty shape (k = 0) is allowed and its group is trivial.
class Shape {
public:
    Shape() = default;
    /// Throws DimensionError if any size is zero.
    explicit Shape(std::vector<std::size_t> sizes);

    /// (n, ..., n) with `count` factors.
    static Shape uniform(std::size_t n, std::size_t count);

    const std::vector<std::size_t>& sizes() const { return sizes_; }
    std::size_t size(std::size_t block) const { return sizes_[block]; }
    std::size_t blocks() const { return sizes_.size(); }
    /// Total number of column slots, n_1 + ... + n_k.
    std::size_t slots() const;

    /// |Sigma| = n_1! * ... * n_k!, saturating at UINT64_MAX.
    std::uint64_t group_order() const;

    std::string to_string() const;

    friend bool operator==(const Shape&, const Shape&) = default;

private:
    std::vector<std::size_t> sizes_;
};

/// The k-tuple of square rational matrices a form is evaluated on.
class MatrixTuple {
public:
    MatrixTuple() = default;
    /// Throws DimensionError unless every matrix is square.
    explicit MatrixTuple(std::vector<Matrix> matrices);

    /// (I_{n_1}, ..., I_{n_k}).
    static MatrixTuple identity(const Shape& shape);

    const Shape& shape() const { return shape_; }
    std::size_t blocks() const { return matrices_.size(); }
    const Matrix& operator[](std::size_t block) const { return matrices_[block]; }
    Matrix& operator[](std::size_t block) { return matrices_[block]; }
    const std::vector<Matrix>& matrices() const { return matrices_; }

    /// det of every block.
    std::vector<Rational> determinants() const;
    Rational determinant_product() const;
    /// Every block has nonzero determinant.
    bool nonsingular() const;

    friend bool operator==(const MatrixTuple&, const MatrixTuple&) = default;

private:
    Shape shape_;
    std::vector<Matrix> matrices_;
};

/// n! for n <= 20; saturates at UINT64_MAX beyond.
std::uint64_t factorial(std::size_t n);

/// a * b saturating at UINT64_MAX.
std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b);

} // namespace altsum

#endif // ALTSUM_MATRIX_TUPLE_HPP
