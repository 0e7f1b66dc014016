#ifndef ALTSUM_MATRIX_HPP
#define ALTSUM_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "altsum/rational.hpp"

namespace altsum {

/// Dense row-major matrix of exact rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    /// Rows of equal length; throws DimensionError otherwise.
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(std::size_t n);
    /// Builds the matrix whose j-th column is columns[j]; all columns must share a length.
    static Matrix from_columns(std::span<const std::vector<Rational>> columns);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::vector<Rational> column(std::size_t c) const;
    void swap_columns(std::size_t a, std::size_t b);
    Matrix transposed() const;

    std::span<const Rational> entries() const { return entries_; }

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

} // namespace altsum

#endif // ALTSUM_MATRIX_HPP
