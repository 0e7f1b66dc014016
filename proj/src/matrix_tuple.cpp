#include "altsum/matrix_tuple.hpp"

#include <limits>

#include "altsum/determinant.hpp"
#include "altsum/errors.hpp"

namespace altsum {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) return std::numeric_limits<std::uint64_t>::max();
    return out;
}

std::uint64_t factorial(std::size_t n) {
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) f = saturating_mul(f, i);
    return f;
}

Shape::Shape(std::vector<std::size_t> sizes) : sizes_(std::move(sizes)) {
    for (std::size_t i = 0; i < sizes_.size(); ++i)
        if (sizes_[i] == 0) throw DimensionError("shape entry " + std::to_string(i) + " is zero");
}

Shape Shape::uniform(std::size_t n, std::size_t count) { return Shape(std::vector<std::size_t>(count, n)); }

std::size_t Shape::slots() const {
    std::size_t s = 0;
    for (auto n : sizes_) s += n;
    return s;
}

std::uint64_t Shape::group_order() const {
    std::uint64_t order = 1;
    for (auto n : sizes_) order = saturating_mul(order, factorial(n));
    return order;
}

std::string Shape::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(sizes_[i]);
    }
    return out + ")";
}

MatrixTuple::MatrixTuple(std::vector<Matrix> matrices) : matrices_(std::move(matrices)) {
    std::vector<std::size_t> sizes;
    sizes.reserve(matrices_.size());
    for (std::size_t i = 0; i < matrices_.size(); ++i) {
        if (!matrices_[i].is_square() || matrices_[i].rows() == 0)
            throw DimensionError("matrix " + std::to_string(i) + " is not a nonempty square matrix");
        sizes.push_back(matrices_[i].rows());
    }
    shape_ = Shape(std::move(sizes));
}

MatrixTuple MatrixTuple::identity(const Shape& shape) {
    std::vector<Matrix> ms;
    ms.reserve(shape.blocks());
    for (auto n : shape.sizes()) ms.push_back(Matrix::identity(n));
    return MatrixTuple(std::move(ms));
}

std::vector<Rational> MatrixTuple::determinants() const {
    std::vector<Rational> out;
    out.reserve(matrices_.size());
    for (const auto& m : matrices_) out.push_back(det(m));
    return out;
}

Rational MatrixTuple::determinant_product() const {
    Rational p = 1;
    for (const auto& d : determinants()) p *= d;
    return p;
}

bool MatrixTuple::nonsingular() const {
    for (const auto& m : matrices_)
        if (det(m).is_zero()) return false;
    return true;
}

} // namespace altsum
