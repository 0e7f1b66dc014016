#ifndef ALTSUM_PERMS_HPP
#define ALTSUM_PERMS_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "altsum/matrix_tuple.hpp"

namespace altsum {

/// A permutation of {0, ..., n-1} in one-line form, mapping[j] = sigma(j),
/// carried with its sign.
struct SignedPerm {
    std::vector<std::size_t> mapping;
    int parity = 1;

    std::size_t size() const { return mapping.size(); }
    std::size_t operator()(std::size_t j) const { return mapping[j]; }

    static SignedPerm identity(std::size_t n);
    /// Validates the bijection (InputError otherwise) and computes the sign.
    static SignedPerm from_mapping(std::vector<std::size_t> mapping);

    friend bool operator==(const SignedPerm&, const SignedPerm&) = default;
};

/// (-1)^(number of inversions), O(n^2).
int inversion_parity(std::span<const std::size_t> mapping);

/// (a o b)(j) = a(b(j)).
SignedPerm compose(const SignedPerm& a, const SignedPerm& b);
SignedPerm inverse(const SignedPerm& p);

/// An element of Sigma_{n_1} x ... x Sigma_{n_k}; parity is the product of
/// the part parities.
struct SignedPermTuple {
    std::vector<SignedPerm> parts;
    int parity = 1;

    static SignedPermTuple identity(const Shape& shape);
    /// Recomputes parity from the parts.
    static SignedPermTuple from_parts(std::vector<SignedPerm> parts);

    Shape shape() const;

    friend bool operator==(const SignedPermTuple&, const SignedPermTuple&) = default;
};

SignedPermTuple compose(const SignedPermTuple& a, const SignedPermTuple& b);
SignedPermTuple inverse(const SignedPermTuple& p);

/// Plain-changes (Steinhaus-Johnson-Trotter) rank of a permutation. Rank 0
/// is the identity and consecutive ranks differ by one adjacent
/// transposition, so parity(rank r) = (-1)^r.
std::uint64_t sjt_rank(const SignedPerm& p);
SignedPerm sjt_unrank(std::size_t n, std::uint64_t rank);

/// Restartable stream over Sigma_n in plain-changes order. Each advance()
/// swaps two adjacent entries and flips the parity.
class PlainChanges {
public:
    /// Throws DimensionError for n == 0.
    explicit PlainChanges(std::size_t n, std::uint64_t start_rank = 0);

    bool done() const { return rank_ >= order_; }
    const SignedPerm& current() const { return perm_; }
    std::uint64_t rank() const { return rank_; }
    std::uint64_t order() const { return order_; }

    void advance();
    void reset(std::uint64_t rank);

private:
    std::size_t n_;
    SignedPerm perm_;
    std::vector<std::size_t> position_;
    std::uint64_t rank_ = 0;
    std::uint64_t order_ = 1;
};

/// All n! signed permutations, each exactly once.
PlainChanges enumerate_signed(std::size_t n);

/// Stream over the product group of a shape, restricted to the tuple-rank
/// range [begin, end). Tuple rank is mixed radix over the factor ranks with
/// the last factor varying fastest; the range makes the stream splittable
/// across workers.
class ProductStream {
public:
    explicit ProductStream(const Shape& shape);
    ProductStream(const Shape& shape, std::uint64_t begin, std::uint64_t end);

    bool done() const { return rank_ >= end_; }
    const SignedPermTuple& current() const { return current_; }
    std::uint64_t rank() const { return rank_; }
    std::uint64_t order() const { return order_; }

    void advance();

private:
    void seek(std::uint64_t rank);

    Shape shape_;
    SignedPermTuple current_;
    std::vector<std::vector<std::size_t>> positions_;
    std::vector<std::uint64_t> factor_ranks_;
    std::vector<std::uint64_t> factor_orders_;
    std::uint64_t order_ = 1;
    std::uint64_t rank_ = 0;
    std::uint64_t end_ = 0;
};

ProductStream enumerate_product(const Shape& shape);

/// sigma . A: block i has its columns permuted so that
/// (rho . A)_{r,j} = A_{r, rho^{-1}(j)}. Throws DimensionError on a shape mismatch.
MatrixTuple act(const SignedPermTuple& sigma, const MatrixTuple& a);

/// sigma^{-1} . A computed directly: column j of block i is column sigma_i(j) of A_i.
MatrixTuple act_inverse(const SignedPermTuple& sigma, const MatrixTuple& a);

} // namespace altsum

#endif // ALTSUM_PERMS_HPP
