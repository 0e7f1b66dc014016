#ifndef ALTSUM_ONN_HPP
#define ALTSUM_ONN_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "altsum/engine.hpp"
#include "altsum/matrix_tuple.hpp"
#include "altsum/perms.hpp"

namespace altsum {

/// n x n grid over {1..n} whose rows and columns are permutations.
class LatinSquare {
public:
    /// Throws InputError if the grid is not a Latin square.
    static LatinSquare from_rows(const std::vector<std::vector<std::size_t>>& rows);

    std::size_t order() const { return n_; }
    /// 1-based symbol in row r, column c (both 0-based).
    std::size_t operator()(std::size_t r, std::size_t c) const { return cells_[r * n_ + c]; }

    LatinSquare transposed() const;

    friend bool operator==(const LatinSquare&, const LatinSquare&) = default;

private:
    LatinSquare(std::size_t n, std::vector<std::size_t> cells) : n_(n), cells_(std::move(cells)) {}

    std::size_t n_ = 0;
    std::vector<std::size_t> cells_;
};

/// Product of the signs of all n rows and all n columns, each read as a
/// permutation of {1..n}.
int latin_sign(const LatinSquare& square);

struct LatinCount {
    /// even - odd, i.e. l(n).
    std::int64_t signed_count = 0;
    std::uint64_t squares = 0;

    std::uint64_t even() const { return (squares + static_cast<std::uint64_t>(signed_count)) / 2; }
    std::uint64_t odd() const { return squares - even(); }
};

/// Number of n x n Latin squares for n <= 7, nullopt beyond. Used to gate
/// enumeration against the term budget before starting.
std::optional<std::uint64_t> latin_square_count(std::size_t n);

/// Full enumeration of the order-n Latin squares with their signs (row-major
/// DFS with row/column availability bitmasks, parity tracked by incremental
/// inversion counts). Parallel over the first row. Throws BudgetExceeded when
/// the number of squares is over options.term_budget or n > 7.
LatinCount enumerate_latin_squares(std::size_t n, const EngineOptions& options = {});

/// l(n): even minus odd Latin squares of order n.
std::int64_t alon_tarsi_count(std::size_t n, const EngineOptions& options = {});

/// n matrices of size n x n.
class ColorfulInstance {
public:
    /// Throws DimensionError unless the tuple has shape (n, ..., n) with n factors.
    explicit ColorfulInstance(MatrixTuple matrices);

    std::size_t n() const { return matrices_.blocks(); }
    const MatrixTuple& matrices() const { return matrices_; }
    const Matrix& operator[](std::size_t i) const { return matrices_[i]; }

    friend bool operator==(const ColorfulInstance&, const ColorfulInstance&) = default;

private:
    MatrixTuple matrices_;
};

/// f(A) = prod_j det(A_1 column j, ..., A_n column j).
class ColorfulForm final : public MultilinearForm {
public:
    explicit ColorfulForm(std::size_t n);

    const Shape& shape() const override { return shape_; }
    std::string description() const override;
    Rational evaluate(const MatrixTuple& a) const override;
    std::unique_ptr<BoundForm> bind(const MatrixTuple& a) const override;

    std::size_t n() const { return n_; }

private:
    std::size_t n_;
    Shape shape_;
};

ColorfulForm colorful_form(std::size_t n);

/// The matrix whose column i is column `columns[i]` of the i-th matrix.
Matrix transversal_matrix(const MatrixTuple& a, const std::vector<std::size_t>& columns);

struct OnnReport {
    Rational lhs;
    Rational rhs;
    std::int64_t latin_signed_count = 0;
    Rational determinant_product;
    std::uint64_t terms = 0;
    bool holds = false;
};

/// Checks sum_sigma sgn(sigma) prod_j det(A_1^{sigma_1(j)}, ..., A_n^{sigma_n(j)})
/// = l(n) prod_i det(A_i), with l(n) taken from Latin square enumeration.
OnnReport verify_onn(const ColorfulInstance& instance, const EngineOptions& options = {});

/// sigma_i(j) is the column of A_i placed in transversal j.
struct TransversalSelection {
    SignedPermTuple sigma;
    std::vector<Rational> transversal_dets;
};

enum class SearchStatus { found, exhausted };

struct RotaResult {
    SearchStatus status = SearchStatus::exhausted;
    std::optional<TransversalSelection> selection;
    std::uint64_t nodes = 0;
};

/// Backtracking over transversals j = 1..n. At each position the column
/// tuples (c_1, ..., c_n) of not-yet-used columns are tried in lexicographic
/// order and a tuple with zero determinant is rejected at once. Returns the
/// first complete selection, or exhausted. Each determinant test counts as
/// one node; exceeding options.node_cap throws BudgetExceeded.
RotaResult rota_search(const ColorfulInstance& instance, const SearchOptions& options = {});

/// Recomputes every transversal determinant directly and checks they are nonzero.
bool selection_is_valid(const ColorfulInstance& instance, const SignedPermTuple& sigma);

} // namespace altsum

#endif // ALTSUM_ONN_HPP
