#ifndef ALTSUM_ENGINE_HPP
#define ALTSUM_ENGINE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "altsum/matrix_tuple.hpp"
#include "altsum/perms.hpp"
#include "altsum/rational.hpp"

namespace altsum {

struct EngineOptions {
    std::size_t threads = 1;
    /// Largest |Sigma| (or choice count) a sum may enumerate.
    std::uint64_t term_budget = 100'000'000;
};

struct SearchOptions {
    /// Largest number of candidates a search may examine.
    std::uint64_t node_cap = 10'000'000;
    /// Svrtan search only: update the two affected polynomials per step
    /// instead of recomputing all of them.
    bool incremental = false;
};

/// Throws BudgetExceeded when terms > options.term_budget.
void check_term_budget(std::uint64_t terms, const EngineOptions& options, const std::string& what);

/// A form specialised to one matrix tuple A. evaluate(sigma) returns
/// f(sigma^{-1} . A), i.e. f with column j of block i replaced by column
/// sigma_i(j) of A_i. Must be safe to call concurrently.
class BoundForm {
public:
    virtual ~BoundForm() = default;
    virtual Rational evaluate(const SignedPermTuple& sigma) const = 0;
};

/// A multilinear form in the columns of a matrix tuple of a fixed shape:
/// linear in each of the n_1 + ... + n_k column slots.
class MultilinearForm {
public:
    virtual ~MultilinearForm() = default;

    virtual const Shape& shape() const = 0;
    virtual std::string description() const = 0;
    virtual Rational evaluate(const MatrixTuple& a) const = 0;

    /// The default binding materialises sigma^{-1} . A for every call.
    /// Structured forms override it with precomputed lookups.
    virtual std::unique_ptr<BoundForm> bind(const MatrixTuple& a) const;
};

/// Element of the full tensor space, one covector index per column slot.
///
/// Slots are ordered block by block; slot s in block b takes a row index in
/// [0, n_b). The flat coefficient index is row-major over slots with slot 0
/// most significant, so there are prod n_b^{n_b} coefficients.
class DenseTensorForm final : public MultilinearForm {
public:
    /// Throws DimensionError if coeffs.size() != coefficient_count(shape).
    DenseTensorForm(Shape shape, std::vector<Rational> coeffs);

    static DenseTensorForm zero(const Shape& shape);
    /// prod n_b^{n_b}, saturating.
    static std::uint64_t coefficient_count(const Shape& shape);
    /// Refuses shapes whose tensors would not fit in memory.
    static constexpr std::uint64_t max_coefficients = 1u << 24;

    const Shape& shape() const override { return shape_; }
    std::string description() const override;
    Rational evaluate(const MatrixTuple& a) const override;
    std::unique_ptr<BoundForm> bind(const MatrixTuple& a) const override;

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    /// alpha * f + beta * g; shapes must agree.
    static DenseTensorForm combine(const Rational& alpha, const DenseTensorForm& f, const Rational& beta,
                                   const DenseTensorForm& g);

    /// Contracts the tensor against one column vector per slot.
    Rational contract(const std::vector<const std::vector<Rational>*>& slot_vectors) const;

private:
    Shape shape_;
    std::vector<Rational> coeffs_;
};

/// Wraps an arbitrary evaluator. The evaluator must be pure and multilinear;
/// neither is checked.
class FunctionForm final : public MultilinearForm {
public:
    using Evaluator = std::function<Rational(const MatrixTuple&)>;

    FunctionForm(Shape shape, std::string description, Evaluator evaluator)
        : shape_(std::move(shape)), description_(std::move(description)), evaluator_(std::move(evaluator)) {}

    const Shape& shape() const override { return shape_; }
    std::string description() const override { return description_; }
    Rational evaluate(const MatrixTuple& a) const override;

private:
    Shape shape_;
    std::string description_;
    Evaluator evaluator_;
};

/// sum over sigma in Sigma of sgn(sigma) f(sigma^{-1} . A), exactly.
///
/// Throws DimensionError if shapes differ and BudgetExceeded if |Sigma| is
/// over the term budget. The result does not depend on options.threads.
Rational alternating_sum(const MultilinearForm& f, const MatrixTuple& a, const EngineOptions& options = {});

/// The scalar I(f, n) such that the alternating sum equals I(f, n) times the
/// product of determinants; evaluated at the identity tuple.
Rational invariant_at_identity(const MultilinearForm& f, const EngineOptions& options = {});

struct IdentityReport {
    Rational lhs;
    Rational rhs;
    Rational invariant;
    Rational determinant_product;
    std::uint64_t terms = 0;
    bool holds = false;
};

/// LHS via alternating_sum, RHS via invariant_at_identity times prod det(A_i).
IdentityReport verify_identity(const MultilinearForm& f, const MatrixTuple& a, const EngineOptions& options = {});

} // namespace altsum

#endif // ALTSUM_ENGINE_HPP
