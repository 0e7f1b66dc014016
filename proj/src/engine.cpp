#include "altsum/engine.hpp"

#include "altsum/errors.hpp"
#include "altsum/parallel.hpp"

namespace altsum {

namespace {

class MaterializingBound final : public BoundForm {
public:
    MaterializingBound(const MultilinearForm& form, MatrixTuple a) : form_(form), a_(std::move(a)) {}

    Rational evaluate(const SignedPermTuple& sigma) const override { return form_.evaluate(act_inverse(sigma, a_)); }

private:
    const MultilinearForm& form_;
    MatrixTuple a_;
};

class DenseBound final : public BoundForm {
public:
    DenseBound(const DenseTensorForm& form, const MatrixTuple& a) : form_(form) {
        columns_.resize(a.blocks());
        for (std::size_t b = 0; b < a.blocks(); ++b)
            for (std::size_t c = 0; c < a[b].cols(); ++c) columns_[b].push_back(a[b].column(c));
    }

    Rational evaluate(const SignedPermTuple& sigma) const override {
        std::vector<const std::vector<Rational>*> slots;
        slots.reserve(form_.shape().slots());
        for (std::size_t b = 0; b < columns_.size(); ++b)
            for (std::size_t j = 0; j < columns_[b].size(); ++j) slots.push_back(&columns_[b][sigma.parts[b](j)]);
        return form_.contract(slots);
    }

private:
    const DenseTensorForm& form_;
    std::vector<std::vector<std::vector<Rational>>> columns_;
};

void require_shape(const MultilinearForm& f, const MatrixTuple& a) {
    if (f.shape() != a.shape())
        throw DimensionError("form of shape " + f.shape().to_string() + " applied to a tuple of shape " +
                             a.shape().to_string());
}

} // namespace

void check_term_budget(std::uint64_t terms, const EngineOptions& options, const std::string& what) {
    if (terms > options.term_budget) throw BudgetExceeded(what + " exceeds the term budget", terms, options.term_budget);
}

std::unique_ptr<BoundForm> MultilinearForm::bind(const MatrixTuple& a) const {
    return std::make_unique<MaterializingBound>(*this, a);
}

DenseTensorForm::DenseTensorForm(Shape shape, std::vector<Rational> coeffs)
    : shape_(std::move(shape)), coeffs_(std::move(coeffs)) {
    const std::uint64_t expected = coefficient_count(shape_);
    if (expected > max_coefficients)
        throw DimensionError("dense tensor of shape " + shape_.to_string() + " is too large");
    if (coeffs_.size() != expected)
        throw DimensionError("dense tensor of shape " + shape_.to_string() + " needs " + std::to_string(expected) +
                             " coefficients, got " + std::to_string(coeffs_.size()));
}

DenseTensorForm DenseTensorForm::zero(const Shape& shape) {
    const std::uint64_t count = coefficient_count(shape);
    if (count > max_coefficients) throw DimensionError("dense tensor of shape " + shape.to_string() + " is too large");
    return DenseTensorForm(shape, std::vector<Rational>(count));
}

std::uint64_t DenseTensorForm::coefficient_count(const Shape& shape) {
    std::uint64_t count = 1;
    for (auto n : shape.sizes())
        for (std::size_t s = 0; s < n; ++s) count = saturating_mul(count, n);
    return count;
}

std::string DenseTensorForm::description() const { return "dense tensor " + shape_.to_string(); }

Rational DenseTensorForm::contract(const std::vector<const std::vector<Rational>*>& slot_vectors) const {
    // Contract the last slot first; each pass divides the live size by that slot's dimension.
    std::vector<Rational> current = coeffs_;
    std::size_t live = current.size();
    std::size_t slot = slot_vectors.size();
    for (std::size_t b = shape_.blocks(); b-- > 0;) {
        const std::size_t dim = shape_.size(b);
        for (std::size_t s = 0; s < dim; ++s) {
            const std::vector<Rational>& v = *slot_vectors[--slot];
            const std::size_t next = live / dim;
            for (std::size_t p = 0; p < next; ++p) {
                Rational acc;
                for (std::size_t r = 0; r < dim; ++r) {
                    const Rational& c = current[p * dim + r];
                    if (!c.is_zero() && !v[r].is_zero()) acc += c * v[r];
                }
                current[p] = std::move(acc);
            }
            live = next;
        }
    }
    return current.empty() ? Rational() : current.front();
}

Rational DenseTensorForm::evaluate(const MatrixTuple& a) const {
    require_shape(*this, a);
    std::vector<std::vector<Rational>> columns;
    columns.reserve(shape_.slots());
    for (std::size_t b = 0; b < a.blocks(); ++b)
        for (std::size_t c = 0; c < a[b].cols(); ++c) columns.push_back(a[b].column(c));
    std::vector<const std::vector<Rational>*> slots;
    for (const auto& c : columns) slots.push_back(&c);
    return contract(slots);
}

std::unique_ptr<BoundForm> DenseTensorForm::bind(const MatrixTuple& a) const {
    require_shape(*this, a);
    return std::make_unique<DenseBound>(*this, a);
}

DenseTensorForm DenseTensorForm::combine(const Rational& alpha, const DenseTensorForm& f, const Rational& beta,
                                         const DenseTensorForm& g) {
    if (f.shape_ != g.shape_) throw DimensionError("combining dense tensors of different shapes");
    std::vector<Rational> coeffs(f.coeffs_.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = alpha * f.coeffs_[i] + beta * g.coeffs_[i];
    return DenseTensorForm(f.shape_, std::move(coeffs));
}

Rational FunctionForm::evaluate(const MatrixTuple& a) const {
    require_shape(*this, a);
    return evaluator_(a);
}

Rational alternating_sum(const MultilinearForm& f, const MatrixTuple& a, const EngineOptions& options) {
    require_shape(f, a);
    const Shape& shape = f.shape();
    const std::uint64_t terms = shape.group_order();
    check_term_budget(terms, options, "alternating sum over shape " + shape.to_string());

    const auto bound = f.bind(a);
    return chunked_reduce<Rational>(
        terms, options.threads, Rational(),
        [&](std::uint64_t begin, std::uint64_t end) {
            Rational acc;
            for (ProductStream s(shape, begin, end); !s.done(); s.advance()) {
                const Rational v = bound->evaluate(s.current());
                if (v.is_zero()) continue;
                if (s.current().parity > 0)
                    acc += v;
                else
                    acc -= v;
            }
            return acc;
        },
        [](Rational acc, const Rational& part) { return acc += part; });
}

Rational invariant_at_identity(const MultilinearForm& f, const EngineOptions& options) {
    return alternating_sum(f, MatrixTuple::identity(f.shape()), options);
}

IdentityReport verify_identity(const MultilinearForm& f, const MatrixTuple& a, const EngineOptions& options) {
    IdentityReport report;
    report.lhs = alternating_sum(f, a, options);
    report.invariant = invariant_at_identity(f, options);
    report.determinant_product = a.determinant_product();
    report.rhs = report.invariant * report.determinant_product;
    report.terms = f.shape().group_order();
    report.holds = report.lhs == report.rhs;
    return report;
}

} // namespace altsum
