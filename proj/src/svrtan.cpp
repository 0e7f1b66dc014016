#include "altsum/svrtan.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "altsum/errors.hpp"
#include "altsum/parallel.hpp"

namespace altsum {

namespace {

std::uint64_t choice_total(std::size_t edges) {
    if (edges > max_choice_edges)
        throw BudgetExceeded("choice space of " + std::to_string(edges) + " edges is unsupported",
                             std::numeric_limits<std::uint64_t>::max(), std::uint64_t{1} << max_choice_edges);
    return std::uint64_t{1} << edges;
}

Rational factorial_rational(std::size_t n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

class SvrtanBound final : public BoundForm {
public:
    explicit SvrtanBound(SpinorInstance inst) : inst_(std::move(inst)) {}

    Rational evaluate(const SignedPermTuple& sigma) const override {
        Choice c{0, inst_.edge_count()};
        for (std::size_t e = 0; e < c.edges; ++e)
            if (sigma.parts[e](0) == 1) c.bits |= std::uint64_t{1} << e;
        return choice_det(inst_, c);
    }

private:
    SpinorInstance inst_;
};

} // namespace

Rational EdgeBasis::det() const { return p1[0] * p2[1] - p2[0] * p1[1]; }

std::size_t edge_count(std::size_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

SpinorInstance::SpinorInstance(std::size_t n, std::vector<EdgeBasis> edges) : n_(n), edges_(std::move(edges)) {
    if (n == 0) throw DimensionError("spinor instance on zero vertices");
    if (edges_.size() != altsum::edge_count(n))
        throw DimensionError("spinor instance on " + std::to_string(n) + " vertices needs " +
                             std::to_string(altsum::edge_count(n)) + " edges, got " + std::to_string(edges_.size()));
    for (std::size_t e = 0; e < edges_.size(); ++e)
        if (edges_[e].p1.ambient() != 2 || edges_[e].p2.ambient() != 2)
            throw DimensionError("edge basis " + std::to_string(e) + " is not in V_2");
}

SpinorInstance SpinorInstance::identity(std::size_t n) {
    std::vector<EdgeBasis> edges(altsum::edge_count(n), EdgeBasis{Polynomial::linear(1, 0), Polynomial::linear(0, 1)});
    return SpinorInstance(n, std::move(edges));
}

std::size_t SpinorInstance::edge_index(std::size_t i, std::size_t j) const {
    if (i == j || i >= n_ || j >= n_) throw DimensionError("no edge between these vertices");
    if (i > j) std::swap(i, j);
    return i * (2 * n_ - i - 1) / 2 + (j - i - 1);
}

std::pair<std::size_t, std::size_t> SpinorInstance::edge_vertices(std::size_t index) const {
    std::size_t i = 0;
    std::size_t first = 0;
    while (index >= first + (n_ - i - 1)) {
        first += n_ - i - 1;
        ++i;
    }
    return {i, i + 1 + (index - first)};
}

bool SpinorInstance::nonsingular() const {
    return std::all_of(edges_.begin(), edges_.end(), [](const EdgeBasis& e) { return !e.det().is_zero(); });
}

int Choice::sign() const { return std::popcount(bits) % 2 == 0 ? 1 : -1; }

const Polynomial& oriented_spinor(const SpinorInstance& inst, const Choice& c, std::size_t from, std::size_t to) {
    const std::size_t e = inst.edge_index(from, to);
    const EdgeBasis& basis = inst.edge(e);
    const bool forward = from < to;
    return forward != c.bit(e) ? basis.p1 : basis.p2;
}

std::vector<Polynomial> choice_polys(const SpinorInstance& inst, const Choice& c) {
    if (c.edges != inst.edge_count())
        throw DimensionError("choice has " + std::to_string(c.edges) + " bits, instance has " +
                             std::to_string(inst.edge_count()) + " edges");
    const std::size_t n = inst.n();
    std::vector<Polynomial> polys;
    polys.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial acc = Polynomial::constant(1, n);
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) acc = poly_mul(acc, oriented_spinor(inst, c, i, j), n);
        polys.push_back(std::move(acc));
    }
    return polys;
}

Rational choice_det(const SpinorInstance& inst, const Choice& c) { return poly_det(choice_polys(inst, c)); }

SvrtanReport verify_svrtan(const SpinorInstance& inst, const EngineOptions& options) {
    const std::size_t m = inst.edge_count();
    const std::uint64_t total = choice_total(m);
    check_term_budget(total, options, "Svrtan sum over " + std::to_string(m) + " edges");

    SvrtanReport report;
    report.lhs = chunked_reduce<Rational>(
        total, options.threads, Rational(),
        [&](std::uint64_t begin, std::uint64_t end) {
            Rational acc;
            for (std::uint64_t bits = begin; bits < end; ++bits) {
                const Choice c{bits, m};
                const Rational d = choice_det(inst, c);
                if (d.is_zero()) continue;
                if (c.sign() > 0)
                    acc += d;
                else
                    acc -= d;
            }
            return acc;
        },
        [](Rational acc, const Rational& part) { return acc += part; });

    report.edge_det_product = 1;
    for (const auto& e : inst.edges()) report.edge_det_product *= e.det();
    report.rhs = factorial_rational(inst.n()) * report.edge_det_product;
    report.terms = total;
    report.holds = report.lhs == report.rhs;
    return report;
}

std::vector<std::size_t> out_degrees(std::size_t n, const Choice& c) {
    std::vector<std::size_t> out(n, 0);
    std::size_t e = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j, ++e) ++out[c.bit(e) ? j : i];
    return out;
}

bool is_transitive_tournament(std::size_t n, const Choice& c) {
    auto degrees = out_degrees(n, c);
    std::sort(degrees.begin(), degrees.end());
    for (std::size_t r = 0; r < n; ++r)
        if (degrees[r] != r) return false;
    return true;
}

CensusResult nonzero_term_census(std::size_t n, const EngineOptions& options) {
    const SpinorInstance inst = SpinorInstance::identity(n);
    const std::size_t m = inst.edge_count();
    const std::uint64_t total = choice_total(m);
    check_term_budget(total, options, "census over " + std::to_string(m) + " edges");

    CensusResult init;
    CensusResult result = chunked_reduce<CensusResult>(
        total, options.threads, init,
        [&](std::uint64_t begin, std::uint64_t end) {
            CensusResult part;
            for (std::uint64_t bits = begin; bits < end; ++bits) {
                const Choice c{bits, m};
                const Rational d = choice_det(inst, c);
                if (d.is_zero()) continue;
                ++part.nonzero;
                if (!is_transitive_tournament(n, c)) ++part.nonzero_non_transitive;
                if (c.sign() > 0)
                    part.signed_sum += d;
                else
                    part.signed_sum -= d;
            }
            return part;
        },
        [](CensusResult acc, const CensusResult& part) {
            acc.nonzero += part.nonzero;
            acc.nonzero_non_transitive += part.nonzero_non_transitive;
            acc.signed_sum += part.signed_sum;
            return acc;
        });
    result.total = total;
    return result;
}

GrayChoiceWalker::GrayChoiceWalker(const SpinorInstance& inst, bool incremental)
    : inst_(inst), incremental_(incremental), choice_{0, inst.edge_count()}, total_(choice_total(inst.edge_count())) {
    polys_ = choice_polys(inst_, choice_);
}

Polynomial GrayChoiceWalker::vertex_poly(std::size_t vertex) const {
    const std::size_t n = inst_.n();
    Polynomial acc = Polynomial::constant(1, n);
    for (std::size_t j = 0; j < n; ++j)
        if (j != vertex) acc = poly_mul(acc, oriented_spinor(inst_, choice_, vertex, j), n);
    return acc;
}

void GrayChoiceWalker::advance() {
    if (done()) return;
    ++step_;
    if (done()) return;
    const auto flipped = static_cast<std::size_t>(std::countr_zero(step_));
    choice_.bits ^= std::uint64_t{1} << flipped;
    if (incremental_) {
        const auto [i, j] = inst_.edge_vertices(flipped);
        polys_[i] = vertex_poly(i);
        polys_[j] = vertex_poly(j);
    } else {
        polys_ = choice_polys(inst_, choice_);
    }
}

SvrtanSearchResult svrtan_search(const SpinorInstance& inst, const SearchOptions& options) {
    SvrtanSearchResult result;
    for (GrayChoiceWalker walk(inst, options.incremental); !walk.done(); walk.advance()) {
        if (++result.nodes > options.node_cap)
            throw BudgetExceeded("svrtan search exceeds the node cap", result.nodes, options.node_cap);
        Rational d = poly_det(walk.polys());
        if (!d.is_zero()) {
            result.status = SearchStatus::found;
            result.choice = walk.choice();
            result.det = std::move(d);
            return result;
        }
    }
    return result;
}

SvrtanForm::SvrtanForm(std::size_t n) : n_(n), shape_(Shape::uniform(2, edge_count(n))) {
    if (n == 0) throw DimensionError("Svrtan form on zero vertices");
}

std::string SvrtanForm::description() const {
    return "Svrtan base-choice determinant, n=" + std::to_string(n_);
}

SpinorInstance spinor_from_tuple(std::size_t n, const MatrixTuple& a) {
    if (a.shape() != Shape::uniform(2, edge_count(n)))
        throw DimensionError("tuple of shape " + a.shape().to_string() + " is not a spinor tuple for n=" +
                             std::to_string(n));
    std::vector<EdgeBasis> edges;
    edges.reserve(a.blocks());
    for (std::size_t e = 0; e < a.blocks(); ++e)
        edges.push_back({Polynomial::linear(a[e](0, 0), a[e](1, 0)), Polynomial::linear(a[e](0, 1), a[e](1, 1))});
    return SpinorInstance(n, std::move(edges));
}

MatrixTuple tuple_from_spinor(const SpinorInstance& inst) {
    std::vector<Matrix> blocks;
    blocks.reserve(inst.edge_count());
    for (const auto& e : inst.edges()) blocks.push_back(Matrix{{e.p1[0], e.p2[0]}, {e.p1[1], e.p2[1]}});
    return MatrixTuple(std::move(blocks));
}

Rational SvrtanForm::evaluate(const MatrixTuple& a) const {
    return choice_det(spinor_from_tuple(n_, a), Choice{0, edge_count(n_)});
}

std::unique_ptr<BoundForm> SvrtanForm::bind(const MatrixTuple& a) const {
    return std::make_unique<SvrtanBound>(spinor_from_tuple(n_, a));
}

EngineInstance as_engine_instance(const SpinorInstance& inst) {
    return EngineInstance{SvrtanForm(inst.n()), tuple_from_spinor(inst)};
}

} // namespace altsum
