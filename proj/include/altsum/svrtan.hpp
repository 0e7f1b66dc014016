#ifndef ALTSUM_SVRTAN_HPP
#define ALTSUM_SVRTAN_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "altsum/engine.hpp"
#include "altsum/matrix_tuple.hpp"
#include "altsum/onn.hpp"
#include "altsum/polynomial.hpp"

namespace altsum {

/// Ordered basis (p1, p2) of V_2 attached to one unordered edge {i, j}.
struct EdgeBasis {
    Polynomial p1;
    Polynomial p2;

    /// det of the 2x2 matrix with columns p1, p2 (row d = t^d coefficient).
    Rational det() const;

    friend bool operator==(const EdgeBasis&, const EdgeBasis&) = default;
};

/// Spinor bases on every edge of the complete graph on vertices 0..n-1.
///
/// Edges {i, j}, i < j, are indexed lexicographically: (0,1), (0,2), ...,
/// (0,n-1), (1,2), ... Vertices are 0-based here and 1-based in files.
class SpinorInstance {
public:
    /// Throws DimensionError unless there are exactly C(n,2) edges, each in V_2.
    SpinorInstance(std::size_t n, std::vector<EdgeBasis> edges);

    /// Every edge gets (1, t).
    static SpinorInstance identity(std::size_t n);

    std::size_t n() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const EdgeBasis& edge(std::size_t index) const { return edges_[index]; }
    const EdgeBasis& edge(std::size_t i, std::size_t j) const { return edges_[edge_index(i, j)]; }
    const std::vector<EdgeBasis>& edges() const { return edges_; }

    /// Index of {i, j} for i != j (order irrelevant).
    std::size_t edge_index(std::size_t i, std::size_t j) const;
    /// (i, j) with i < j for an edge index.
    std::pair<std::size_t, std::size_t> edge_vertices(std::size_t index) const;

    bool nonsingular() const;

    friend bool operator==(const SpinorInstance&, const SpinorInstance&) = default;

private:
    std::size_t n_;
    std::vector<EdgeBasis> edges_;
};

/// C(n, 2).
std::size_t edge_count(std::size_t n);

/// One bit per edge. Bit 0 on {i, j}, i < j: e_ij carries p1 and e_ji carries
/// p2; bit 1 swaps them.
struct Choice {
    std::uint64_t bits = 0;
    std::size_t edges = 0;

    int sign() const;
    bool bit(std::size_t edge) const { return (bits >> edge) & 1u; }

    friend bool operator==(const Choice&, const Choice&) = default;
};

/// Largest supported edge count (bits fit in one word).
inline constexpr std::size_t max_choice_edges = 63;

/// The spinor carried by the oriented edge from `from` to `to` under c.
const Polynomial& oriented_spinor(const SpinorInstance& inst, const Choice& c, std::size_t from, std::size_t to);

/// p^c_i = product over j != i of the spinor on e_ij, embedded in V_n.
/// Throws DimensionError if c.edges != C(n,2).
std::vector<Polynomial> choice_polys(const SpinorInstance& inst, const Choice& c);

/// det(p^c_1, ..., p^c_n).
Rational choice_det(const SpinorInstance& inst, const Choice& c);

struct SvrtanReport {
    Rational lhs;
    Rational rhs;
    Rational edge_det_product;
    std::uint64_t terms = 0;
    bool holds = false;
};

/// sum over choices of sgn(c) det(p^c) against n! prod_{i<j} edge_det.
/// Parallel over contiguous ranges of choice words (i.e. by bit prefix).
SvrtanReport verify_svrtan(const SpinorInstance& inst, const EngineOptions& options = {});

struct CensusResult {
    std::uint64_t total = 0;
    std::uint64_t nonzero = 0;
    /// Nonzero choices whose orientation is not a transitive tournament.
    std::uint64_t nonzero_non_transitive = 0;
    /// Sum of sgn(c) det(p^c) over all choices.
    Rational signed_sum;
};

/// Orientation of c: bit 0 on {i, j}, i < j, orients i -> j. Returns the out-degree of each vertex.
std::vector<std::size_t> out_degrees(std::size_t n, const Choice& c);

/// Out-degrees are a permutation of 0..n-1.
bool is_transitive_tournament(std::size_t n, const Choice& c);

/// Counts nonzero terms of the identity-spinor sum and checks each survivor
/// is a transitive tournament.
CensusResult nonzero_term_census(std::size_t n, const EngineOptions& options = {});

/// Reflected-binary walk over the choices: step k visits k ^ (k >> 1), so
/// consecutive choices differ in one edge and only the two endpoint
/// polynomials need recomputing.
class GrayChoiceWalker {
public:
    GrayChoiceWalker(const SpinorInstance& inst, bool incremental);

    const Choice& choice() const { return choice_; }
    const std::vector<Polynomial>& polys() const { return polys_; }
    std::uint64_t step_index() const { return step_; }
    bool done() const { return step_ >= total_; }

    /// Moves to the next choice; done() afterwards when the walk is complete.
    void advance();

private:
    Polynomial vertex_poly(std::size_t vertex) const;

    const SpinorInstance& inst_;
    bool incremental_;
    Choice choice_;
    std::vector<Polynomial> polys_;
    std::uint64_t step_ = 0;
    std::uint64_t total_ = 0;
};

struct SvrtanSearchResult {
    SearchStatus status = SearchStatus::exhausted;
    std::optional<Choice> choice;
    Rational det;
    std::uint64_t nodes = 0;
};

/// First choice in reflected-binary order with nonzero det(p^c). Throws
/// BudgetExceeded past options.node_cap candidates.
SvrtanSearchResult svrtan_search(const SpinorInstance& inst, const SearchOptions& options = {});

/// f(A) = det(p^{c0}_1, ..., p^{c0}_n), reading block e of A as the edge basis
/// (column 0 = p1, column 1 = p2) of edge e.
class SvrtanForm final : public MultilinearForm {
public:
    explicit SvrtanForm(std::size_t n);

    const Shape& shape() const override { return shape_; }
    std::string description() const override;
    Rational evaluate(const MatrixTuple& a) const override;
    std::unique_ptr<BoundForm> bind(const MatrixTuple& a) const override;

    std::size_t n() const { return n_; }

private:
    std::size_t n_;
    Shape shape_;
};

/// Block e of a tuple of shape (2, ..., 2) as an edge basis.
SpinorInstance spinor_from_tuple(std::size_t n, const MatrixTuple& a);
MatrixTuple tuple_from_spinor(const SpinorInstance& inst);

struct EngineInstance {
    SvrtanForm form;
    MatrixTuple matrices;
};

/// The pair (f, A) whose alternating sum over (Sigma_2)^{C(n,2)} reproduces
/// the signed choice sum: swapping block e corresponds to bit e set.
EngineInstance as_engine_instance(const SpinorInstance& inst);

} // namespace altsum

#endif // ALTSUM_SVRTAN_HPP
