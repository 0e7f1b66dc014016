#include "altsum/onn.hpp"

#include <array>
#include <bit>
#include <limits>
#include <map>
#include <string>

#include "altsum/determinant.hpp"
#include "altsum/errors.hpp"
#include "altsum/parallel.hpp"

namespace altsum {

namespace {

constexpr std::size_t max_latin_order = 7;

// Transversal determinants for every column tuple, laid out with the column
// taken from matrix 0 most significant.
class TransversalTable {
public:
    static constexpr std::uint64_t max_entries = 1u << 16;

    static bool fits(std::size_t n) {
        std::uint64_t entries = 1;
        for (std::size_t i = 0; i < n; ++i) entries = saturating_mul(entries, n);
        return entries <= max_entries;
    }

    explicit TransversalTable(const MatrixTuple& a) : n_(a.blocks()) {
        std::size_t entries = 1;
        for (std::size_t i = 0; i < n_; ++i) entries *= n_;
        dets_.reserve(entries);
        std::vector<std::size_t> columns(n_, 0);
        for (std::size_t idx = 0; idx < entries; ++idx) {
            std::size_t rest = idx;
            for (std::size_t i = n_; i-- > 0;) {
                columns[i] = rest % n_;
                rest /= n_;
            }
            dets_.push_back(det(transversal_matrix(a, columns)));
        }
    }

    const Rational& at(std::size_t index) const { return dets_[index]; }

private:
    std::size_t n_;
    std::vector<Rational> dets_;
};

class ColorfulBound final : public BoundForm {
public:
    explicit ColorfulBound(const MatrixTuple& a) : n_(a.blocks()), table_(a) {}

    Rational evaluate(const SignedPermTuple& sigma) const override {
        Rational product = 1;
        for (std::size_t j = 0; j < n_; ++j) {
            std::size_t index = 0;
            for (std::size_t i = 0; i < n_; ++i) index = index * n_ + sigma.parts[i](j);
            const Rational& d = table_.at(index);
            if (d.is_zero()) return Rational();
            product *= d;
        }
        return product;
    }

private:
    std::size_t n_;
    TransversalTable table_;
};

struct LatinDfs {
    std::size_t n;
    std::uint32_t full;
    std::array<std::uint32_t, max_latin_order> col_used{};
    std::int64_t signed_count = 0;
    std::uint64_t squares = 0;

    // parity: 0 even, 1 odd, over inversions of all rows and columns placed so far.
    void fill(std::size_t cell, std::uint32_t row_used, unsigned parity) {
        if (cell == n * n) {
            ++squares;
            signed_count += parity ? -1 : 1;
            return;
        }
        const std::size_t c = cell % n;
        if (c == 0) row_used = 0;
        std::uint32_t avail = full & ~row_used & ~col_used[c];
        while (avail) {
            const unsigned v = static_cast<unsigned>(std::countr_zero(avail));
            avail &= avail - 1;
            const unsigned added = static_cast<unsigned>(std::popcount(row_used >> (v + 1)) +
                                                         std::popcount(col_used[c] >> (v + 1)));
            col_used[c] |= 1u << v;
            fill(cell + 1, row_used | (1u << v), parity ^ (added & 1u));
            col_used[c] &= ~(1u << v);
        }
    }
};

class RotaBacktrack {
public:
    RotaBacktrack(const ColorfulInstance& inst, const SearchOptions& options)
        : inst_(inst), n_(inst.n()), cap_(options.node_cap), used_(n_, 0), chosen_(n_, std::vector<std::size_t>(n_)) {}

    bool run() { return place(0); }

    std::uint64_t nodes() const { return nodes_; }
    const std::vector<std::vector<std::size_t>>& chosen() const { return chosen_; }

private:
    bool place(std::size_t position) {
        if (position == n_) return true;
        std::vector<std::size_t> tuple(n_);
        return choose(position, 0, tuple);
    }

    bool choose(std::size_t position, std::size_t matrix, std::vector<std::size_t>& tuple) {
        if (matrix == n_) {
            if (++nodes_ > cap_) throw BudgetExceeded("rota search exceeds the node cap", nodes_, cap_);
            if (determinant(tuple).is_zero()) return false;
            for (std::size_t i = 0; i < n_; ++i) {
                used_[i] |= std::uint64_t{1} << tuple[i];
                chosen_[position][i] = tuple[i];
            }
            if (place(position + 1)) return true;
            for (std::size_t i = 0; i < n_; ++i) used_[i] &= ~(std::uint64_t{1} << tuple[i]);
            return false;
        }
        for (std::size_t c = 0; c < n_; ++c) {
            if (used_[matrix] & (std::uint64_t{1} << c)) continue;
            tuple[matrix] = c;
            if (choose(position, matrix + 1, tuple)) return true;
        }
        return false;
    }

    const Rational& determinant(const std::vector<std::size_t>& tuple) {
        auto it = memo_.find(tuple);
        if (it == memo_.end()) it = memo_.emplace(tuple, det(transversal_matrix(inst_.matrices(), tuple))).first;
        return it->second;
    }

    const ColorfulInstance& inst_;
    std::size_t n_;
    std::uint64_t cap_;
    std::uint64_t nodes_ = 0;
    std::vector<std::uint64_t> used_;
    std::vector<std::vector<std::size_t>> chosen_;  // chosen_[position][matrix]
    std::map<std::vector<std::size_t>, Rational> memo_;
};

} // namespace

LatinSquare LatinSquare::from_rows(const std::vector<std::vector<std::size_t>>& rows) {
    const std::size_t n = rows.size();
    if (n == 0) throw InputError("empty Latin square");
    std::vector<std::size_t> cells;
    cells.reserve(n * n);
    for (const auto& row : rows) {
        if (row.size() != n) throw InputError("Latin square rows must have length " + std::to_string(n));
        cells.insert(cells.end(), row.begin(), row.end());
    }
    for (std::size_t r = 0; r < n; ++r) {
        std::vector<bool> row_seen(n + 1, false);
        std::vector<bool> col_seen(n + 1, false);
        for (std::size_t c = 0; c < n; ++c) {
            const std::size_t a = cells[r * n + c];
            const std::size_t b = cells[c * n + r];
            if (a < 1 || a > n || b < 1 || b > n) throw InputError("Latin square symbol out of range");
            if (row_seen[a]) throw InputError("repeated symbol in row " + std::to_string(r + 1));
            if (col_seen[b]) throw InputError("repeated symbol in column " + std::to_string(r + 1));
            row_seen[a] = col_seen[b] = true;
        }
    }
    return LatinSquare(n, std::move(cells));
}

LatinSquare LatinSquare::transposed() const {
    std::vector<std::size_t> cells(n_ * n_);
    for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t c = 0; c < n_; ++c) cells[c * n_ + r] = cells_[r * n_ + c];
    return LatinSquare(n_, std::move(cells));
}

int latin_sign(const LatinSquare& square) {
    const std::size_t n = square.order();
    int sign = 1;
    std::vector<std::size_t> line(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) line[c] = square(r, c) - 1;
        sign *= inversion_parity(line);
    }
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = 0; r < n; ++r) line[r] = square(r, c) - 1;
        sign *= inversion_parity(line);
    }
    return sign;
}

std::optional<std::uint64_t> latin_square_count(std::size_t n) {
    // Number of Latin squares of order 0..7.
    static constexpr std::array<std::uint64_t, max_latin_order + 1> counts{
        1, 1, 2, 12, 576, 161'280, 812'851'200, 61'479'419'904'000};
    if (n > max_latin_order) return std::nullopt;
    return counts[n];
}

LatinCount enumerate_latin_squares(std::size_t n, const EngineOptions& options) {
    if (n == 0) throw DimensionError("Latin squares of order 0");
    const auto expected = latin_square_count(n);
    if (!expected)
        throw BudgetExceeded("Latin square enumeration of order " + std::to_string(n) + " is unsupported",
                             std::numeric_limits<std::uint64_t>::max(), options.term_budget);
    check_term_budget(*expected, options, "Latin square enumeration of order " + std::to_string(n));

    const std::uint64_t first_rows = factorial(n);
    return chunked_reduce<LatinCount>(
        first_rows, options.threads, LatinCount{},
        [n](std::uint64_t begin, std::uint64_t end) {
            LatinCount partial;
            for (PlainChanges row(n, begin); !row.done() && row.rank() < end; row.advance()) {
                LatinDfs dfs{n, (1u << n) - 1};
                for (std::size_t c = 0; c < n; ++c) dfs.col_used[c] = 1u << row.current()(c);
                dfs.fill(n, (1u << n) - 1, row.current().parity > 0 ? 0u : 1u);
                partial.signed_count += dfs.signed_count;
                partial.squares += dfs.squares;
            }
            return partial;
        },
        [](LatinCount acc, const LatinCount& part) {
            acc.signed_count += part.signed_count;
            acc.squares += part.squares;
            return acc;
        });
}

std::int64_t alon_tarsi_count(std::size_t n, const EngineOptions& options) {
    return enumerate_latin_squares(n, options).signed_count;
}

ColorfulInstance::ColorfulInstance(MatrixTuple matrices) : matrices_(std::move(matrices)) {
    const std::size_t n = matrices_.blocks();
    if (n == 0) throw DimensionError("colorful instance with no matrices");
    for (std::size_t i = 0; i < n; ++i)
        if (matrices_[i].rows() != n)
            throw DimensionError("colorful instance with " + std::to_string(n) + " matrices needs " +
                                 std::to_string(n) + "x" + std::to_string(n) + " matrices");
}

ColorfulForm::ColorfulForm(std::size_t n) : n_(n), shape_(Shape::uniform(n, n)) {
    if (n == 0) throw DimensionError("colorful form of order 0");
}

std::string ColorfulForm::description() const { return "colorful product of transversal determinants, n=" + std::to_string(n_); }

Matrix transversal_matrix(const MatrixTuple& a, const std::vector<std::size_t>& columns) {
    const std::size_t n = a.blocks();
    if (columns.size() != n) throw DimensionError("transversal needs one column per matrix");
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].rows() != n) throw DimensionError("transversal of non-square family");
        for (std::size_t r = 0; r < n; ++r) m(r, i) = a[i](r, columns[i]);
    }
    return m;
}

Rational ColorfulForm::evaluate(const MatrixTuple& a) const {
    if (a.shape() != shape_) throw DimensionError("colorful form applied to a tuple of shape " + a.shape().to_string());
    Rational product = 1;
    for (std::size_t j = 0; j < n_; ++j) {
        product *= det(transversal_matrix(a, std::vector<std::size_t>(n_, j)));
        if (product.is_zero()) break;
    }
    return product;
}

std::unique_ptr<BoundForm> ColorfulForm::bind(const MatrixTuple& a) const {
    if (a.shape() != shape_) throw DimensionError("colorful form bound to a tuple of shape " + a.shape().to_string());
    if (!TransversalTable::fits(n_)) return MultilinearForm::bind(a);
    return std::make_unique<ColorfulBound>(a);
}

ColorfulForm colorful_form(std::size_t n) { return ColorfulForm(n); }

OnnReport verify_onn(const ColorfulInstance& instance, const EngineOptions& options) {
    const ColorfulForm form(instance.n());
    OnnReport report;
    report.lhs = alternating_sum(form, instance.matrices(), options);
    report.latin_signed_count = alon_tarsi_count(instance.n(), options);
    report.determinant_product = instance.matrices().determinant_product();
    report.rhs = Rational(static_cast<long>(report.latin_signed_count)) * report.determinant_product;
    report.terms = form.shape().group_order();
    report.holds = report.lhs == report.rhs;
    return report;
}

RotaResult rota_search(const ColorfulInstance& instance, const SearchOptions& options) {
    const std::size_t n = instance.n();
    if (n > 64) throw DimensionError("rota search supports at most 64 matrices");
    RotaBacktrack search(instance, options);
    RotaResult result;
    const bool found = search.run();
    result.nodes = search.nodes();
    if (!found) return result;

    std::vector<SignedPerm> parts;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> mapping(n);
        for (std::size_t j = 0; j < n; ++j) mapping[j] = search.chosen()[j][i];
        parts.push_back(SignedPerm::from_mapping(std::move(mapping)));
    }
    TransversalSelection selection{SignedPermTuple::from_parts(std::move(parts)), {}};
    for (std::size_t j = 0; j < n; ++j)
        selection.transversal_dets.push_back(det(transversal_matrix(instance.matrices(), search.chosen()[j])));
    result.status = SearchStatus::found;
    result.selection = std::move(selection);
    return result;
}

bool selection_is_valid(const ColorfulInstance& instance, const SignedPermTuple& sigma) {
    const std::size_t n = instance.n();
    if (sigma.parts.size() != n) return false;
    for (const auto& p : sigma.parts) {
        if (p.size() != n) return false;
        std::vector<bool> seen(n, false);
        for (auto v : p.mapping) {
            if (v >= n || seen[v]) return false;
            seen[v] = true;
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::size_t> columns(n);
        for (std::size_t i = 0; i < n; ++i) columns[i] = sigma.parts[i](j);
        if (det(transversal_matrix(instance.matrices(), columns)).is_zero()) return false;
    }
    return true;
}

} // namespace altsum
