#include "altsum/perms.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "altsum/errors.hpp"

namespace altsum {

namespace {

// Swaps the entries that take plain-changes rank `rank` to `rank + 1`.
// Requires rank + 1 < n!.
//
// At level m the largest value m-1 sweeps across the block of values < m
// while the sub-permutation of the smaller values holds still. If it is not
// at the end of its sweep it moves one step; otherwise the sub-permutation
// advances. Values above the active level sit at the ends of the sequence,
// so block neighbours are sequence neighbours.
void sjt_step(std::vector<std::size_t>& seq, std::vector<std::size_t>& pos, std::uint64_t rank) {
    std::size_t m = seq.size();
    std::uint64_t r = rank;
    while (m > 1) {
        const std::uint64_t k = r % m;
        const std::uint64_t q = r / m;
        if (k + 1 < m) {
            const std::size_t value = m - 1;
            const std::size_t p = pos[value];
            const std::size_t other = (q % 2 == 0) ? p - 1 : p + 1;
            std::swap(seq[p], seq[other]);
            pos[seq[p]] = p;
            pos[seq[other]] = other;
            return;
        }
        r = q;
        --m;
    }
}

void check_same_shape(const SignedPermTuple& sigma, const MatrixTuple& a) {
    if (sigma.parts.size() != a.blocks())
        throw DimensionError("permutation tuple has " + std::to_string(sigma.parts.size()) +
                             " factors, matrix tuple has " + std::to_string(a.blocks()));
    for (std::size_t i = 0; i < a.blocks(); ++i)
        if (sigma.parts[i].size() != a[i].cols())
            throw DimensionError("factor " + std::to_string(i) + " size does not match its matrix");
}

} // namespace

SignedPerm SignedPerm::identity(std::size_t n) {
    SignedPerm p;
    p.mapping.resize(n);
    std::iota(p.mapping.begin(), p.mapping.end(), std::size_t{0});
    return p;
}

SignedPerm SignedPerm::from_mapping(std::vector<std::size_t> mapping) {
    std::vector<bool> seen(mapping.size(), false);
    for (auto v : mapping) {
        if (v >= mapping.size() || seen[v]) throw InputError("mapping is not a permutation");
        seen[v] = true;
    }
    SignedPerm p;
    p.parity = inversion_parity(mapping);
    p.mapping = std::move(mapping);
    return p;
}

int inversion_parity(std::span<const std::size_t> mapping) {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < mapping.size(); ++i)
        for (std::size_t j = i + 1; j < mapping.size(); ++j)
            if (mapping[i] > mapping[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

SignedPerm compose(const SignedPerm& a, const SignedPerm& b) {
    if (a.size() != b.size()) throw DimensionError("composing permutations of different degree");
    SignedPerm out;
    out.mapping.resize(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) out.mapping[j] = a.mapping[b.mapping[j]];
    out.parity = a.parity * b.parity;
    return out;
}

SignedPerm inverse(const SignedPerm& p) {
    SignedPerm out;
    out.mapping.resize(p.size());
    for (std::size_t j = 0; j < p.size(); ++j) out.mapping[p.mapping[j]] = j;
    out.parity = p.parity;
    return out;
}

SignedPermTuple SignedPermTuple::identity(const Shape& shape) {
    SignedPermTuple t;
    for (auto n : shape.sizes()) t.parts.push_back(SignedPerm::identity(n));
    return t;
}

SignedPermTuple SignedPermTuple::from_parts(std::vector<SignedPerm> parts) {
    SignedPermTuple t;
    t.parts = std::move(parts);
    for (const auto& p : t.parts) t.parity *= p.parity;
    return t;
}

Shape SignedPermTuple::shape() const {
    std::vector<std::size_t> sizes;
    for (const auto& p : parts) sizes.push_back(p.size());
    return Shape(std::move(sizes));
}

SignedPermTuple compose(const SignedPermTuple& a, const SignedPermTuple& b) {
    if (a.parts.size() != b.parts.size()) throw DimensionError("composing tuples of different length");
    std::vector<SignedPerm> parts;
    for (std::size_t i = 0; i < a.parts.size(); ++i) parts.push_back(compose(a.parts[i], b.parts[i]));
    return SignedPermTuple::from_parts(std::move(parts));
}

SignedPermTuple inverse(const SignedPermTuple& p) {
    std::vector<SignedPerm> parts;
    for (const auto& part : p.parts) parts.push_back(inverse(part));
    return SignedPermTuple::from_parts(std::move(parts));
}

std::uint64_t sjt_rank(const SignedPerm& p) {
    const std::size_t n = p.size();
    std::uint64_t r = 0;
    for (std::size_t j = 1; j < n; ++j) {
        // k: 1-based position of value j among the values <= j.
        std::uint64_t k = 1;
        for (std::size_t i = 0; p.mapping[i] != j; ++i)
            if (p.mapping[i] < j) ++k;
        const std::uint64_t m = j + 1;
        r = (r % 2 == 0) ? m * r + m - k : m * r + k - 1;
    }
    return r;
}

SignedPerm sjt_unrank(std::size_t n, std::uint64_t rank) {
    if (n == 0) throw DimensionError("permutations of an empty set");
    const std::uint64_t order = factorial(n);
    if (rank >= order) throw std::out_of_range("plain-changes rank out of range");

    std::vector<std::size_t> seq{0};
    std::uint64_t sub_rank = 0;
    for (std::size_t m = 2; m <= n; ++m) {
        // Rank restricted to values < m is rank / (n! / m!).
        const std::uint64_t level_rank = rank / (order / factorial(m));
        const std::uint64_t k = level_rank - m * sub_rank;
        const std::size_t insert_at = (sub_rank % 2 == 0) ? m - 1 - k : k;
        seq.insert(seq.begin() + static_cast<std::ptrdiff_t>(insert_at), m - 1);
        sub_rank = level_rank;
    }
    SignedPerm p;
    p.mapping = std::move(seq);
    p.parity = rank % 2 == 0 ? 1 : -1;
    return p;
}

PlainChanges::PlainChanges(std::size_t n, std::uint64_t start_rank) : n_(n), order_(factorial(n)) {
    if (n == 0) throw DimensionError("permutations of an empty set");
    reset(start_rank);
}

void PlainChanges::reset(std::uint64_t rank) {
    rank_ = rank;
    if (rank >= order_) return;
    perm_ = sjt_unrank(n_, rank);
    position_.assign(perm_.size(), 0);
    for (std::size_t j = 0; j < perm_.size(); ++j) position_[perm_.mapping[j]] = j;
}

void PlainChanges::advance() {
    if (done()) return;
    if (rank_ + 1 < order_) {
        sjt_step(perm_.mapping, position_, rank_);
        perm_.parity = -perm_.parity;
    }
    ++rank_;
}

PlainChanges enumerate_signed(std::size_t n) { return PlainChanges(n); }

ProductStream::ProductStream(const Shape& shape) : ProductStream(shape, 0, shape.group_order()) {}

ProductStream::ProductStream(const Shape& shape, std::uint64_t begin, std::uint64_t end)
    : shape_(shape), order_(shape.group_order()), end_(std::min(end, shape.group_order())) {
    for (auto n : shape_.sizes()) factor_orders_.push_back(factorial(n));
    seek(begin);
}

void ProductStream::seek(std::uint64_t rank) {
    rank_ = rank;
    if (rank_ >= end_) return;
    const std::size_t k = shape_.blocks();
    factor_ranks_.assign(k, 0);
    std::uint64_t rest = rank;
    for (std::size_t i = k; i-- > 0;) {
        factor_ranks_[i] = rest % factor_orders_[i];
        rest /= factor_orders_[i];
    }
    current_.parts.clear();
    positions_.clear();
    current_.parity = 1;
    for (std::size_t i = 0; i < k; ++i) {
        current_.parts.push_back(sjt_unrank(shape_.size(i), factor_ranks_[i]));
        current_.parity *= current_.parts.back().parity;
        std::vector<std::size_t> pos(shape_.size(i));
        for (std::size_t j = 0; j < pos.size(); ++j) pos[current_.parts[i].mapping[j]] = j;
        positions_.push_back(std::move(pos));
    }
}

void ProductStream::advance() {
    if (done()) return;
    ++rank_;
    if (rank_ >= end_) return;
    // Odometer: the last factor moves fastest; a factor that completes its
    // sweep restarts at the identity and carries into the one before it.
    for (std::size_t i = shape_.blocks(); i-- > 0;) {
        SignedPerm& part = current_.parts[i];
        if (factor_ranks_[i] + 1 < factor_orders_[i]) {
            sjt_step(part.mapping, positions_[i], factor_ranks_[i]);
            ++factor_ranks_[i];
            part.parity = -part.parity;
            current_.parity = -current_.parity;
            return;
        }
        factor_ranks_[i] = 0;
        if (part.parity < 0) current_.parity = -current_.parity;
        part = SignedPerm::identity(part.size());
        std::iota(positions_[i].begin(), positions_[i].end(), std::size_t{0});
    }
}

ProductStream enumerate_product(const Shape& shape) { return ProductStream(shape); }

MatrixTuple act(const SignedPermTuple& sigma, const MatrixTuple& a) {
    check_same_shape(sigma, a);
    std::vector<Matrix> out;
    out.reserve(a.blocks());
    for (std::size_t b = 0; b < a.blocks(); ++b) {
        const Matrix& src = a[b];
        Matrix m(src.rows(), src.cols());
        for (std::size_t c = 0; c < src.cols(); ++c) {
            const std::size_t dst = sigma.parts[b](c);
            for (std::size_t r = 0; r < src.rows(); ++r) m(r, dst) = src(r, c);
        }
        out.push_back(std::move(m));
    }
    return MatrixTuple(std::move(out));
}

MatrixTuple act_inverse(const SignedPermTuple& sigma, const MatrixTuple& a) {
    check_same_shape(sigma, a);
    std::vector<Matrix> out;
    out.reserve(a.blocks());
    for (std::size_t b = 0; b < a.blocks(); ++b) {
        const Matrix& src = a[b];
        Matrix m(src.rows(), src.cols());
        for (std::size_t j = 0; j < src.cols(); ++j) {
            const std::size_t from = sigma.parts[b](j);
            for (std::size_t r = 0; r < src.rows(); ++r) m(r, j) = src(r, from);
        }
        out.push_back(std::move(m));
    }
    return MatrixTuple(std::move(out));
}

} // namespace altsum
