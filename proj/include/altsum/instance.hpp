#ifndef ALTSUM_INSTANCE_HPP
#define ALTSUM_INSTANCE_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>

#include "altsum/engine.hpp"
#include "altsum/onn.hpp"
#include "altsum/svrtan.hpp"

namespace altsum {

/// A bare matrix tuple, optionally carrying the dense form to evaluate on it.
struct MatrixTupleInstance {
    MatrixTuple matrices;
    std::optional<DenseTensorForm> form;
};

using Instance = std::variant<MatrixTupleInstance, ColorfulInstance, SpinorInstance>;

enum class InstanceKind { matrix_tuple, colorful, spinor };

InstanceKind kind_of(const Instance& instance);
std::string kind_name(InstanceKind kind);
/// "matrix-tuple", "colorful" or "spinor"; InputError otherwise.
InstanceKind parse_kind(std::string_view name);

/// Parses the JSON instance schema:
///
///   {"kind": "matrix-tuple", "shape": [2, 2], "matrices": [[["1", "0"], ...], ...],
///    "form": {"type": "dense", "coeffs": ["1", ...]}}            (form optional)
///   {"kind": "colorful", "n": 3, "matrices": [...]}
///   {"kind": "spinor", "n": 3,
///    "edges": [{"i": 1, "j": 2, "p1": ["c0", "c1"], "p2": ["c0", "c1"]}, ...]}
///
/// Matrices are lists of rows; scalars are rational strings; spinors are
/// [constant, t-coefficient]; vertices are 1-based with i < j. Errors are
/// InputError naming the line/column (syntax) or the JSON path (schema).
Instance parse_instance(std::string_view json_text);

/// Canonical JSON text (sorted keys, two-space indent, canonical rationals).
std::string instance_to_json(const Instance& instance);

/// mt19937_64 with a fixed rejection-sampling reduction, so a seed gives the
/// same stream on every platform and standard library.
class InstanceRng {
public:
    explicit InstanceRng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);

private:
    std::mt19937_64 engine_;
};

/// Entries are drawn row-major, uniform in [-9, 9].
inline constexpr std::int64_t random_entry_bound = 9;
/// Resampling attempts per matrix or edge before giving up with BudgetExceeded.
inline constexpr std::uint64_t random_retry_cap = 1000;

/// n nonsingular n x n matrices; each singular draw is resampled.
ColorfulInstance random_colorful(std::size_t n, std::uint64_t seed);
/// C(n,2) edges in canonical order, each (p1, p2) resampled until nonsingular.
SpinorInstance random_spinor(std::size_t n, std::uint64_t seed);
/// Nonsingular matrices of the given shape followed by a dense form drawn
/// from the same stream.
MatrixTupleInstance random_matrix_tuple(const Shape& shape, std::uint64_t seed);

DenseTensorForm random_dense_form(const Shape& shape, InstanceRng& rng, std::int64_t bound = random_entry_bound);
Matrix random_matrix(std::size_t rows, std::size_t cols, InstanceRng& rng, std::int64_t bound = random_entry_bound);

/// 64-bit FNV-1a of the bytes, as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

} // namespace altsum

#endif // ALTSUM_INSTANCE_HPP
