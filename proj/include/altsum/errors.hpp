#ifndef ALTSUM_ERRORS_HPP
#define ALTSUM_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace altsum {

/// Operand sizes do not fit together (non-square matrix, shape mismatch, ...).
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A polynomial product does not fit in its ambient space V_m.
class DegreeOverflow : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed external input: bad rational literal, bad JSON, failed validation.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A computation would exceed its configured term or node cap.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(std::string what, std::uint64_t required, std::uint64_t limit)
        : std::runtime_error(std::move(what) + " (required " + std::to_string(required) +
                             ", limit " + std::to_string(limit) + ")"),
          required_(required),
          limit_(limit) {}

    /// Saturates at UINT64_MAX when the true count does not fit.
    std::uint64_t required() const noexcept { return required_; }
    std::uint64_t limit() const noexcept { return limit_; }

private:
    std::uint64_t required_;
    std::uint64_t limit_;
};

} // namespace altsum

#endif // ALTSUM_ERRORS_HPP
