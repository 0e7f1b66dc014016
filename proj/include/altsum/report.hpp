#ifndef ALTSUM_REPORT_HPP
#define ALTSUM_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace altsum {

/// Outcome of one command. lhs/rhs hold canonical rational text, so for
/// identity checks the verdict is true exactly when the two strings match.
/// Nothing in a report depends on the worker count; elapsed_ms is only
/// filled in when timing was requested.
struct Report {
    std::string command;
    /// fnv1a64 of the command name and the canonical input.
    std::string inputs_digest;
    std::optional<std::string> lhs;
    std::optional<std::string> rhs;
    std::optional<std::string> value;
    bool verdict = false;
    nlohmann::json witness;  // null when the command has none
    nlohmann::json details = nlohmann::json::object();
    std::uint64_t term_count = 0;
    std::vector<std::string> notes;
    std::optional<double> elapsed_ms;
    int exit_code = 0;

    nlohmann::json to_json() const;
    /// Throws InputError on a document that is not a report.
    static Report from_json(const nlohmann::json& doc);
    std::string to_text() const;

    friend bool operator==(const Report&, const Report&) = default;
};

} // namespace altsum

#endif // ALTSUM_REPORT_HPP
