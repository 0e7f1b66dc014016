#ifndef ALTSUM_RUNNER_HPP
#define ALTSUM_RUNNER_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "altsum/instance.hpp"
#include "altsum/report.hpp"

namespace altsum {

enum class Command {
    verify_general,
    invariant,
    alon_tarsi,
    verify_onn,
    rota_search,
    verify_svrtan,
    svrtan_search,
    census,
};

/// Dashed names as used on the command line ("verify-general", ...).
std::string command_name(Command command);
/// InputError on an unknown name.
Command parse_command(std::string_view name);

/// Which form `invariant` and `verify-general` use when no instance is given.
enum class FormKind { dense, colorful, svrtan };

std::string form_name(FormKind form);
FormKind parse_form(std::string_view name);

struct RunConfig {
    Command command = Command::verify_general;
    std::optional<std::size_t> n;
    std::optional<Shape> shape;
    std::optional<FormKind> form;
    std::uint64_t seed = 0;
    std::size_t threads = 1;
    std::uint64_t term_budget = 100'000'000;
    std::uint64_t node_cap = 10'000'000;
    bool incremental = false;
    bool timing = false;
};

/// Runs one command. `instance` may be null, in which case the command
/// builds what it needs from n / shape / form / seed.
///
/// Throws InputError, DimensionError or DegreeOverflow for bad input and
/// BudgetExceeded when a budget is too small; see exit_code_for.
Report run(const RunConfig& config, const Instance* instance);

/// 2 for input problems, 3 for budget exhaustion, 1 for anything else.
int exit_code_for(const std::exception& error);

} // namespace altsum

#endif // ALTSUM_RUNNER_HPP
